// Seeded, serializable experiment record: parameters, result counters, and
// named pass/fail checks. Replaying with the same seed reproduces the JSON
// byte-for-byte.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qsim {

struct Check {
    std::string name;
    nlohmann::json expected;
    nlohmann::json observed;
    bool pass = false;
};

struct ExperimentReport {
    std::string experiment;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    nlohmann::json results = nlohmann::json::object();
    std::vector<Check> checks;

    void add_check(const std::string& name, nlohmann::json expected,
                   nlohmann::json observed, bool pass);

    // pass iff |expected - observed| <= tol
    void check_near(const std::string& name, double expected, double observed,
                    double tol);

    // pass iff |expected - observed| <= 3 * sigma
    void check_within_3sigma(const std::string& name, double expected,
                             double observed, double sigma);

    void check_equal(const std::string& name, const nlohmann::json& expected,
                     const nlohmann::json& observed);

    bool all_pass() const;
    std::vector<std::string> failing_checks() const;

    nlohmann::json to_json() const;
    std::string to_json_string() const; // canonical: sorted keys, 2-space indent
    std::string to_csv() const;         // flat key,value lines
};

} // namespace qsim
