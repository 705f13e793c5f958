#include "qsim/report.hpp"

#include <cmath>
#include <sstream>

namespace qsim {

void ExperimentReport::add_check(const std::string& name, nlohmann::json expected,
                                 nlohmann::json observed, bool pass) {
    checks.push_back(Check{name, std::move(expected), std::move(observed), pass});
}

void ExperimentReport::check_near(const std::string& name, double expected,
                                  double observed, double tol) {
    add_check(name, expected, observed, std::abs(expected - observed) <= tol);
}

void ExperimentReport::check_within_3sigma(const std::string& name, double expected,
                                           double observed, double sigma) {
    add_check(name, expected, observed, std::abs(expected - observed) <= 3.0 * sigma);
}

void ExperimentReport::check_equal(const std::string& name,
                                   const nlohmann::json& expected,
                                   const nlohmann::json& observed) {
    add_check(name, expected, observed, expected == observed);
}

bool ExperimentReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::vector<std::string> ExperimentReport::failing_checks() const {
    std::vector<std::string> names;
    for (const auto& c : checks) {
        if (!c.pass) names.push_back(c.name);
    }
    return names;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json j;
    j["experiment"] = experiment;
    j["params"] = params;
    j["seed"] = seed;
    j["results"] = results;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["observed"] = c.observed;
        jc["pass"] = c.pass;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string ExperimentReport::to_json_string() const {
    // nlohmann objects keep keys sorted, so the dump is canonical.
    return to_json().dump(2) + "\n";
}

namespace {

std::string scalar_to_csv(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    out << "experiment," << experiment << "\n";
    out << "seed," << seed << "\n";
    for (const auto& [key, value] : params.items()) {
        out << "param." << key << "," << scalar_to_csv(value) << "\n";
    }
    for (const auto& [key, value] : results.items()) {
        out << "result." << key << "," << scalar_to_csv(value) << "\n";
    }
    for (const auto& c : checks) {
        out << "check." << c.name << ".expected," << scalar_to_csv(c.expected) << "\n";
        out << "check." << c.name << ".observed," << scalar_to_csv(c.observed) << "\n";
        out << "check." << c.name << ".pass," << (c.pass ? "true" : "false") << "\n";
    }
    return out.str();
}

} // namespace qsim
