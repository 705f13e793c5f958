// Command-line front door. Every subcommand prints an ExperimentReport
// (JSON by default, CSV with --out csv) and exits 0 iff all checks pass.

#include "qsim/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int emit(const qsim::ExperimentReport& report, const std::string& out_format) {
    if (out_format == "csv") {
        std::cout << report.to_csv();
    } else {
        std::cout << report.to_json_string();
    }
    if (!report.all_pass()) {
        for (const auto& name : report.failing_checks()) {
            std::cerr << "check failed: " << name << "\n";
        }
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statevector quantum-circuit simulator and experiment runner"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::uint64_t seed = 1;
    int trials = 10000;
    int qubits = 3;
    std::string out_format = "json";
    std::string policy = "return-always";
    app.add_option("--seed", seed, "master seed (u64)")->capture_default_str();
    app.add_option("--trials", trials, "trial count")->capture_default_str();
    app.add_option("--qubits", qubits, "register width")->capture_default_str();
    app.add_option("--out", out_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    auto* policy_opt =
        app.add_option("--policy", policy, "return-always|return-on-valid|reissue")
            ->check(CLI::IsMember({"return-always", "return-on-valid", "reissue"}))
            ->capture_default_str();

    auto* demo = app.add_subcommand("demo", "run a textbook circuit demo");
    std::string figure = "I";
    demo->add_option("--figure", figure, "I|II|III|IV")
        ->check(CLI::IsMember({"I", "II", "III", "IV"}))
        ->capture_default_str();

    auto* money = app.add_subcommand("money", "money protocols and attacks");
    std::string attack = "none";
    std::string adversary = "guess";
    money->add_option("--attack", attack, "none|guess|adaptive|game")
        ->check(CLI::IsMember({"none", "guess", "adaptive", "game"}))
        ->capture_default_str();
    money->add_option("--adversary", adversary, "honest|guess|adaptive (game only)")
        ->check(CLI::IsMember({"honest", "guess", "adaptive"}))
        ->capture_default_str();

    auto* algo = app.add_subcommand("algo", "algorithm demos");
    std::string which = "ols";
    int iterations = -1;
    int budget = 32;
    int medians = 5;
    algo->add_option("--which", which, "ols|grover|gradient|montecarlo|qubo|lightning")
        ->check(CLI::IsMember(
            {"ols", "grover", "gradient", "montecarlo", "qubo", "lightning"}))
        ->capture_default_str();
    algo->add_option("--iterations", iterations, "grover iterations (-1 = default)")
        ->capture_default_str();
    algo->add_option("--t", budget, "amplitude-estimation budget (power of two)")
        ->capture_default_str();
    algo->add_option("--medians", medians, "median repeats")->capture_default_str();

    auto* rng_cmd = app.add_subcommand("rng", "random number streams");
    std::string source = "lcg";
    std::string format = "report";
    std::size_t count = 10000;
    rng_cmd->add_option("--source", source, "lcg|bad-lcg|qrng")
        ->check(CLI::IsMember({"lcg", "bad-lcg", "qrng"}))
        ->capture_default_str();
    rng_cmd->add_option("--format", format, "report|dec|hex")
        ->check(CLI::IsMember({"report", "dec", "hex"}))
        ->capture_default_str();
    rng_cmd->add_option("--count", count, "number of draws")->capture_default_str();

    auto* circuit = app.add_subcommand("circuit", "run a circuit file");
    std::string file;
    int shots = 1024;
    circuit->add_option("--file", file, "circuit text file")->required();
    circuit->add_option("--shots", shots, "measurement shots")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*demo) {
            const qsim::DemoFigure f = figure == "I"     ? qsim::DemoFigure::I
                                       : figure == "II"  ? qsim::DemoFigure::II
                                       : figure == "III" ? qsim::DemoFigure::III
                                                         : qsim::DemoFigure::IV;
            return emit(qsim::cmd_demo(f, seed, trials), out_format);
        }
        if (*money) {
            const qsim::MoneyAttack a = attack == "none"    ? qsim::MoneyAttack::None
                                        : attack == "guess" ? qsim::MoneyAttack::Guess
                                        : attack == "adaptive"
                                            ? qsim::MoneyAttack::Adaptive
                                            : qsim::MoneyAttack::Game;
            const qsim::GameAdversary adv =
                adversary == "honest"  ? qsim::GameAdversary::Honest
                : adversary == "guess" ? qsim::GameAdversary::Guess
                                       : qsim::GameAdversary::Adaptive;
            // The security game defaults to the reissuing bank; attack
            // demos default to always returning states.
            qsim::BankPolicy chosen = qsim::parse_policy(policy);
            if (a == qsim::MoneyAttack::Game && policy_opt->count() == 0) {
                chosen = qsim::BankPolicy::ReissueOnValid;
            }
            return emit(qsim::cmd_money(a, qubits, trials, chosen, seed, adv),
                        out_format);
        }
        if (*algo) {
            const qsim::AlgoKind k = which == "ols"        ? qsim::AlgoKind::Ols
                                     : which == "grover"   ? qsim::AlgoKind::Grover
                                     : which == "gradient" ? qsim::AlgoKind::Gradient
                                     : which == "montecarlo"
                                         ? qsim::AlgoKind::Montecarlo
                                     : which == "qubo" ? qsim::AlgoKind::Qubo
                                                       : qsim::AlgoKind::Lightning;
            qsim::AlgoParams params;
            params.qubits = qubits;
            params.iterations = iterations;
            params.t = budget;
            params.medians = medians;
            return emit(qsim::cmd_algo(k, params, seed), out_format);
        }
        if (*rng_cmd) {
            const qsim::RngSource s = source == "lcg"       ? qsim::RngSource::Lcg
                                      : source == "bad-lcg" ? qsim::RngSource::BadLcg
                                                            : qsim::RngSource::Qrng;
            const qsim::RngFormat f = format == "report" ? qsim::RngFormat::Report
                                      : format == "dec"  ? qsim::RngFormat::Dec
                                                         : qsim::RngFormat::Hex;
            qsim::RngOutput out = qsim::cmd_rng(s, count, f, seed);
            if (f != qsim::RngFormat::Report) {
                std::cout << out.stream_text;
                return 0;
            }
            return emit(out.report, out_format);
        }
        if (*circuit) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "cannot open " << file << "\n";
                return 2;
            }
            std::ostringstream text;
            text << in.rdbuf();
            return emit(qsim::cmd_circuit(text.str(), seed, shots), out_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
