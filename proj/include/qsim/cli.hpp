// Library backing the command-line front end: every subcommand is a
// function from (parameters, seed) to an ExperimentReport, so experiments
// are scriptable and unit-testable without spawning a process.

#pragma once

#include "qsim/money.hpp"
#include "qsim/report.hpp"
#include "qsim/rng.hpp"

#include <cstdint>
#include <string>

namespace qsim {

enum class DemoFigure { I, II, III, IV };

// Builds the figure's circuit, round-trips it through the text format, runs
// it, and checks the documented outcome.
ExperimentReport cmd_demo(DemoFigure figure, std::uint64_t seed, int trials);

enum class MoneyAttack { None, Guess, Adaptive, Game };
enum class GameAdversary { Honest, Guess, Adaptive };

ExperimentReport cmd_money(MoneyAttack attack, int n, int trials, BankPolicy policy,
                           std::uint64_t seed,
                           GameAdversary adversary = GameAdversary::Guess);

enum class AlgoKind { Ols, Grover, Gradient, Montecarlo, Qubo, Lightning };

struct AlgoParams {
    int qubits = 3;      // grover register width / lightning k
    int iterations = -1; // grover iterations; -1 = floor(pi/4 sqrt(2^n))
    int t = 32;          // amplitude-estimation budget
    int medians = 5;     // median repeats for the mean estimator
};

ExperimentReport cmd_algo(AlgoKind which, const AlgoParams& params,
                          std::uint64_t seed);

enum class RngSource { Lcg, BadLcg, Qrng };
enum class RngFormat { Report, Dec, Hex };

struct RngOutput {
    ExperimentReport report;
    std::string stream_text; // raw stream for Dec/Hex; empty for Report
};

RngOutput cmd_rng(RngSource source, std::size_t count, RngFormat format,
                  std::uint64_t seed);

// Parses circuit text, runs it `shots` times from |0...0>, and reports the
// outcome histogram.
ExperimentReport cmd_circuit(const std::string& text, std::uint64_t seed, int shots);

// Parse helpers shared by the binary and the tests.
BankPolicy parse_policy(const std::string& name);
std::string policy_name(BankPolicy policy);

} // namespace qsim
