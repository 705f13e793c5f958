// The circuit model: ordered gate applications on labeled qubits, execution
// against the statevector, gate-complexity counting, query-counted oracles,
// and a line-oriented text serialization.
//
// Text format (one gate per line, decimal indices, UTF-8, LF endings):
//   # comment
//   QUBITS n
//   H q | X q | Y q | Z q | S q | T q | RK k q
//   CNOT c t | SWAP a b | CCX c1 c2 t
//   MEASURE q [q ...]

#pragma once

#include "qsim/gates.hpp"
#include "qsim/state.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsim {

struct Circuit {
    int n_qubits = 0;
    std::vector<GateApplication> steps;
    std::optional<std::vector<int>> final_measurement;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    void add(const Gate& g, std::vector<int> targets);

    bool operator==(const Circuit& other) const {
        return n_qubits == other.n_qubits && steps == other.steps &&
               final_measurement == other.final_measurement;
    }
};

struct RunResult {
    StateVector state;
    std::optional<std::string> measured;
};

// Applies a gate matrix to the listed qubits of a wider register. The
// matrix's local qubit 0 is targets[0] (most significant local bit). Works
// by permuting amplitude indices; no 2^n x 2^n matrix is ever formed.
void apply_matrix_to_qubits(StateVector& s, const GateMatrix& u,
                            const std::vector<int>& targets);

void apply_gate_application(StateVector& s, const GateApplication& app);

// Runs every step in order, then measures the declared qubits (if any).
RunResult run(const Circuit& c, const StateVector& initial, SeededRng& rng);

// Statevector just before the final measurement.
StateVector run_statevector(const Circuit& c, const StateVector& initial);

// Step-reversed adjoint circuit; running c then inverse_of(c) is the
// identity. Gates without a named adjoint become custom unitaries.
Circuit inverse_of(const Circuit& c);

struct GateComplexity {
    std::int64_t elementary_gate_count = 0;
};

// Counts steps verbatim, or, with elementary_basis set, after expanding
// Toffoli and SWAP into their two-qubit decompositions.
GateComplexity gate_count(const Circuit& c, bool elementary_basis = false);

// How an oracle writes its result into the target register.
enum class OracleTarget {
    Xor,      // |x, y> -> |x, y XOR f(x)>
    AddMod,   // |x, y> -> |x, y + f(x) mod 2^out_bits>
};

// Query-counted black-box classical function lifted to a reversible map on
// basis states. Single-owner per experiment; the counter is not synchronized.
struct Oracle {
    int in_bits = 0;
    int out_bits = 0;
    std::function<std::uint64_t(std::uint64_t)> f;
    OracleTarget target = OracleTarget::Xor;
    std::int64_t query_count = 0;

    Oracle(int in, int out, std::function<std::uint64_t(std::uint64_t)> fn,
           OracleTarget t = OracleTarget::Xor)
        : in_bits(in), out_bits(out), f(std::move(fn)), target(t) {}
};

// Applies the induced permutation |x, y> -> |x, y op f(x)> and increments
// the query counter. Register lists give qubit indices MSB-first and must
// be disjoint.
StateVector oracle_apply(Oracle& o, const StateVector& s,
                         const std::vector<int>& in_regs,
                         const std::vector<int>& out_regs);

// Phase-oracle form: multiplies the amplitude of |x> by (-1)^f(x) for a
// single-output-bit oracle. Counts as one query.
StateVector oracle_apply_phase(Oracle& o, const StateVector& s,
                               const std::vector<int>& in_regs);

std::string serialize(const Circuit& c);

struct CircuitParseError : std::runtime_error {
    int line;
    std::string token;
    CircuitParseError(int line_, std::string token_, const std::string& what_);
};

Circuit deserialize(const std::string& text);

} // namespace qsim
