// The universal gate set as concrete unitary matrices: Pauli operators, H,
// the S and T phase rotations, the R_k family, CNOT/SWAP/Toffoli, plus
// controlled and adjoint constructions.

#pragma once

#include "qsim/state.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qsim {

// Dense square matrix of power-of-two dimension, row-major.
struct GateMatrix {
    std::uint64_t dim = 0;
    std::vector<Amplitude> entries;

    GateMatrix() = default;
    explicit GateMatrix(std::uint64_t d) : dim(d), entries(d * d) {}

    Amplitude& at(std::uint64_t r, std::uint64_t c) { return entries[r * dim + c]; }
    const Amplitude& at(std::uint64_t r, std::uint64_t c) const {
        return entries[r * dim + c];
    }

    static GateMatrix identity(std::uint64_t dim);

    // max |(U^dagger U - I)_{rc}|
    double unitarity_defect() const;
    bool is_unitary(double tol = ENTRY_TOL) const;

    int n_qubits() const;
};

GateMatrix multiply(const GateMatrix& a, const GateMatrix& b);
StateVector apply(const GateMatrix& u, const StateVector& s);

// Conjugate transpose.
GateMatrix adjoint(const GateMatrix& u);

// Block-diagonal [[I, 0], [0, u]]; the control is the lower-indexed qubit.
GateMatrix controlled(const GateMatrix& u);

enum class GateKind {
    I, X, Y, Z, H, S, T, Rk, Cnot, Swap, Toffoli, Custom, ControlledGate
};

// A symbolic gate. Rk carries its k; Custom carries an explicit unitary;
// ControlledGate wraps an inner gate (nesting allowed to depth 2, which
// covers controlled-controlled constructions).
class Gate {
  public:
    static Gate make(GateKind kind);
    static Gate rk(int k);
    static Gate custom(GateMatrix u, std::string label = "U");
    static Gate make_controlled(Gate inner);

    GateKind kind() const { return kind_; }
    int k() const { return k_; }
    const Gate& inner() const { return *inner_; }
    const std::string& label() const { return label_; }

    // Number of qubits the gate acts on.
    int arity() const;

    bool operator==(const Gate& other) const;

  private:
    Gate() = default;

    GateKind kind_ = GateKind::I;
    int k_ = 0;
    std::shared_ptr<const GateMatrix> custom_;
    std::shared_ptr<const Gate> inner_;
    std::string label_;

    friend GateMatrix matrix_of(const Gate& g);
};

// The literal matrices of the named gates; Custom returns its payload,
// ControlledGate returns controlled(matrix_of(inner)).
GateMatrix matrix_of(const Gate& g);

// A gate bound to concrete qubit indices. For controlled gates the controls
// are listed first; e.g. CNOT targets = {control, target} and Toffoli
// targets = {control1, control2, target}.
struct GateApplication {
    Gate gate;
    std::vector<int> targets;

    bool operator==(const GateApplication& other) const {
        return gate == other.gate && targets == other.targets;
    }
};

// Toffoli on qubits (0, 1, 2) as a sequence of one- and two-qubit gates
// drawn from {H, T, T^dagger (as a custom unitary), CNOT}. The composed
// 8x8 unitary equals the Toffoli matrix (checked numerically in the tests,
// via per-basis-state fidelity to stay insensitive to a global phase).
std::vector<GateApplication> toffoli_two_qubit_decomposition();

} // namespace qsim
