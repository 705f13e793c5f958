// Exact complex statevector of an n-qubit register, plus tensor algebra and
// Born-rule measurement.
//
// Index convention used across the whole project: qubit 0 is the leftmost
// symbol of a ket and the most significant bit of the amplitude index,
//   |q0 q1 ... q_{n-1}>  <->  index = sum_i q_i * 2^(n-1-i).
// So for two qubits, |10> sits at index 2 and a CNOT with qubit 0 as control
// maps |11> to |10>.

#pragma once

#include "qsim/seeded_rng.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qsim {

using Amplitude = std::complex<double>;

constexpr int MAX_QUBITS = 24;
constexpr double NORM_TOL = 1e-10;
constexpr double ENTANGLE_TOL = 1e-9;
constexpr double ENTRY_TOL = 1e-12;

enum class MeasurementBasis { Computational, Hadamard };

class StateVector {
  public:
    // |0...0> on n qubits.
    static StateVector zero(int n_qubits);

    // Computational basis state |index> on n qubits.
    static StateVector basis(int n_qubits, std::uint64_t index);

    // Takes ownership of raw amplitudes; throws if the length is not 2^n or
    // the vector is non-finite or not unit norm within NORM_TOL.
    static StateVector from_amplitudes(int n_qubits, std::vector<Amplitude> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }

    const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }
    Amplitude& operator[](std::uint64_t i) { return amps_[i]; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }

    // Bit of qubit q inside amplitude index i (see convention above).
    int bit_of(std::uint64_t index, int qubit) const {
        return static_cast<int>((index >> (n_qubits_ - 1 - qubit)) & 1u);
    }
    std::uint64_t qubit_mask(int qubit) const {
        return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
    }

    double norm_squared() const;
    void renormalize();

    // Checks the StateVector invariants (finite entries, unit norm).
    bool is_valid() const;

  private:
    StateVector(int n_qubits, std::vector<Amplitude> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

struct MeasurementOutcome {
    std::string bits;       // one char per measured qubit, in measurement order
    StateVector post_state; // renormalized post-measurement state
};

// Joint state with a's qubits preceding b's: result[i*2^nb + j] = a[i]*b[j].
StateVector tensor(const StateVector& a, const StateVector& b);

// <a|b> with the conjugate on the left.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|^2; equal to 1 for states differing only by a global phase.
double fidelity_up_to_global_phase(const StateVector& a, const StateVector& b);

// Samples a full computational-basis measurement; post state is |outcome>.
MeasurementOutcome measure_all(const StateVector& s, SeededRng& rng);

// Measures one qubit. The Hadamard basis is realized by conjugating with H:
// apply H on q, measure in the computational basis, apply H on q again.
MeasurementOutcome measure_qubit(const StateVector& s, int qubit,
                                 MeasurementBasis basis, SeededRng& rng);

// Measures a set of qubits in the computational basis; bits follow the order
// of `qubits`.
MeasurementOutcome measure_qubits(const StateVector& s,
                                  const std::vector<int>& qubits,
                                  SeededRng& rng);

// True iff the 2x2 amplitude matrix M[i][j] = amps[2i+j] has |det| below
// ENTANGLE_TOL. Bell states come out false.
bool is_product_two_qubit(const StateVector& s);

// Common single-qubit states.
StateVector ket0();
StateVector ket1();
StateVector ket_plus();
StateVector ket_minus();

} // namespace qsim
