// Reusable quantum building blocks: QFT, phase kickback, phase estimation,
// Grover search, amplitude estimation, and reflection oracles.

#pragma once

#include "qsim/circuit.hpp"

#include <optional>

namespace qsim {

// QFT circuit whose composed unitary equals the DFT matrix
// F[j][k] = omega^{jk} / sqrt(2^n), omega = exp(2*pi*i/2^n), in this
// project's index convention. The product-form construction emits factors
// with reversed significance, so a terminal SWAP network is appended.
Circuit qft_circuit(int n);

// The plain DFT matrix, for direct comparison against the circuit.
GateMatrix dft_matrix(int n);

struct Eigenphase {
    double phi = 0.0; // in [0, 1)
    int n_bits = 0;
};

// Control qubit through H, then controlled-u on the eigenvector register.
// The ancilla (qubit 0 of the result) leaves in (|0> + e^{2 pi i phi}|1>)/sqrt(2)
// while the target register stays on eigvec. Throws if eigvec is not an
// eigenvector of u (checked to 1e-9).
StateVector phase_kickback_demo(const GateMatrix& u, const StateVector& eigvec);

// n-bit phase estimation: Hadamards on the clock, controlled-u^{2^j} powers
// (formed by repeated exact matrix squaring), inverse QFT, measurement.
// The clock is read MSB-first; the QFT's terminal swap network performs the
// bit reversal, so phi = k / 2^n directly. Exact (probability 1) when phi
// has an n-bit binary expansion.
Eigenphase phase_estimation(const GateMatrix& u, const StateVector& eigvec,
                            int n_bits, SeededRng& rng);

// Pre-measurement clock distribution P(k), k in [0, 2^n): what the
// measurement in phase_estimation samples from.
std::vector<double> phase_estimation_distribution(const GateMatrix& u,
                                                  const StateVector& eigvec,
                                                  int n_bits);

struct SearchResult {
    std::optional<std::string> found;
    std::int64_t queries = 0;
};

struct GroverResult {
    std::string found;
    std::int64_t queries = 0;
    double success_probability = 0.0; // statevector mass on marked items
};

// Grover iterate: phase oracle then diffusion about the uniform state
// (2|s><s| - I). The oracle must mark at least one item.
GroverResult grover_search(Oracle& o, int n, int iterations, SeededRng& rng);

// Closed-form single-marked-item success probability sin^2((2k+1) theta),
// theta = arcsin(2^{-n/2}).
double grover_success_probability(int n, int iterations);

// Smallest iteration count whose statevector success probability reaches
// the threshold (single marked item).
int grover_iterations_for_success(int n, double threshold);

// Uniform superposition, one oracle evaluation into a flag qubit, measure
// the flag; returns the x register only when the flag reads 1.
SearchResult naive_search(Oracle& o, int n, SeededRng& rng);

struct AmplitudeEstimate {
    double a_hat = 0.0;
    int t = 0;
    double error_bound = 0.0; // 2 pi sqrt(a_hat (1-a_hat))/t + pi^2/t^2
};

double amplitude_estimation_bound(double a, int t);

// Phase estimation on the rotation G = (2|psi><psi| - I)(I - 2P), where P
// projects onto the flagged basis states. t must be a power of two; the
// measured clock value k gives a_hat = sin^2(pi k / t).
AmplitudeEstimate amplitude_estimation_state(const StateVector& psi,
                                             const std::vector<std::uint64_t>& good,
                                             int t, SeededRng& rng);

// Same, with the prepared state given as a circuit acting on |0...0>.
AmplitudeEstimate amplitude_estimation(const Circuit& prep,
                                       const std::vector<std::uint64_t>& good,
                                       int t, SeededRng& rng);

// U_psi with U_psi |psi> = -|psi> and U_psi |phi> = |phi> for phi
// orthogonal to psi, as an explicit matrix: I - 2|psi><psi|.
GateMatrix reflection_oracle(const StateVector& psi);

// Exact matrix power by repeated squaring (p >= 0).
GateMatrix matrix_power(const GateMatrix& u, std::uint64_t p);

} // namespace qsim
