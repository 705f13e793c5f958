// Quantum algorithms with classical baselines: single-query gradient
// estimation, the quantum linear-systems solver with a worked least-squares
// instance, amplitude-estimation Monte Carlo, exhaustive QUBO, and
// Vandermonde interpolation / least squares.

#pragma once

#include "qsim/circuit.hpp"
#include "qsim/subroutines.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qsim {

// Classical real-valued function accessed through a query counter, so query
// complexities are measured, never asserted by convention.
class ScalarOracle {
  public:
    explicit ScalarOracle(std::function<double(std::span<const double>)> f)
        : f_(std::move(f)) {}

    double operator()(std::span<const double> x) {
        ++query_count_;
        return f_(x);
    }

    std::int64_t query_count() const { return query_count_; }

  private:
    std::function<double(std::span<const double>)> f_;
    std::int64_t query_count_ = 0;
};

// ---------------------------------------------------------------------------
// Gradient estimation
// ---------------------------------------------------------------------------

// Single-query quantum gradient estimation. The function is sampled over a
// d-dimensional cube of side `l` centered at `center`; each input register
// holds n bits, the output register holds n0 bits. `m` is the width of the
// representable gradient interval [-m/2, m/2) per component, and the output
// register size follows from the declared function range and the target
// accuracy theta:
//   n0 = ceil(log2( (f_max - f_min) / ((m l / 2^n) * theta / (2 pi)) )).
struct GradientProblem {
    int d = 1;
    int n = 4;
    double m = 1.0;
    double l = 1e-3;
    double theta = 0.1;
    double f_min = 0.0;
    double f_max = 1.0;
    std::vector<double> center;
    std::function<double(std::span<const double>)> f;

    int output_bits() const; // the n0 formula above
};

struct GradientResult {
    std::vector<double> gradient;
    std::int64_t queries = 0;
};

// Runs the full register pipeline: Hadamards on the input registers, X and
// inverse QFT on the output register, one modular-add oracle call, a QFT on
// each input register, measurement. Measured integers k decode to
// m * (k centered into [-N/2, N/2)) / N per component.
GradientResult jordan_gradient(const GradientProblem& p, SeededRng& rng);

enum class DifferenceScheme { Forward, Centered };

// Classical baseline: d+1 evaluations (forward) or 2d (centered), counted
// through the oracle.
GradientResult finite_difference_gradient(ScalarOracle& f,
                                          std::span<const double> x,
                                          DifferenceScheme scheme, double l);

// ---------------------------------------------------------------------------
// Linear systems
// ---------------------------------------------------------------------------

struct LinearSystem {
    // Hermitian matrix of dimension 2^k, row-major.
    std::vector<Amplitude> a;
    std::uint64_t dim = 0;
    StateVector b;
    // Set when clock values at and above 2^(clock_bits-1) should be read as
    // negative eigenvalues (needed for hermitized embeddings).
    bool signed_spectrum = false;

    // Throws unless a is Hermitian to 1e-12 and b is unit norm.
    LinearSystem(std::vector<Amplitude> matrix, StateVector rhs,
                 bool signed_spectrum = false);

    const Amplitude& at(std::uint64_t r, std::uint64_t c) const {
        return a[r * dim + c];
    }

    double condition_number() const;

    // Footnote-style embedding for a non-Hermitian matrix m:
    //   C = [[0, m], [m^dagger, 0]],  rhs -> [rhs, 0].
    // Solving C y = [rhs, 0] puts the solution of m x = rhs in the lower
    // half of y. The spectrum of C is symmetric, so the embedded system is
    // marked signed_spectrum.
    static LinearSystem hermitized(const std::vector<Amplitude>& m,
                                   std::uint64_t dim, const StateVector& rhs);
};

struct HhlResult {
    StateVector solution_state; // system register, post-selected on accept
    bool accepted = false;      // sampled ancilla outcome
    double acceptance_probability = 0.0;
};

// Phase-estimation based linear solver. With t0 = 2 pi / 2^clock_bits,
// integer eigenvalues land exactly on clock basis states; the controlled
// rotation writes C/lambda onto the ancilla, and post-selecting ancilla=1
// leaves the system register proportional to A^{-1} b. C must not exceed
// the smallest eigenvalue magnitude.
HhlResult hhl_solve(const LinearSystem& sys, int clock_bits, double t0, double c,
                    SeededRng& rng);

// The worked 4x4 least-squares instance: normal-equations data whose matrix
// has spectrum {1, 2, 4, 8}, right-hand side prepared by two Hadamards,
// solved with a 4-bit clock. Returns the post-selected state, the known
// target state, and the classical solution direction.
struct OlsDemoResult {
    HhlResult hhl;
    StateVector target_state;             // (-1, 7, 11, 13)/sqrt(340)
    std::vector<double> classical_solution; // direct solve of the normal equations
    double fidelity = 0.0;
};

LinearSystem ols_instance();
OlsDemoResult ols_demo(SeededRng& rng);

// ---------------------------------------------------------------------------
// Monte Carlo mean estimation
// ---------------------------------------------------------------------------

struct MonteCarloResult {
    double mu_hat = 0.0;
    std::int64_t queries = 0; // t * medians
    double error_bound = 0.0; // Eq-51-style bound at the estimate
};

// Mean of phi over the distribution sampled by `prep`: rotates
// sqrt(phi(x)) onto an appended ancilla, amplitude-estimates the ancilla
// mass with budget t, and keeps the median of `medians` repeats (derived
// seeds). phi must map into [0, 1].
MonteCarloResult montecarlo_mean(const Circuit& prep,
                                 const std::function<double(std::uint64_t)>& phi,
                                 int t, int medians, SeededRng& rng);

// ---------------------------------------------------------------------------
// QUBO
// ---------------------------------------------------------------------------

struct QuboProblem {
    int n = 0;
    std::vector<double> q; // symmetric n x n, row-major
    std::vector<double> c;

    QuboProblem(int n_vars, std::vector<double> quadratic, std::vector<double> linear);

    double objective(std::uint64_t assignment) const; // x_i = bit i of assignment
};

struct QuboResult {
    std::vector<int> x_star;
    double h0 = 0.0;
};

// Exhaustive minimization; ties break toward the lexicographically smallest
// bit vector (x_0 first).
QuboResult qubo_bruteforce(const QuboProblem& p);

// ---------------------------------------------------------------------------
// Vandermonde interpolation / least squares
// ---------------------------------------------------------------------------

struct VandermondeNode {
    double x = 0.0;
    double v = 0.0;
};

// Exact solve when the node count equals degree+1, least squares otherwise.
// Throws on singular or badly conditioned systems, reporting the condition
// estimate.
std::vector<double> vandermonde_fit(const std::vector<VandermondeNode>& nodes,
                                    int degree);

} // namespace qsim
