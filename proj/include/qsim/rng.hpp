// Random number generation: the linear congruential recurrence, a quantum
// random bit from the single-qubit H+measure circuit run on the simulator,
// and statistical summaries (mean deviation, autocorrelation, chi-square,
// period detection) of a stream.

#pragma once

#include "qsim/report.hpp"
#include "qsim/seeded_rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qsim {

struct LcgParams {
    std::uint64_t a = 0;
    std::uint64_t c = 0;
    std::uint64_t m = 1;

    LcgParams(std::uint64_t a_, std::uint64_t c_, std::uint64_t m_);

    // a = 7^5, c = 0, m = 2^31 - 1
    static LcgParams minimal_standard();
    // a = 205, c = 57, m = 256: a classic short-period textbook choice that
    // makes the period visible within a few hundred draws.
    static LcgParams short_period_demo();
};

// X_{n+1} = (a X_n + c) mod m, exact integer arithmetic.
std::uint64_t lcg_next(const LcgParams& p, std::uint64_t x);

// One bit from the H-then-measure circuit, executed on the statevector
// simulator. The sampling seed stands in for physical randomness: this is a
// simulation of a quantum generator, not a hardware entropy source.
int qrng_bit(SeededRng& rng);

// Deterministic value stream replayable from (source, seed).
class BitStream {
  public:
    static BitStream lcg(LcgParams params, std::uint64_t seed);
    static BitStream qrng(std::uint64_t seed);

    // LCG: the next generator value in [0, m). QRNG: a measured bit.
    std::uint64_t next_value();
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t emitted() const { return emitted_; }

  private:
    BitStream() = default;

    bool quantum_ = false;
    LcgParams params_{1, 0, 2};
    std::uint64_t state_ = 0;
    std::uint64_t modulus_ = 2;
    std::uint64_t emitted_ = 0;
    std::optional<SeededRng> sampler_;
};

struct UniformityReport {
    std::size_t n = 0;
    double mean = 0.0;           // of the values normalized by x/m
    double reference_mean = 0.0; // (m-1)/(2m): the uniform mean of x/m
    double mean_deviation = 0.0; // mean - reference_mean
    std::vector<double> autocorrelation; // lags 1..16
    double chi_square = 0.0;
    int chi_square_dof = 15;
    double chi_square_p = 0.0;
    std::optional<std::size_t> period; // smallest true period found in the window
};

// Draws n values and summarizes them. Values are normalized by the stream
// modulus; for bit streams the chi-square binning packs four consecutive
// bits per bin value so that all 16 bins are reachable.
UniformityReport uniformity_report(BitStream stream, std::size_t n);

// Regularized upper incomplete gamma Q(a, x); chi_square_p uses
// Q(dof/2, X^2/2).
double gamma_q(double a, double x);

} // namespace qsim
