#include "qsim/rng.hpp"

#include "qsim/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

LcgParams::LcgParams(std::uint64_t a_, std::uint64_t c_, std::uint64_t m_)
    : a(a_), c(c_), m(m_) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    if (a >= m || c >= m) {
        throw std::invalid_argument("parameters must satisfy a < m and c < m");
    }
}

LcgParams LcgParams::minimal_standard() {
    return LcgParams(16807, 0, (std::uint64_t{1} << 31) - 1);
}

LcgParams LcgParams::short_period_demo() { return LcgParams(205, 57, 256); }

std::uint64_t lcg_next(const LcgParams& p, std::uint64_t x) {
    if (x >= p.m) throw std::invalid_argument("state must lie in [0, m)");
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(p.a) * x + p.c;
    return static_cast<std::uint64_t>(wide % p.m);
}

int qrng_bit(SeededRng& rng) {
    Circuit c(1);
    c.add(Gate::make(GateKind::H), {0});
    c.final_measurement = std::vector<int>{0};
    RunResult out = run(c, StateVector::zero(1), rng);
    return (*out.measured)[0] == '1' ? 1 : 0;
}

BitStream BitStream::lcg(LcgParams params, std::uint64_t seed) {
    BitStream s;
    s.quantum_ = false;
    s.params_ = params;
    s.state_ = seed % params.m;
    s.modulus_ = params.m;
    return s;
}

BitStream BitStream::qrng(std::uint64_t seed) {
    BitStream s;
    s.quantum_ = true;
    s.modulus_ = 2;
    s.sampler_.emplace(seed);
    return s;
}

std::uint64_t BitStream::next_value() {
    ++emitted_;
    if (quantum_) {
        return static_cast<std::uint64_t>(qrng_bit(*sampler_));
    }
    state_ = lcg_next(params_, state_);
    return state_;
}

namespace {

// Smallest T <= n/2 with x[i+T] == x[i] for all i; mismatches exit early, so
// aperiodic streams cost about two comparisons per candidate.
std::optional<std::size_t> detect_period(const std::vector<std::uint64_t>& x) {
    const std::size_t n = x.size();
    for (std::size_t t = 1; t <= n / 2; ++t) {
        bool ok = true;
        for (std::size_t i = 0; i + t < n; ++i) {
            if (x[i] != x[i + t]) {
                ok = false;
                break;
            }
        }
        if (ok) return t;
    }
    return std::nullopt;
}

} // namespace

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q domain error");
    if (x == 0.0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // Series for P(a, x); Q = 1 - P.
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - lg);
        return 1.0 - p;
    }
    // Continued fraction for Q(a, x) (modified Lentz).
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - lg) * h;
}

UniformityReport uniformity_report(BitStream stream, std::size_t n) {
    if (n < 1000) throw std::invalid_argument("need at least 1000 draws");

    std::vector<std::uint64_t> raw(n);
    std::vector<double> v(n);
    const double inv_m = 1.0 / static_cast<double>(stream.modulus());
    const bool bits = stream.modulus() < 16;
    for (std::size_t i = 0; i < n; ++i) {
        raw[i] = stream.next_value();
        v[i] = static_cast<double>(raw[i]) * inv_m;
    }

    UniformityReport rep;
    rep.n = n;
    double sum = 0.0;
    for (double x : v) sum += x;
    rep.mean = sum / static_cast<double>(n);
    const double m = static_cast<double>(stream.modulus());
    rep.reference_mean = (m - 1.0) / (2.0 * m);
    rep.mean_deviation = rep.mean - rep.reference_mean;

    double var = 0.0;
    for (double x : v) var += (x - rep.mean) * (x - rep.mean);
    rep.autocorrelation.resize(16, 0.0);
    if (var > 0.0) {
        for (std::size_t lag = 1; lag <= 16; ++lag) {
            double acc = 0.0;
            for (std::size_t i = 0; i + lag < n; ++i) {
                acc += (v[i] - rep.mean) * (v[i + lag] - rep.mean);
            }
            rep.autocorrelation[lag - 1] = acc / var;
        }
    }

    // Chi-square over 16 bins. Bit-valued streams pack 4 consecutive draws
    // per bin value so all bins are reachable.
    std::vector<std::size_t> counts(16, 0);
    std::size_t samples = 0;
    if (bits) {
        for (std::size_t i = 0; i + 4 <= n; i += 4) {
            std::size_t nibble = 0;
            for (std::size_t b = 0; b < 4; ++b) {
                nibble = (nibble << 1) | static_cast<std::size_t>(raw[i + b] & 1u);
            }
            ++counts[nibble];
            ++samples;
        }
    } else {
        for (double x : v) {
            auto bin = static_cast<std::size_t>(x * 16.0);
            if (bin > 15) bin = 15;
            ++counts[bin];
            ++samples;
        }
    }
    const double expected = static_cast<double>(samples) / 16.0;
    double chi = 0.0;
    for (std::size_t b = 0; b < 16; ++b) {
        const double d = static_cast<double>(counts[b]) - expected;
        chi += d * d / expected;
    }
    rep.chi_square = chi;
    rep.chi_square_dof = 15;
    rep.chi_square_p = gamma_q(15.0 / 2.0, chi / 2.0);

    rep.period = detect_period(raw);
    return rep;
}

} // namespace qsim
