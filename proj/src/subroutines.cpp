#include "qsim/subroutines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsim {

using std::numbers::pi;

Circuit qft_circuit(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("qft_circuit supports 1..12 qubits");
    Circuit c(n);
    for (int m = 0; m < n; ++m) {
        c.add(Gate::make(GateKind::H), {m});
        for (int d = 1; d <= n - 1 - m; ++d) {
            c.add(Gate::make_controlled(Gate::rk(d + 1)), {m + d, m});
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        c.add(Gate::make(GateKind::Swap), {i, n - 1 - i});
    }
    return c;
}

GateMatrix dft_matrix(int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    GateMatrix f(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::uint64_t j = 0; j < dim; ++j) {
        for (std::uint64_t k = 0; k < dim; ++k) {
            const double angle = 2.0 * pi * static_cast<double>((j * k) % dim) /
                                 static_cast<double>(dim);
            f.at(j, k) = std::polar(scale, angle);
        }
    }
    return f;
}

namespace {

// Largest-|lambda| eigenvalue check: confirms u * v = lambda * v for a unit
// modulus lambda and returns lambda.
Amplitude eigenvalue_of(const GateMatrix& u, const StateVector& v) {
    StateVector uv = apply(u, v);
    const Amplitude lambda = inner_product(v, uv);
    double defect = 0.0;
    for (std::uint64_t i = 0; i < v.dim(); ++i) {
        defect += std::norm(uv[i] - lambda * v[i]);
    }
    if (std::sqrt(defect) > 1e-9 || std::abs(std::abs(lambda) - 1.0) > 1e-9) {
        throw std::invalid_argument("state is not an eigenvector of the unitary");
    }
    return lambda;
}

} // namespace

StateVector phase_kickback_demo(const GateMatrix& u, const StateVector& eigvec) {
    eigenvalue_of(u, eigvec);
    StateVector s = tensor(ket0(), eigvec);
    apply_matrix_to_qubits(s, matrix_of(Gate::make(GateKind::H)), {0});
    std::vector<int> targets(eigvec.n_qubits() + 1);
    for (int q = 0; q <= eigvec.n_qubits(); ++q) targets[q] = q;
    apply_matrix_to_qubits(s, controlled(u), targets);
    return s;
}

GateMatrix matrix_power(const GateMatrix& u, std::uint64_t p) {
    GateMatrix result = GateMatrix::identity(u.dim);
    GateMatrix base = u;
    while (p > 0) {
        if (p & 1u) result = multiply(result, base);
        base = multiply(base, base);
        p >>= 1;
    }
    return result;
}

namespace {

// The register just before the clock measurement: clock on the most
// significant qubits, eigenvector register behind it.
StateVector phase_estimation_premeasure(const GateMatrix& u,
                                        const StateVector& eigvec, int n_bits) {
    if (n_bits < 1 || n_bits > 10) {
        throw std::invalid_argument("phase_estimation supports 1..10 clock bits");
    }
    eigenvalue_of(u, eigvec);
    const int target_qubits = eigvec.n_qubits();
    if (n_bits + target_qubits > MAX_QUBITS) {
        throw std::invalid_argument("register too wide");
    }

    StateVector s = tensor(StateVector::zero(n_bits), eigvec);
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    for (int m = 0; m < n_bits; ++m) {
        apply_matrix_to_qubits(s, h, {m});
    }

    // Clock qubit m controls u^{2^(n_bits-1-m)}, so the clock reads the
    // phase MSB-first.
    std::vector<int> targets(target_qubits + 1);
    for (int m = 0; m < n_bits; ++m) {
        targets[0] = m;
        for (int q = 0; q < target_qubits; ++q) targets[q + 1] = n_bits + q;
        const GateMatrix power = matrix_power(u, std::uint64_t{1} << (n_bits - 1 - m));
        apply_matrix_to_qubits(s, controlled(power), targets);
    }

    const Circuit iqft = inverse_of(qft_circuit(n_bits));
    for (const auto& step : iqft.steps) {
        apply_gate_application(s, step);
    }
    return s;
}

} // namespace

Eigenphase phase_estimation(const GateMatrix& u, const StateVector& eigvec,
                            int n_bits, SeededRng& rng) {
    StateVector s = phase_estimation_premeasure(u, eigvec, n_bits);
    std::vector<int> clock(n_bits);
    for (int m = 0; m < n_bits; ++m) clock[m] = m;
    MeasurementOutcome out = measure_qubits(s, clock, rng);

    std::uint64_t k = 0;
    for (char b : out.bits) k = (k << 1) | static_cast<std::uint64_t>(b == '1');
    return Eigenphase{static_cast<double>(k) / std::pow(2.0, n_bits), n_bits};
}

std::vector<double> phase_estimation_distribution(const GateMatrix& u,
                                                  const StateVector& eigvec,
                                                  int n_bits) {
    StateVector s = phase_estimation_premeasure(u, eigvec, n_bits);
    const std::uint64_t clock_count = std::uint64_t{1} << n_bits;
    const std::uint64_t block = s.dim() / clock_count;
    std::vector<double> prob(clock_count, 0.0);
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        prob[i / block] += std::norm(s[i]);
    }
    return prob;
}

namespace {

void diffusion_about_uniform(StateVector& s) {
    Amplitude mean = 0.0;
    for (std::uint64_t i = 0; i < s.dim(); ++i) mean += s[i];
    mean /= static_cast<double>(s.dim());
    for (std::uint64_t i = 0; i < s.dim(); ++i) s[i] = 2.0 * mean - s[i];
}

} // namespace

GroverResult grover_search(Oracle& o, int n, int iterations, SeededRng& rng) {
    if (n < 1 || n > 14) throw std::invalid_argument("grover_search supports 1..14 qubits");
    if (o.in_bits != n || o.out_bits != 1) {
        throw std::invalid_argument("oracle arity does not match search width");
    }

    StateVector s = StateVector::zero(n);
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    for (int q = 0; q < n; ++q) apply_matrix_to_qubits(s, h, {q});

    std::vector<int> in_regs(n);
    for (int q = 0; q < n; ++q) in_regs[q] = q;
    for (int it = 0; it < iterations; ++it) {
        s = oracle_apply_phase(o, s, in_regs);
        diffusion_about_uniform(s);
    }

    double success = 0.0;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (o.f(i) & 1u) success += std::norm(s[i]);
    }

    MeasurementOutcome out = measure_all(s, rng);
    return GroverResult{out.bits, o.query_count, success};
}

double grover_success_probability(int n, int iterations) {
    const double theta = std::asin(std::pow(2.0, -n / 2.0));
    const double v = std::sin((2.0 * iterations + 1.0) * theta);
    return v * v;
}

int grover_iterations_for_success(int n, double threshold) {
    for (int k = 0;; ++k) {
        if (grover_success_probability(n, k) >= threshold) return k;
    }
}

SearchResult naive_search(Oracle& o, int n, SeededRng& rng) {
    if (o.in_bits != n || o.out_bits != 1) {
        throw std::invalid_argument("oracle arity does not match search width");
    }
    // x register on qubits 0..n-1, flag on qubit n.
    StateVector s = StateVector::zero(n + 1);
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    std::vector<int> in_regs(n);
    for (int q = 0; q < n; ++q) {
        apply_matrix_to_qubits(s, h, {q});
        in_regs[q] = q;
    }
    s = oracle_apply(o, s, in_regs, {n});

    MeasurementOutcome flag = measure_qubit(s, n, MeasurementBasis::Computational, rng);
    if (flag.bits != "1") {
        return SearchResult{std::nullopt, o.query_count};
    }
    MeasurementOutcome xs = measure_qubits(flag.post_state, in_regs, rng);
    return SearchResult{xs.bits, o.query_count};
}

double amplitude_estimation_bound(double a, int t) {
    return 2.0 * pi * std::sqrt(a * (1.0 - a)) / t + pi * pi / (static_cast<double>(t) * t);
}

namespace {

bool is_power_of_two(int t) { return t > 0 && (t & (t - 1)) == 0; }

// One Grover-style rotation G = (2|psi><psi| - I)(I - 2P) applied to an
// unnormalized block of amplitudes.
void apply_rotation(std::vector<Amplitude>& block, const StateVector& psi,
                    const std::vector<bool>& good_mask) {
    for (std::uint64_t i = 0; i < block.size(); ++i) {
        if (good_mask[i]) block[i] = -block[i];
    }
    Amplitude overlap = 0.0;
    for (std::uint64_t i = 0; i < block.size(); ++i) {
        overlap += std::conj(psi[i]) * block[i];
    }
    for (std::uint64_t i = 0; i < block.size(); ++i) {
        block[i] = 2.0 * overlap * psi[i] - block[i];
    }
}

} // namespace

AmplitudeEstimate amplitude_estimation_state(const StateVector& psi,
                                             const std::vector<std::uint64_t>& good,
                                             int t, SeededRng& rng) {
    if (!is_power_of_two(t) || t > 64) {
        throw std::invalid_argument("t must be a power of two <= 64");
    }
    std::vector<bool> good_mask(psi.dim(), false);
    for (std::uint64_t g : good) {
        if (g >= psi.dim()) throw std::invalid_argument("flagged state out of range");
        good_mask[g] = true;
    }

    int m = 0;
    while ((1 << m) < t) ++m;

    // Clock register as the most significant qubits: the state is t
    // contiguous blocks of dim(psi), block c paired with clock value c.
    const std::uint64_t block_dim = psi.dim();
    std::vector<std::vector<Amplitude>> blocks(t);
    const double inv_sqrt_t = 1.0 / std::sqrt(static_cast<double>(t));
    for (int c = 0; c < t; ++c) {
        blocks[c].resize(block_dim);
        for (std::uint64_t i = 0; i < block_dim; ++i) {
            blocks[c][i] = psi[i] * inv_sqrt_t;
        }
    }

    // Controlled-G^{2^j} on clock bit j (place value 2^j of the block index).
    for (int j = 0; j < m; ++j) {
        const std::uint64_t reps = std::uint64_t{1} << j;
        for (int c = 0; c < t; ++c) {
            if ((c >> j) & 1) {
                for (std::uint64_t r = 0; r < reps; ++r) {
                    apply_rotation(blocks[c], psi, good_mask);
                }
            }
        }
    }

    // Inverse DFT over the block index, then measure the clock.
    std::vector<double> prob(t, 0.0);
    const double inv_t = 1.0 / static_cast<double>(t);
    for (std::uint64_t i = 0; i < block_dim; ++i) {
        for (int k = 0; k < t; ++k) {
            Amplitude acc = 0.0;
            for (int c = 0; c < t; ++c) {
                const double angle = -2.0 * pi * static_cast<double>(k) *
                                     static_cast<double>(c) * inv_t;
                acc += std::polar(1.0, angle) * blocks[c][i];
            }
            prob[k] += std::norm(acc) * inv_t;
        }
    }

    const double u = rng.next_double();
    double cum = 0.0;
    int measured = t - 1;
    for (int k = 0; k < t; ++k) {
        cum += prob[k];
        if (u < cum) {
            measured = k;
            break;
        }
    }

    const double s = std::sin(pi * static_cast<double>(measured) / t);
    const double a_hat = s * s;
    return AmplitudeEstimate{a_hat, t, amplitude_estimation_bound(a_hat, t)};
}

AmplitudeEstimate amplitude_estimation(const Circuit& prep,
                                       const std::vector<std::uint64_t>& good,
                                       int t, SeededRng& rng) {
    if (prep.n_qubits > 12) {
        throw std::invalid_argument("preparation circuit too wide");
    }
    StateVector psi = run_statevector(prep, StateVector::zero(prep.n_qubits));
    return amplitude_estimation_state(psi, good, t, rng);
}

GateMatrix reflection_oracle(const StateVector& psi) {
    if (psi.n_qubits() > 10) {
        throw std::invalid_argument("reflection_oracle supports up to 10 qubits");
    }
    GateMatrix u = GateMatrix::identity(psi.dim());
    for (std::uint64_t r = 0; r < psi.dim(); ++r) {
        for (std::uint64_t c = 0; c < psi.dim(); ++c) {
            u.at(r, c) -= 2.0 * psi[r] * std::conj(psi[c]);
        }
    }
    return u;
}

} // namespace qsim
