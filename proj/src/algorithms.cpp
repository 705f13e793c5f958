#include "qsim/algorithms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qsim {

using std::numbers::pi;

// ---------------------------------------------------------------------------
// Gradient estimation
// ---------------------------------------------------------------------------

int GradientProblem::output_bits() const {
    const double range = f_max - f_min;
    if (range <= 0.0 || m <= 0.0 || l <= 0.0 || theta <= 0.0) {
        throw std::invalid_argument("gradient problem needs positive range, m, l, theta");
    }
    const double denom = (m * l / std::pow(2.0, n)) * theta / (2.0 * pi);
    const int n0 = static_cast<int>(std::ceil(std::log2(range / denom)));
    return std::max(n0, 1);
}

namespace {

void apply_circuit_at_offset(StateVector& s, const Circuit& c, int offset) {
    for (const auto& step : c.steps) {
        std::vector<int> targets = step.targets;
        for (int& q : targets) q += offset;
        apply_matrix_to_qubits(s, matrix_of(step.gate), targets);
    }
}

} // namespace

GradientResult jordan_gradient(const GradientProblem& p, SeededRng& rng) {
    if (p.d < 1 || p.n < 1) throw std::invalid_argument("d and n must be positive");
    if (static_cast<int>(p.center.size()) != p.d) {
        throw std::invalid_argument("center dimension does not match d");
    }
    const int n0 = p.output_bits();
    const int total = p.d * p.n + n0;
    if (total > MAX_QUBITS) {
        throw std::invalid_argument("gradient registers exceed MAX_QUBITS");
    }

    const std::uint64_t big_n = std::uint64_t{1} << p.n;
    const std::uint64_t big_n0 = std::uint64_t{1} << n0;
    const double scale =
        static_cast<double>(big_n) * static_cast<double>(big_n0) / (p.m * p.l);

    Oracle oracle(
        p.d * p.n, n0,
        [&](std::uint64_t packed) -> std::uint64_t {
            std::vector<double> point(p.d);
            for (int j = p.d - 1; j >= 0; --j) {
                const std::uint64_t delta = packed & (big_n - 1);
                packed >>= p.n;
                point[j] = p.center[j] +
                           p.l * (static_cast<double>(delta) -
                                  static_cast<double>(big_n) / 2.0) /
                               static_cast<double>(big_n);
            }
            const double value = p.f(point);
            if (!std::isfinite(value)) {
                throw std::runtime_error("function value is not finite");
            }
            const long long scaled = std::llround(scale * value);
            const long long mod = static_cast<long long>(big_n0);
            return static_cast<std::uint64_t>(((scaled % mod) + mod) % mod);
        },
        OracleTarget::AddMod);

    StateVector s = StateVector::zero(total);
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    const GateMatrix x = matrix_of(Gate::make(GateKind::X));
    for (int q = 0; q < p.d * p.n; ++q) apply_matrix_to_qubits(s, h, {q});
    for (int q = p.d * p.n; q < total; ++q) apply_matrix_to_qubits(s, x, {q});
    apply_circuit_at_offset(s, inverse_of(qft_circuit(n0)), p.d * p.n);

    std::vector<int> in_regs(p.d * p.n), out_regs(n0);
    for (int q = 0; q < p.d * p.n; ++q) in_regs[q] = q;
    for (int q = 0; q < n0; ++q) out_regs[q] = p.d * p.n + q;
    s = oracle_apply(oracle, s, in_regs, out_regs);

    const Circuit qft_n = qft_circuit(p.n);
    for (int j = 0; j < p.d; ++j) {
        apply_circuit_at_offset(s, qft_n, j * p.n);
    }

    MeasurementOutcome out = measure_qubits(s, in_regs, rng);
    std::vector<double> gradient(p.d);
    for (int j = 0; j < p.d; ++j) {
        std::uint64_t k = 0;
        for (int b = 0; b < p.n; ++b) {
            k = (k << 1) | static_cast<std::uint64_t>(out.bits[j * p.n + b] == '1');
        }
        // Center the readout into [-N/2, N/2).
        const double centered = k >= big_n / 2
                                    ? static_cast<double>(k) - static_cast<double>(big_n)
                                    : static_cast<double>(k);
        gradient[j] = p.m * centered / static_cast<double>(big_n);
    }
    return GradientResult{std::move(gradient), oracle.query_count};
}

GradientResult finite_difference_gradient(ScalarOracle& f,
                                          std::span<const double> x,
                                          DifferenceScheme scheme, double l) {
    if (l <= 0.0) throw std::invalid_argument("step size must be positive");
    const std::int64_t before = f.query_count();
    const int d = static_cast<int>(x.size());
    std::vector<double> point(x.begin(), x.end());
    std::vector<double> gradient(d);
    if (scheme == DifferenceScheme::Forward) {
        const double f0 = f(point);
        for (int j = 0; j < d; ++j) {
            point[j] = x[j] + l;
            gradient[j] = (f(point) - f0) / l;
            point[j] = x[j];
        }
    } else {
        for (int j = 0; j < d; ++j) {
            point[j] = x[j] + l;
            const double fp = f(point);
            point[j] = x[j] - l;
            const double fm = f(point);
            point[j] = x[j];
            gradient[j] = (fp - fm) / (2.0 * l);
        }
    }
    return GradientResult{std::move(gradient), f.query_count() - before};
}

// ---------------------------------------------------------------------------
// Linear systems
// ---------------------------------------------------------------------------

namespace {

Eigen::MatrixXcd to_eigen(const std::vector<Amplitude>& a, std::uint64_t dim) {
    Eigen::MatrixXcd m(dim, dim);
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a[r * dim + c];
        }
    }
    return m;
}

} // namespace

LinearSystem::LinearSystem(std::vector<Amplitude> matrix, StateVector rhs,
                           bool signed_spectrum_)
    : a(std::move(matrix)), dim(rhs.dim()), b(std::move(rhs)),
      signed_spectrum(signed_spectrum_) {
    if (a.size() != dim * dim) {
        throw std::invalid_argument("matrix size does not match rhs dimension");
    }
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            if (std::abs(at(r, c) - std::conj(at(c, r))) > 1e-12) {
                throw std::invalid_argument("matrix is not Hermitian");
            }
        }
    }
}

double LinearSystem::condition_number() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a, dim));
    const auto& vals = solver.eigenvalues();
    double lo = std::abs(vals(0)), hi = std::abs(vals(0));
    for (Eigen::Index i = 1; i < vals.size(); ++i) {
        lo = std::min(lo, std::abs(vals(i)));
        hi = std::max(hi, std::abs(vals(i)));
    }
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

LinearSystem LinearSystem::hermitized(const std::vector<Amplitude>& m,
                                      std::uint64_t dim, const StateVector& rhs) {
    if (m.size() != dim * dim || rhs.dim() != dim) {
        throw std::invalid_argument("embedding dimension mismatch");
    }
    const std::uint64_t big = 2 * dim;
    std::vector<Amplitude> c(big * big);
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            c[r * big + (dim + col)] = m[r * dim + col];
            c[(dim + col) * big + r] = std::conj(m[r * dim + col]);
        }
    }
    std::vector<Amplitude> padded(big);
    for (std::uint64_t i = 0; i < dim; ++i) padded[i] = rhs[i];
    StateVector b2 = StateVector::from_amplitudes(rhs.n_qubits() + 1, std::move(padded));
    return LinearSystem(std::move(c), std::move(b2), /*signed_spectrum=*/true);
}

HhlResult hhl_solve(const LinearSystem& sys, int clock_bits, double t0, double c,
                    SeededRng& rng) {
    if (clock_bits < 1 || clock_bits > 10) {
        throw std::invalid_argument("clock_bits must be in [1, 10]");
    }
    const int k = sys.b.n_qubits();
    const int total = 1 + clock_bits + k;
    if (total > MAX_QUBITS) throw std::invalid_argument("register too wide");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(sys.a, sys.dim));
    double min_abs_eig = std::abs(solver.eigenvalues()(0));
    for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i) {
        min_abs_eig = std::min(min_abs_eig, std::abs(solver.eigenvalues()(i)));
    }
    if (min_abs_eig <= 0.0) throw std::invalid_argument("matrix is singular");
    if (c <= 0.0 || c > min_abs_eig + 1e-12) {
        throw std::invalid_argument("rotation constant must satisfy 0 < C <= min |eigenvalue|");
    }

    // U = exp(i A t0) from the eigendecomposition.
    GateMatrix u(sys.dim);
    {
        Eigen::VectorXcd phases(solver.eigenvalues().size());
        for (Eigen::Index i = 0; i < phases.size(); ++i) {
            phases(i) = std::polar(1.0, solver.eigenvalues()(i) * t0);
        }
        Eigen::MatrixXcd um =
            solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
        for (std::uint64_t r = 0; r < sys.dim; ++r) {
            for (std::uint64_t col = 0; col < sys.dim; ++col) {
                u.at(r, col) = um(static_cast<Eigen::Index>(r),
                                  static_cast<Eigen::Index>(col));
            }
        }
    }

    StateVector s = tensor(StateVector::zero(1 + clock_bits), sys.b);

    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    std::vector<int> sys_targets(k);
    for (int q = 0; q < k; ++q) sys_targets[q] = 1 + clock_bits + q;

    auto controlled_power = [&](int clock_qubit, bool dagger) {
        const std::uint64_t p = std::uint64_t{1} << (clock_bits - clock_qubit);
        GateMatrix up = matrix_power(u, p);
        if (dagger) up = adjoint(up);
        std::vector<int> targets;
        targets.push_back(clock_qubit);
        targets.insert(targets.end(), sys_targets.begin(), sys_targets.end());
        apply_matrix_to_qubits(s, controlled(up), targets);
    };

    // Forward phase estimation: clock qubits are 1..clock_bits, MSB first.
    for (int m = 1; m <= clock_bits; ++m) apply_matrix_to_qubits(s, h, {m});
    for (int m = 1; m <= clock_bits; ++m) controlled_power(m, false);
    apply_circuit_at_offset(s, inverse_of(qft_circuit(clock_bits)), 1);

    // Eigenvalue-conditioned rotation of the ancilla.
    const std::uint64_t clock_count = std::uint64_t{1} << clock_bits;
    const std::uint64_t sys_count = sys.dim;
    const std::uint64_t anc_offset = clock_count * sys_count;
    for (std::uint64_t ell = 1; ell < clock_count; ++ell) {
        double lambda = static_cast<double>(ell);
        if (sys.signed_spectrum && ell >= clock_count / 2) {
            lambda = static_cast<double>(ell) - static_cast<double>(clock_count);
        }
        const double ratio = c / lambda;
        const double keep = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
        for (std::uint64_t x = 0; x < sys_count; ++x) {
            const std::uint64_t i0 = ell * sys_count + x;
            const std::uint64_t i1 = i0 + anc_offset;
            const Amplitude a0 = s[i0], a1 = s[i1];
            s[i0] = keep * a0 - ratio * a1;
            s[i1] = ratio * a0 + keep * a1;
        }
    }

    // Uncompute the phase estimation.
    apply_circuit_at_offset(s, qft_circuit(clock_bits), 1);
    for (int m = clock_bits; m >= 1; --m) controlled_power(m, true);
    for (int m = 1; m <= clock_bits; ++m) apply_matrix_to_qubits(s, h, {m});

    double p_accept = 0.0;
    for (std::uint64_t i = anc_offset; i < 2 * anc_offset; ++i) {
        p_accept += std::norm(s[i]);
    }
    if (p_accept < 1e-12) {
        throw std::runtime_error("no amplitude on the accepting ancilla branch");
    }

    // Post-select ancilla = 1; the clock has been uncomputed to |0...0>.
    std::vector<Amplitude> solution(sys_count);
    for (std::uint64_t x = 0; x < sys_count; ++x) {
        solution[x] = s[anc_offset + x];
    }
    double mass = 0.0;
    for (const auto& amp : solution) mass += std::norm(amp);
    const double inv = 1.0 / std::sqrt(mass);
    for (auto& amp : solution) amp *= inv;

    const bool accepted = rng.next_double() < p_accept;
    return HhlResult{StateVector::from_amplitudes(k, std::move(solution)), accepted,
                     p_accept};
}

LinearSystem ols_instance() {
    const double q = 0.25;
    std::vector<Amplitude> a = {
        15 * q, 9 * q,  5 * q,  -3 * q,
        9 * q,  15 * q, 3 * q,  -5 * q,
        5 * q,  3 * q,  15 * q, -9 * q,
        -3 * q, -5 * q, -9 * q, 15 * q,
    };
    StateVector b = StateVector::from_amplitudes(2, {0.5, 0.5, 0.5, 0.5});
    return LinearSystem(std::move(a), std::move(b));
}

OlsDemoResult ols_demo(SeededRng& rng) {
    // Right-hand side prepared by two Hadamards from |00>.
    Circuit prep(2);
    prep.add(Gate::make(GateKind::H), {0});
    prep.add(Gate::make(GateKind::H), {1});
    StateVector b = run_statevector(prep, StateVector::zero(2));

    LinearSystem sys = ols_instance();
    // The prepared state must agree with the instance's right-hand side.
    if (fidelity_up_to_global_phase(b, sys.b) < 1.0 - 1e-12) {
        throw std::logic_error("prepared rhs does not match the instance");
    }

    HhlResult hhl = hhl_solve(sys, /*clock_bits=*/4, /*t0=*/2.0 * pi / 16.0,
                              /*c=*/1.0, rng);

    const double root = std::sqrt(340.0);
    StateVector target = StateVector::from_amplitudes(
        2, {-1.0 / root, 7.0 / root, 11.0 / root, 13.0 / root});

    Eigen::MatrixXd a(4, 4);
    Eigen::VectorXd rhs(4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) a(r, c) = sys.at(r, c).real();
        rhs(r) = sys.b[r].real();
    }
    Eigen::VectorXd beta = a.fullPivLu().solve(rhs);
    std::vector<double> classical(beta.data(), beta.data() + 4);

    const double fid = fidelity_up_to_global_phase(hhl.solution_state, target);
    return OlsDemoResult{std::move(hhl), std::move(target), std::move(classical), fid};
}

// ---------------------------------------------------------------------------
// Monte Carlo mean estimation
// ---------------------------------------------------------------------------

MonteCarloResult montecarlo_mean(const Circuit& prep,
                                 const std::function<double(std::uint64_t)>& phi,
                                 int t, int medians, SeededRng& rng) {
    if (medians < 1) throw std::invalid_argument("medians must be >= 1");
    if (prep.n_qubits + 1 > 13) throw std::invalid_argument("prep circuit too wide");

    StateVector base = run_statevector(prep, StateVector::zero(prep.n_qubits));

    // W: |x>|0> -> |x>(sqrt(1-phi(x))|0> + sqrt(phi(x))|1>), ancilla appended
    // as the least significant qubit.
    std::vector<Amplitude> ext(base.dim() * 2);
    for (std::uint64_t x = 0; x < base.dim(); ++x) {
        const double p = phi(x);
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("phi must map into [0, 1]");
        }
        ext[2 * x] = base[x] * std::sqrt(1.0 - p);
        ext[2 * x + 1] = base[x] * std::sqrt(p);
    }
    StateVector psi =
        StateVector::from_amplitudes(prep.n_qubits + 1, std::move(ext));

    std::vector<std::uint64_t> good;
    for (std::uint64_t i = 1; i < psi.dim(); i += 2) good.push_back(i);

    std::vector<double> estimates(medians);
    for (int r = 0; r < medians; ++r) {
        SeededRng sub = rng.derive(static_cast<std::uint64_t>(r));
        estimates[r] = amplitude_estimation_state(psi, good, t, sub).a_hat;
    }
    std::sort(estimates.begin(), estimates.end());
    double mu_hat;
    if (medians % 2 == 1) {
        mu_hat = estimates[medians / 2];
    } else {
        mu_hat = 0.5 * (estimates[medians / 2 - 1] + estimates[medians / 2]);
    }
    return MonteCarloResult{mu_hat, static_cast<std::int64_t>(t) * medians,
                            amplitude_estimation_bound(mu_hat, t)};
}

// ---------------------------------------------------------------------------
// QUBO
// ---------------------------------------------------------------------------

QuboProblem::QuboProblem(int n_vars, std::vector<double> quadratic,
                         std::vector<double> linear)
    : n(n_vars), q(std::move(quadratic)), c(std::move(linear)) {
    if (n < 1 || n > 24) throw std::invalid_argument("n must be in [1, 24]");
    if (q.size() != static_cast<std::size_t>(n) * n || c.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("coefficient sizes do not match n");
    }
    for (int r = 0; r < n; ++r) {
        for (int col = r + 1; col < n; ++col) {
            if (std::abs(q[r * n + col] - q[col * n + r]) > 1e-12) {
                throw std::invalid_argument("Q must be symmetric");
            }
        }
    }
}

double QuboProblem::objective(std::uint64_t assignment) const {
    double h = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!((assignment >> i) & 1u)) continue;
        h += c[i] + q[i * n + i];
        for (int j = i + 1; j < n; ++j) {
            if ((assignment >> j) & 1u) h += 2.0 * q[i * n + j];
        }
    }
    return h;
}

namespace {

bool lex_less(std::uint64_t a, std::uint64_t b, int n) {
    for (int i = 0; i < n; ++i) {
        const int ba = static_cast<int>((a >> i) & 1u);
        const int bb = static_cast<int>((b >> i) & 1u);
        if (ba != bb) return ba < bb;
    }
    return false;
}

} // namespace

QuboResult qubo_bruteforce(const QuboProblem& p) {
    const std::uint64_t count = std::uint64_t{1} << p.n;
    std::uint64_t best_mask = 0;
    double best = p.objective(0);
    double running = best;
    double scale = std::abs(best);
    std::uint64_t mask = 0;

    // Gray-code sweep: each step flips one variable, so the objective
    // updates in O(n). The accumulator is resynced to an exact evaluation
    // periodically, and candidates within the drift band are re-evaluated
    // exactly, so rounding never decides a minimum or a tie.
    for (std::uint64_t i = 1; i < count; ++i) {
        const int flip = std::countr_zero(i);
        const int old_bit = static_cast<int>((mask >> flip) & 1u);
        double delta = p.c[flip] + p.q[flip * p.n + flip];
        for (int j = 0; j < p.n; ++j) {
            if (j != flip && ((mask >> j) & 1u)) delta += 2.0 * p.q[flip * p.n + j];
        }
        running += old_bit ? -delta : delta;
        mask ^= std::uint64_t{1} << flip;
        if ((i & 0xffffu) == 0) running = p.objective(mask);
        scale = std::max(scale, std::abs(running));

        const double band = 1e-9 * std::max(1.0, scale);
        if (running < best + band) {
            const double exact = p.objective(mask);
            if (exact < best ||
                (exact == best && lex_less(mask, best_mask, p.n))) {
                best = exact;
                best_mask = mask;
                running = exact;
            }
        }
    }

    std::vector<int> x(p.n);
    for (int i = 0; i < p.n; ++i) x[i] = static_cast<int>((best_mask >> i) & 1u);
    return QuboResult{std::move(x), best};
}

// ---------------------------------------------------------------------------
// Vandermonde interpolation / least squares
// ---------------------------------------------------------------------------

std::vector<double> vandermonde_fit(const std::vector<VandermondeNode>& nodes,
                                    int degree) {
    const int k = static_cast<int>(nodes.size());
    const int cols = degree + 1;
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (k < cols) throw std::invalid_argument("need at least degree+1 nodes");
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (nodes[i].x == nodes[j].x) {
                throw std::invalid_argument("nodes must be distinct");
            }
        }
    }

    Eigen::MatrixXd v(k, cols);
    Eigen::VectorXd rhs(k);
    for (int r = 0; r < k; ++r) {
        double pw = 1.0;
        for (int c = 0; c < cols; ++c) {
            v(r, c) = pw;
            pw *= nodes[r].x;
        }
        rhs(r) = nodes[r].v;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    const double smax = svd.singularValues()(0);
    const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(cond < 1e12)) {
        throw std::runtime_error("vandermonde system is singular or ill-conditioned"
                                 " (condition estimate " + std::to_string(cond) + ")");
    }

    Eigen::VectorXd coeff = svd.solve(rhs);
    return std::vector<double>(coeff.data(), coeff.data() + cols);
}

} // namespace qsim
