#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsim/subroutines.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>

using namespace qsim;
using qsim::test::binomial_sigma;
using qsim::test::random_state;

namespace {

const double INV_SQRT2 = 1.0 / std::sqrt(2.0);

// Composes a circuit into an explicit matrix by running basis states.
GateMatrix circuit_matrix(const Circuit& c) {
    const std::uint64_t dim = std::uint64_t{1} << c.n_qubits;
    GateMatrix m(dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        StateVector out = run_statevector(c, StateVector::basis(c.n_qubits, col));
        for (std::uint64_t row = 0; row < dim; ++row) m.at(row, col) = out[row];
    }
    return m;
}

} // namespace

TEST_CASE("single-qubit QFT is the Hadamard") {
    GateMatrix f = circuit_matrix(qft_circuit(1));
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    for (std::uint64_t i = 0; i < 4; ++i) {
        CHECK(std::abs(f.entries[i] - h.entries[i]) < 1e-12);
    }
}

TEST_CASE("QFT of |000> is the uniform superposition") {
    StateVector out = run_statevector(qft_circuit(3), StateVector::zero(3));
    for (std::uint64_t i = 0; i < 8; ++i) {
        CHECK(std::abs(out[i] - Amplitude{1.0 / std::sqrt(8.0)}) < 1e-12);
    }
}

TEST_CASE("QFT circuit equals the DFT matrix for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        GateMatrix f = circuit_matrix(qft_circuit(n));
        GateMatrix ref = dft_matrix(n);
        double worst = 0.0;
        for (std::uint64_t i = 0; i < f.dim * f.dim; ++i) {
            worst = std::max(worst, std::abs(f.entries[i] - ref.entries[i]));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("QFT then inverse QFT is the identity on random states") {
    for (int n = 1; n <= 8; ++n) {
        const Circuit f = qft_circuit(n);
        const Circuit finv = inverse_of(f);
        for (int rep = 0; rep < 100; ++rep) {
            SeededRng rng(derive_seed(n * 1000, rep));
            StateVector psi = random_state(n, rng);
            StateVector back = run_statevector(finv, run_statevector(f, psi));
            CHECK(fidelity_up_to_global_phase(back, psi) >=
                  doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("phase kickback: Z on |1> flips the ancilla to |->") {
    StateVector out = phase_kickback_demo(matrix_of(Gate::make(GateKind::Z)), ket1());
    // Register: ancilla then target. Expect (|0> - |1>)/sqrt(2) x |1>.
    CHECK(std::abs(out[0b01] - Amplitude{INV_SQRT2}) < 1e-12);
    CHECK(std::abs(out[0b11] + Amplitude{INV_SQRT2}) < 1e-12);
}

TEST_CASE("phase kickback: eigenvalue 1 leaves the ancilla in |+>") {
    StateVector out = phase_kickback_demo(matrix_of(Gate::make(GateKind::Z)), ket0());
    CHECK(std::abs(out[0b00] - Amplitude{INV_SQRT2}) < 1e-12);
    CHECK(std::abs(out[0b10] - Amplitude{INV_SQRT2}) < 1e-12);
}

TEST_CASE("phase kickback: T on |1> leaves e^{i pi/4} on the ancilla") {
    StateVector out = phase_kickback_demo(matrix_of(Gate::make(GateKind::T)), ket1());
    const Amplitude expected = std::polar(INV_SQRT2, std::numbers::pi / 4.0);
    CHECK(std::abs(out[0b11] - expected) < 1e-12);
}

TEST_CASE("phase kickback leaves the target register undisturbed") {
    SeededRng rng(5);
    // Random diagonal unitary; any basis state is an eigenvector.
    GateMatrix u(4);
    for (int i = 0; i < 4; ++i) {
        u.at(i, i) = std::polar(1.0, rng.next_double() * 2.0 * std::numbers::pi);
    }
    StateVector eig = StateVector::basis(2, 2);
    StateVector out = phase_kickback_demo(u, eig);
    // Project the target register: both ancilla branches carry |10>.
    CHECK(std::norm(out[0b010]) + std::norm(out[0b110]) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("phase kickback rejects non-eigenvectors") {
    CHECK_THROWS_AS(phase_kickback_demo(matrix_of(Gate::make(GateKind::H)), ket1()),
                    std::invalid_argument);
}

TEST_CASE("kickback target fidelity is 1 for non-basis eigenvectors") {
    // X eigenvectors |+> (phase 0) and |-> (phase 1/2).
    for (const StateVector& eig : {ket_plus(), ket_minus()}) {
        StateVector out = phase_kickback_demo(matrix_of(Gate::make(GateKind::X)), eig);
        for (int branch = 0; branch < 2; ++branch) {
            std::vector<Amplitude> target = {out[branch * 2 + 0], out[branch * 2 + 1]};
            double mass = std::norm(target[0]) + std::norm(target[1]);
            for (auto& a : target) a /= std::sqrt(mass);
            StateVector reg = StateVector::from_amplitudes(1, std::move(target));
            CHECK(fidelity_up_to_global_phase(reg, eig) >=
                  doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("phase estimation reads phi = 0.4375 exactly at five bits") {
    GateMatrix u(2);
    u.at(0, 0) = 1.0;
    u.at(1, 1) = std::polar(1.0, 2.0 * std::numbers::pi * 0.4375);
    SeededRng rng(31);
    Eigenphase est = phase_estimation(u, ket1(), 5, rng);
    CHECK(est.phi == doctest::Approx(0.4375).epsilon(1e-12));
}

TEST_CASE("phase estimation of the identity reads zero") {
    SeededRng rng(32);
    Eigenphase est = phase_estimation(GateMatrix::identity(2), ket0(), 4, rng);
    CHECK(est.phi == 0.0);
}

TEST_CASE("single clock bit resolves the Z eigenphase 1/2") {
    SeededRng rng(33);
    Eigenphase est = phase_estimation(matrix_of(Gate::make(GateKind::Z)), ket1(), 1, rng);
    CHECK(est.phi == doctest::Approx(0.5));
}

TEST_CASE("phase estimation is exact on every n-bit phase, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t big_n = std::uint64_t{1} << n;
        for (std::uint64_t j = 0; j < big_n; ++j) {
            GateMatrix u(2);
            u.at(0, 0) = 1.0;
            u.at(1, 1) = std::polar(
                1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / big_n);
            SeededRng rng(derive_seed(n, j));
            Eigenphase est = phase_estimation(u, ket1(), n, rng);
            CHECK(est.phi ==
                  doctest::Approx(static_cast<double>(j) / big_n).epsilon(1e-12));
        }
    }
}

TEST_CASE("grover at n=3, k=2 hits the closed form") {
    Oracle o(3, 1, [](std::uint64_t x) { return static_cast<std::uint64_t>(x == 5); });
    SeededRng rng(17);
    GroverResult out = grover_search(o, 3, 2, rng);
    CHECK(out.success_probability ==
          doctest::Approx(121.0 / 128.0).epsilon(1e-9)); // sin^2(5 asin(1/sqrt 8))
    CHECK(out.success_probability ==
          doctest::Approx(grover_success_probability(3, 2)).epsilon(1e-9));
    CHECK(out.queries == 2);
}

TEST_CASE("grover with zero iterations is uniform sampling") {
    Oracle o(4, 1, [](std::uint64_t x) { return static_cast<std::uint64_t>(x == 9); });
    SeededRng rng(18);
    GroverResult out = grover_search(o, 4, 0, rng);
    CHECK(out.success_probability == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(out.queries == 0);
}

TEST_CASE("grover query count equals the iteration count") {
    for (int k : {1, 3, 7}) {
        Oracle o(4, 1,
                 [](std::uint64_t x) { return static_cast<std::uint64_t>(x == 11); });
        SeededRng rng(19);
        GroverResult out = grover_search(o, 4, k, rng);
        CHECK(out.queries == k);
    }
}

TEST_CASE("grover iteration scaling fits the square-root exponent") {
    // Least-squares fit of log2(k_min) against n for n = 3..10.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int n = 3; n <= 10; ++n) {
        const int k = grover_iterations_for_success(n, 0.9);
        const double x = n, y = std::log2(static_cast<double>(k));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    const double beta = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    CHECK(std::abs(beta - 0.5) <= 0.05);
}

TEST_CASE("naive search succeeds with probability 2^-n on one marked item") {
    const int n = 4;
    int hits = 0;
    const int trials = 40000;
    for (int t = 0; t < trials; ++t) {
        Oracle o(n, 1,
                 [](std::uint64_t x) { return static_cast<std::uint64_t>(x == 6); });
        SeededRng rng(derive_seed(55, t));
        SearchResult out = naive_search(o, n, rng);
        if (out.found && *out.found == "0110") ++hits;
        CHECK(out.queries == 1);
    }
    const double p = 1.0 / 16.0;
    CHECK(std::abs(hits / double(trials) - p) <= 3.0 * binomial_sigma(p, trials));
}

TEST_CASE("naive search with constant oracles") {
    Oracle all(3, 1, [](std::uint64_t) { return std::uint64_t{1}; });
    SeededRng rng(56);
    CHECK(naive_search(all, 3, rng).found.has_value());

    Oracle none(3, 1, [](std::uint64_t) { return std::uint64_t{0}; });
    CHECK_FALSE(naive_search(none, 3, rng).found.has_value());
}

TEST_CASE("amplitude estimation: empty and full flagged sets are exact") {
    Circuit prep(2);
    prep.add(Gate::make(GateKind::H), {0});
    prep.add(Gate::make(GateKind::H), {1});
    SeededRng rng(61);
    CHECK(amplitude_estimation(prep, {}, 16, rng).a_hat == 0.0);
    CHECK(amplitude_estimation(prep, {0, 1, 2, 3}, 16, rng).a_hat == 1.0);
}

TEST_CASE("amplitude estimation coverage on the Bernoulli(1/2) state") {
    Circuit prep(1);
    prep.add(Gate::make(GateKind::H), {0});
    const double a = 0.5;
    const int t = 16;
    const double bound = amplitude_estimation_bound(a, t);
    int within = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        SeededRng rng(derive_seed(62, trial));
        AmplitudeEstimate est = amplitude_estimation(prep, {1}, t, rng);
        if (std::abs(est.a_hat - a) <= bound) ++within;
    }
    const double min_rate = 8.0 / (std::numbers::pi * std::numbers::pi);
    const double sigma = binomial_sigma(min_rate, trials);
    CHECK(within / double(trials) >= min_rate - 3.0 * sigma);
}

TEST_CASE("amplitude estimation coverage on a non-dyadic amplitude") {
    // a = 0.3: theta/pi is irrational, so the estimate is never exact and
    // the 8/pi^2 nearest-point guarantee is exercised for real.
    const double a = 0.3;
    const double angle = std::asin(std::sqrt(a));
    GateMatrix rot(2);
    rot.at(0, 0) = std::cos(angle);
    rot.at(0, 1) = -std::sin(angle);
    rot.at(1, 0) = std::sin(angle);
    rot.at(1, 1) = std::cos(angle);
    Circuit prep(1);
    prep.add(Gate::custom(rot, "Ry"), {0});

    const int t = 32;
    const double bound = amplitude_estimation_bound(a, t);
    int within = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        SeededRng rng(derive_seed(63, trial));
        AmplitudeEstimate est = amplitude_estimation(prep, {1}, t, rng);
        if (std::abs(est.a_hat - a) <= bound) ++within;
    }
    const double min_rate = 8.0 / (std::numbers::pi * std::numbers::pi);
    const double sigma = binomial_sigma(min_rate, trials);
    CHECK(within / double(trials) >= min_rate - 3.0 * sigma);
}

TEST_CASE("amplitude estimate records the bound at the estimate") {
    Circuit prep(1);
    prep.add(Gate::make(GateKind::H), {0});
    SeededRng rng(64);
    AmplitudeEstimate est = amplitude_estimation(prep, {1}, 16, rng);
    CHECK(est.error_bound ==
          doctest::Approx(amplitude_estimation_bound(est.a_hat, 16)));
    CHECK(est.t == 16);
}

TEST_CASE("reflection oracle negates psi and fixes the orthogonal complement") {
    SeededRng rng(65);
    StateVector psi = random_state(3, rng);
    GateMatrix u = reflection_oracle(psi);

    StateVector image = apply(u, psi);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        CHECK(std::abs(image[i] + psi[i]) < 1e-10);
    }

    // Build a vector orthogonal to psi by Gram-Schmidt.
    StateVector other = random_state(3, rng);
    Amplitude overlap = inner_product(psi, other);
    std::vector<Amplitude> ortho(psi.dim());
    double norm = 0.0;
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        ortho[i] = other[i] - overlap * psi[i];
        norm += std::norm(ortho[i]);
    }
    for (auto& v : ortho) v /= std::sqrt(norm);
    StateVector phi = StateVector::from_amplitudes(3, std::move(ortho));
    StateVector fixed = apply(u, phi);
    for (std::uint64_t i = 0; i < phi.dim(); ++i) {
        CHECK(std::abs(fixed[i] - phi[i]) < 1e-10);
    }

    // Reflections are involutions.
    GateMatrix u2 = multiply(u, u);
    for (std::uint64_t r = 0; r < u2.dim; ++r) {
        for (std::uint64_t c = 0; c < u2.dim; ++c) {
            CHECK(std::abs(u2.at(r, c) - (r == c ? 1.0 : 0.0)) < 1e-10);
        }
    }
    CHECK(u.is_unitary(1e-10));
}
