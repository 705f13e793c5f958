#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsim/circuit.hpp"
#include "qsim/rng.hpp"
#include "test_util.hpp"

#include <cmath>
#include <set>

using namespace qsim;
using qsim::test::binomial_sigma;

TEST_CASE("minimal-standard recurrence from seed 1") {
    const LcgParams p = LcgParams::minimal_standard();
    CHECK(lcg_next(p, 1) == 16807);
    CHECK(lcg_next(p, 16807) == 282475249);
}

TEST_CASE("degenerate parameterizations") {
    const LcgParams identity(1, 0, 97);
    CHECK(lcg_next(identity, 42) == 42); // fixed point

    const LcgParams zeroc(5, 0, 97);
    CHECK(lcg_next(zeroc, 0) == 0); // 0 forever
}

TEST_CASE("parameter constraints are enforced at construction") {
    CHECK_THROWS_AS(LcgParams(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(LcgParams(7, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS(LcgParams(3, 9, 7), std::invalid_argument);
    CHECK_THROWS_AS(lcg_next(LcgParams(3, 1, 7), 7), std::invalid_argument);
}

TEST_CASE("wide intermediates keep large moduli exact") {
    // a * x overflows 64 bits without a wide multiply.
    const LcgParams p((std::uint64_t{1} << 62) - 3, 11, (std::uint64_t{1} << 62) - 1);
    const std::uint64_t x = (std::uint64_t{1} << 61) + 12345;
    const std::uint64_t expected = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(p.a) * x + p.c) % p.m);
    CHECK(lcg_next(p, x) == expected);
}

TEST_CASE("one million minimal-standard draws stay in range without recurrence") {
    const LcgParams p = LcgParams::minimal_standard();
    std::uint64_t x = 1;
    for (int i = 0; i < 1000000; ++i) {
        x = lcg_next(p, x);
        REQUIRE(x < p.m);
        REQUIRE(x != 1); // the seed never recurs inside the window
    }
}

TEST_CASE("normalized outputs lie strictly in [0, 1)") {
    const LcgParams p = LcgParams::minimal_standard();
    BitStream stream = BitStream::lcg(p, 1);
    for (int i = 0; i < 10000; ++i) {
        const double v =
            static_cast<double>(stream.next_value()) / static_cast<double>(p.m);
        REQUIRE(v >= 0.0);
        REQUIRE(v < 1.0);
    }
}

TEST_CASE("qrng statevector probability is exactly one half") {
    // The pre-measurement state after H matches |+> entrywise.
    StateVector plus = ket_plus();
    Circuit c(1);
    c.add(Gate::make(GateKind::H), {0});
    StateVector pre = run_statevector(c, StateVector::zero(1));
    CHECK(qsim::test::max_entry_distance(pre, plus) == 0.0);
    CHECK(std::norm(pre[1]) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("qrng bits are unbiased over many draws") {
    SeededRng rng(5);
    int ones = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) ones += qrng_bit(rng);
    CHECK(std::abs(ones / double(n) - 0.5) <= 3.0 * binomial_sigma(0.5, n));
}

TEST_CASE("equal seeds give equal streams") {
    BitStream a = BitStream::qrng(99), b = BitStream::qrng(99);
    for (int i = 0; i < 2000; ++i) {
        CHECK(a.next_value() == b.next_value());
    }
    BitStream c = BitStream::lcg(LcgParams::minimal_standard(), 7);
    BitStream d = BitStream::lcg(LcgParams::minimal_standard(), 7);
    for (int i = 0; i < 2000; ++i) {
        CHECK(c.next_value() == d.next_value());
    }
}

TEST_CASE("the minimal standard shows no period within a short window") {
    UniformityReport rep =
        uniformity_report(BitStream::lcg(LcgParams::minimal_standard(), 1), 1000);
    CHECK_FALSE(rep.period.has_value());
    CHECK(std::abs(rep.mean_deviation) < 0.05);
}

TEST_CASE("the short-period demo parameters are caught") {
    UniformityReport rep =
        uniformity_report(BitStream::lcg(LcgParams::short_period_demo(), 1), 2048);
    REQUIRE(rep.period.has_value());
    CHECK(*rep.period == 256);
    // The measured mean deviation is reported as data, whatever it is.
    CHECK(std::isfinite(rep.mean_deviation));
}

TEST_CASE("qrng streams pass the chi-square test in nearly all seeded runs") {
    const int runs = 200;
    int passed = 0;
    for (int r = 0; r < runs; ++r) {
        UniformityReport rep =
            uniformity_report(BitStream::qrng(derive_seed(1000, r)), 4000);
        if (rep.chi_square_p > 0.01) ++passed;
    }
    // Null acceptance rate is 99%; allow three sigma of slack.
    const double sigma = binomial_sigma(0.99, runs);
    CHECK(passed / double(runs) >= 0.99 - 3.0 * sigma);
}

TEST_CASE("autocorrelation of a healthy stream is small") {
    UniformityReport rep =
        uniformity_report(BitStream::lcg(LcgParams::minimal_standard(), 1), 20000);
    REQUIRE(rep.autocorrelation.size() == 16);
    for (double r : rep.autocorrelation) {
        CHECK(std::abs(r) < 0.05);
    }
}

TEST_CASE("gamma_q matches known chi-square tail values") {
    // Chi-square with 15 dof: P(X > 25) ~ 0.0498, P(X > 7.26) ~ 0.95.
    CHECK(gamma_q(7.5, 12.5) == doctest::Approx(0.0498).epsilon(0.01));
    CHECK(gamma_q(7.5, 3.63) == doctest::Approx(0.95).epsilon(0.01));
    CHECK(gamma_q(7.5, 0.0) == 1.0);
}
