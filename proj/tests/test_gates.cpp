#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsim/circuit.hpp"
#include "qsim/gates.hpp"

#include <cmath>
#include <numbers>

using namespace qsim;

namespace {

double max_matrix_distance(const GateMatrix& a, const GateMatrix& b) {
    REQUIRE(a.dim == b.dim);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim * a.dim; ++i) {
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    }
    return worst;
}

const std::vector<GateKind> kNamedGates = {
    GateKind::I, GateKind::X,    GateKind::Y,    GateKind::Z,      GateKind::H,
    GateKind::S, GateKind::T,    GateKind::Cnot, GateKind::Swap,   GateKind::Toffoli};

} // namespace

TEST_CASE("every named gate is unitary to 1e-12") {
    for (GateKind k : kNamedGates) {
        CHECK(matrix_of(Gate::make(k)).unitarity_defect() < 1e-12);
    }
    for (int k = 1; k <= 8; ++k) {
        CHECK(matrix_of(Gate::rk(k)).unitarity_defect() < 1e-12);
    }
}

TEST_CASE("Y|0> = i|1>") {
    StateVector out = apply(matrix_of(Gate::make(GateKind::Y)), ket0());
    CHECK(std::abs(out[0]) < 1e-15);
    CHECK(std::abs(out[1] - Amplitude{0.0, 1.0}) < 1e-15);
}

TEST_CASE("Z|+> = |->") {
    StateVector out = apply(matrix_of(Gate::make(GateKind::Z)), ket_plus());
    CHECK(fidelity_up_to_global_phase(out, ket_minus()) == doctest::Approx(1.0));
    CHECK(std::abs(out[1] - ket_minus()[1]) < 1e-15);
}

TEST_CASE("CNOT|11> = |10>") {
    StateVector out =
        apply(matrix_of(Gate::make(GateKind::Cnot)), StateVector::basis(2, 0b11));
    CHECK(std::abs(out[0b10] - Amplitude{1.0}) < 1e-15);
}

TEST_CASE("controlled() reproduces the CNOT matrix") {
    GateMatrix cx = controlled(matrix_of(Gate::make(GateKind::X)));
    CHECK(max_matrix_distance(cx, matrix_of(Gate::make(GateKind::Cnot))) == 0.0);

    GateMatrix ci = controlled(GateMatrix::identity(2));
    CHECK(max_matrix_distance(ci, GateMatrix::identity(4)) == 0.0);

    GateMatrix ccx = controlled(controlled(matrix_of(Gate::make(GateKind::X))));
    CHECK(max_matrix_distance(ccx, matrix_of(Gate::make(GateKind::Toffoli))) == 0.0);
    CHECK(ccx.dim == 8);
}

TEST_CASE("controlled() rejects non-unitary input") {
    GateMatrix bad(2);
    bad.at(0, 0) = 2.0;
    CHECK_THROWS_AS(controlled(bad), std::invalid_argument);
}

TEST_CASE("adjoint behavior") {
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    CHECK(max_matrix_distance(adjoint(h), h) < 1e-15);

    const GateMatrix s = matrix_of(Gate::make(GateKind::S));
    CHECK(max_matrix_distance(multiply(adjoint(s), s), GateMatrix::identity(2)) <
          1e-15);

    const GateMatrix tdg = adjoint(matrix_of(Gate::make(GateKind::T)));
    const Amplitude expected = std::polar(1.0, -std::numbers::pi / 4.0);
    CHECK(std::abs(tdg.at(1, 1) - expected) < 1e-15);
}

TEST_CASE("involutions: X^2 = Y^2 = Z^2 = H^2 = I") {
    for (GateKind k : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H}) {
        const GateMatrix m = matrix_of(Gate::make(k));
        CHECK(max_matrix_distance(multiply(m, m), GateMatrix::identity(2)) <= 1e-12);
    }
}

TEST_CASE("phase-gate tower: T^2 = S and S^2 = Z") {
    const GateMatrix t = matrix_of(Gate::make(GateKind::T));
    const GateMatrix s = matrix_of(Gate::make(GateKind::S));
    CHECK(max_matrix_distance(multiply(t, t), s) <= 1e-12);
    CHECK(max_matrix_distance(multiply(s, s), matrix_of(Gate::make(GateKind::Z))) <=
          1e-12);
}

TEST_CASE("conjugation: H Z H = X") {
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    const GateMatrix z = matrix_of(Gate::make(GateKind::Z));
    CHECK(max_matrix_distance(multiply(h, multiply(z, h)),
                              matrix_of(Gate::make(GateKind::X))) <= 1e-12);
}

TEST_CASE("three CNOTs make a SWAP") {
    Circuit c(2);
    c.add(Gate::make(GateKind::Cnot), {0, 1});
    c.add(Gate::make(GateKind::Cnot), {1, 0});
    c.add(Gate::make(GateKind::Cnot), {0, 1});

    // Composed action equals the SWAP matrix on every basis state.
    const GateMatrix swap = matrix_of(Gate::make(GateKind::Swap));
    for (std::uint64_t b = 0; b < 4; ++b) {
        StateVector composed = run_statevector(c, StateVector::basis(2, b));
        StateVector direct = apply(swap, StateVector::basis(2, b));
        for (std::uint64_t i = 0; i < 4; ++i) {
            CHECK(std::abs(composed[i] - direct[i]) <= 1e-12);
        }
    }

    StateVector out = run_statevector(c, StateVector::basis(2, 0b01));
    CHECK(std::abs(out[0b10] - Amplitude{1.0}) <= 1e-12);
}

TEST_CASE("R_1 = Z and R_2 = S") {
    CHECK(max_matrix_distance(matrix_of(Gate::rk(1)),
                              matrix_of(Gate::make(GateKind::Z))) <= 1e-12);
    CHECK(max_matrix_distance(matrix_of(Gate::rk(2)),
                              matrix_of(Gate::make(GateKind::S))) <= 1e-12);
    CHECK_THROWS_AS(Gate::rk(0), std::invalid_argument);
}

TEST_CASE("controlled nesting depth is capped at 2") {
    Gate ccx = Gate::make_controlled(Gate::make_controlled(Gate::make(GateKind::X)));
    CHECK(ccx.arity() == 3);
    CHECK_THROWS_AS(Gate::make_controlled(ccx), std::invalid_argument);
}

TEST_CASE("Toffoli decomposition matches the 8x8 Toffoli per basis state") {
    const auto steps = toffoli_two_qubit_decomposition();
    for (const auto& step : steps) {
        CHECK(step.gate.arity() <= 2);
    }

    Circuit c(3);
    for (const auto& step : steps) c.add(step.gate, step.targets);
    const GateMatrix toffoli = matrix_of(Gate::make(GateKind::Toffoli));
    for (std::uint64_t b = 0; b < 8; ++b) {
        StateVector composed = run_statevector(c, StateVector::basis(3, b));
        StateVector direct = apply(toffoli, StateVector::basis(3, b));
        CHECK(fidelity_up_to_global_phase(composed, direct) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Toffoli decomposition computes NAND into the ancilla") {
    Circuit c(3);
    for (const auto& step : toffoli_two_qubit_decomposition()) {
        c.add(step.gate, step.targets);
    }
    // |11>|1> -> |11>|0>
    StateVector out = run_statevector(c, StateVector::basis(3, 0b111));
    CHECK(std::norm(out[0b110]) == doctest::Approx(1.0).epsilon(1e-12));
    // |00>|1> stays |00>|1>
    out = run_statevector(c, StateVector::basis(3, 0b001));
    CHECK(std::norm(out[0b001]) == doctest::Approx(1.0).epsilon(1e-12));
}
