#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsim/circuit.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace qsim;
using qsim::test::binomial_sigma;
using qsim::test::random_state;

TEST_CASE("single-qubit H circuit samples both outcomes") {
    Circuit c(1);
    c.add(Gate::make(GateKind::H), {0});
    c.final_measurement = std::vector<int>{0};

    int ones = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        SeededRng rng(derive_seed(1, t));
        RunResult out = run(c, StateVector::zero(1), rng);
        if (*out.measured == "1") ++ones;
    }
    CHECK(std::abs(ones / double(trials) - 0.5) <= 3.0 * binomial_sigma(0.5, trials));
}

TEST_CASE("three-CNOT swap circuit from |01> measures 10") {
    Circuit c(2);
    c.add(Gate::make(GateKind::Cnot), {0, 1});
    c.add(Gate::make(GateKind::Cnot), {1, 0});
    c.add(Gate::make(GateKind::Cnot), {0, 1});
    c.final_measurement = std::vector<int>{0, 1};
    SeededRng rng(4);
    RunResult out = run(c, StateVector::basis(2, 0b01), rng);
    CHECK(*out.measured == "10");
}

TEST_CASE("identity on qubit 0, X on qubit 1 maps |01> to |00>") {
    Circuit c(2);
    c.add(Gate::make(GateKind::I), {0});
    c.add(Gate::make(GateKind::X), {1});
    StateVector out = run_statevector(c, StateVector::basis(2, 0b01));
    CHECK(std::norm(out[0b00]) == doctest::Approx(1.0));
}

TEST_CASE("NAND truth table through the Toffoli circuit") {
    const int nand[4] = {1, 1, 1, 0};
    for (int input = 0; input < 4; ++input) {
        Circuit c(3);
        c.add(Gate::make(GateKind::Toffoli), {0, 1, 2});
        c.final_measurement = std::vector<int>{2};
        SeededRng rng(derive_seed(77, input));
        RunResult out = run(c, StateVector::basis(3, input * 2 + 1), rng);
        CHECK(((*out.measured)[0] == '1' ? 1 : 0) == nand[input]);
    }
}

TEST_CASE("gate counting") {
    Circuit empty(2);
    CHECK(gate_count(empty).elementary_gate_count == 0);

    Circuit swap3(2);
    swap3.add(Gate::make(GateKind::Cnot), {0, 1});
    swap3.add(Gate::make(GateKind::Cnot), {1, 0});
    swap3.add(Gate::make(GateKind::Cnot), {0, 1});
    CHECK(gate_count(swap3).elementary_gate_count == 3);
    CHECK(gate_count(swap3, true).elementary_gate_count == 3);

    Circuit tof(3);
    tof.add(Gate::make(GateKind::Toffoli), {0, 1, 2});
    CHECK(gate_count(tof).elementary_gate_count == 1);
    CHECK(gate_count(tof, true).elementary_gate_count ==
          static_cast<std::int64_t>(toffoli_two_qubit_decomposition().size()));

    Circuit sw(2);
    sw.add(Gate::make(GateKind::Swap), {0, 1});
    CHECK(gate_count(sw, true).elementary_gate_count == 3);
}

TEST_CASE("gate counts add under concatenation") {
    Circuit a(3), b(3);
    a.add(Gate::make(GateKind::H), {0});
    a.add(Gate::make(GateKind::Toffoli), {0, 1, 2});
    b.add(Gate::make(GateKind::Swap), {1, 2});
    b.add(Gate::make(GateKind::T), {0});

    Circuit joined(3);
    for (const auto& s : a.steps) joined.add(s.gate, s.targets);
    for (const auto& s : b.steps) joined.add(s.gate, s.targets);

    for (bool elementary : {false, true}) {
        CHECK(gate_count(joined, elementary).elementary_gate_count ==
              gate_count(a, elementary).elementary_gate_count +
                  gate_count(b, elementary).elementary_gate_count);
    }
}

TEST_CASE("oracle identity on one bit") {
    Oracle o(1, 1, [](std::uint64_t x) { return x; });
    StateVector s = StateVector::basis(2, 0b10); // |1>|0>
    s = oracle_apply(o, s, {0}, {1});
    CHECK(std::norm(s[0b11]) == doctest::Approx(1.0));
    CHECK(o.query_count == 1);
}

TEST_CASE("AND oracle with XOR target matches Toffoli semantics") {
    Oracle o(2, 1, [](std::uint64_t x) { return static_cast<std::uint64_t>(x == 3); });
    StateVector s = StateVector::basis(3, 0b111); // |11>|1>
    s = oracle_apply(o, s, {0, 1}, {2});
    CHECK(std::norm(s[0b110]) == doctest::Approx(1.0));
}

TEST_CASE("XOR oracle is self-inverse on superpositions") {
    Oracle o(3, 2, [](std::uint64_t x) { return (x * 5 + 1) & 3; });
    SeededRng rng(15);
    StateVector s = random_state(5, rng);
    StateVector once = oracle_apply(o, s, {0, 1, 2}, {3, 4});
    StateVector twice = oracle_apply(o, once, {0, 1, 2}, {3, 4});
    CHECK(qsim::test::max_entry_distance(s, twice) <= 1e-12);
    CHECK(o.query_count == 2);
}

TEST_CASE("oracle lifting is a permutation of basis states") {
    Oracle o(2, 2, [](std::uint64_t x) { return (3 * x + 2) & 3; });
    std::vector<bool> hit(16, false);
    for (std::uint64_t b = 0; b < 16; ++b) {
        StateVector s = oracle_apply(o, StateVector::basis(4, b), {0, 1}, {2, 3});
        std::uint64_t image = 0;
        for (std::uint64_t i = 0; i < 16; ++i) {
            if (std::norm(s[i]) > 0.5) image = i;
        }
        CHECK_FALSE(hit[image]);
        hit[image] = true;
    }
}

TEST_CASE("modular-add oracle target") {
    Oracle o(1, 2, [](std::uint64_t) { return std::uint64_t{3}; },
             OracleTarget::AddMod);
    // |0>|10>: y=2, f=3 -> 2+3 mod 4 = 1
    StateVector s = StateVector::basis(3, 0b010);
    s = oracle_apply(o, s, {0}, {1, 2});
    CHECK(std::norm(s[0b001]) == doctest::Approx(1.0));
}

TEST_CASE("overlapping oracle registers are rejected") {
    Oracle o(2, 1, [](std::uint64_t) { return std::uint64_t{0}; });
    StateVector s = StateVector::zero(3);
    CHECK_THROWS_AS(oracle_apply(o, s, {0, 1}, {1}), std::invalid_argument);
}

TEST_CASE("run determinism: same circuit, state, and seed") {
    SeededRng gen(33);
    Circuit c(3);
    c.add(Gate::make(GateKind::H), {0});
    c.add(Gate::make(GateKind::Cnot), {0, 2});
    c.add(Gate::make(GateKind::T), {1});
    c.add(Gate::make(GateKind::H), {1});
    c.final_measurement = std::vector<int>{0, 1, 2};
    StateVector init = random_state(3, gen);

    SeededRng r1(123), r2(123);
    RunResult a = run(c, init, r1);
    RunResult b = run(c, init, r2);
    CHECK(*a.measured == *b.measured);
    CHECK(qsim::test::max_entry_distance(a.state, b.state) == 0.0);
}

TEST_CASE("execution preserves the norm") {
    SeededRng gen(71);
    for (int rep = 0; rep < 10; ++rep) {
        Circuit c(4);
        for (int g = 0; g < 30; ++g) {
            switch (gen.next_below(5)) {
                case 0: c.add(Gate::make(GateKind::H), {int(gen.next_below(4))}); break;
                case 1: c.add(Gate::make(GateKind::T), {int(gen.next_below(4))}); break;
                case 2: c.add(Gate::rk(int(gen.next_below(5)) + 1),
                              {int(gen.next_below(4))}); break;
                case 3: {
                    int a = int(gen.next_below(4)), b = int(gen.next_below(4));
                    if (a != b) c.add(Gate::make(GateKind::Cnot), {a, b});
                    break;
                }
                default: c.add(Gate::make(GateKind::Y), {int(gen.next_below(4))}); break;
            }
        }
        StateVector out = run_statevector(c, random_state(4, gen));
        CHECK(std::abs(out.norm_squared() - 1.0) <= 1e-10);
    }
}

TEST_CASE("running a circuit then its inverse returns the initial state") {
    SeededRng gen(93);
    for (int rep = 0; rep < 10; ++rep) {
        Circuit c(3);
        for (int g = 0; g < 20; ++g) {
            switch (gen.next_below(4)) {
                case 0: c.add(Gate::make(GateKind::H), {int(gen.next_below(3))}); break;
                case 1: c.add(Gate::make(GateKind::S), {int(gen.next_below(3))}); break;
                case 2: {
                    int a = int(gen.next_below(3)), b = int(gen.next_below(3));
                    if (a != b) c.add(Gate::make(GateKind::Cnot), {a, b});
                    break;
                }
                default: c.add(Gate::make(GateKind::Toffoli), {0, 1, 2}); break;
            }
        }
        StateVector init = random_state(3, gen);
        StateVector forward = run_statevector(c, init);
        StateVector back = run_statevector(inverse_of(c), forward);
        CHECK(fidelity_up_to_global_phase(back, init) >=
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

namespace {

Circuit random_serializable_circuit(SeededRng& rng) {
    const int n = 2 + static_cast<int>(rng.next_below(4));
    Circuit c(n);
    const int steps = static_cast<int>(rng.next_below(12));
    for (int g = 0; g < steps; ++g) {
        const int q = static_cast<int>(rng.next_below(n));
        int q2 = static_cast<int>(rng.next_below(n));
        switch (rng.next_below(9)) {
            case 0: c.add(Gate::make(GateKind::H), {q}); break;
            case 1: c.add(Gate::make(GateKind::X), {q}); break;
            case 2: c.add(Gate::make(GateKind::Y), {q}); break;
            case 3: c.add(Gate::make(GateKind::Z), {q}); break;
            case 4: c.add(Gate::make(GateKind::S), {q}); break;
            case 5: c.add(Gate::make(GateKind::T), {q}); break;
            case 6: c.add(Gate::rk(1 + int(rng.next_below(6))), {q}); break;
            case 7:
                if (q2 != q) c.add(Gate::make(GateKind::Cnot), {q, q2});
                break;
            default:
                if (q2 != q) c.add(Gate::make(GateKind::Swap), {q, q2});
                break;
        }
    }
    if (n >= 3 && rng.next_bit()) {
        c.add(Gate::make(GateKind::Toffoli), {0, 1, 2});
    }
    if (rng.next_bit()) {
        std::vector<int> measured;
        for (int q = 0; q < n; ++q) {
            if (rng.next_bit()) measured.push_back(q);
        }
        if (!measured.empty()) c.final_measurement = std::move(measured);
    }
    return c;
}

} // namespace

TEST_CASE("serialization round-trips 1000 random circuits") {
    SeededRng rng(2024);
    for (int rep = 0; rep < 1000; ++rep) {
        Circuit c = random_serializable_circuit(rng);
        Circuit back = deserialize(serialize(c));
        CHECK(back == c);
    }
}

TEST_CASE("figure transcriptions serialize as documented") {
    Circuit fig1(1);
    fig1.add(Gate::make(GateKind::H), {0});
    fig1.final_measurement = std::vector<int>{0};
    CHECK(serialize(fig1) == "QUBITS 1\nH 0\nMEASURE 0\n");

    Circuit fig2(2);
    fig2.add(Gate::make(GateKind::Cnot), {0, 1});
    fig2.add(Gate::make(GateKind::Cnot), {1, 0});
    fig2.add(Gate::make(GateKind::Cnot), {0, 1});
    CHECK(serialize(fig2) == "QUBITS 2\nCNOT 0 1\nCNOT 1 0\nCNOT 0 1\n");
}

TEST_CASE("parse errors carry line number and token") {
    try {
        deserialize("QUBITS 2\nH 0\nFROB 1\n");
        FAIL("expected a parse error");
    } catch (const CircuitParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.token == "FROB");
    }

    try {
        deserialize("QUBITS 2\nCNOT 0 x\n");
        FAIL("expected a parse error");
    } catch (const CircuitParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.token == "x");
    }

    CHECK_THROWS_AS(deserialize("H 0\n"), CircuitParseError);
    CHECK_THROWS_AS(deserialize("QUBITS 2\nCNOT 0 5\n"), CircuitParseError);
    CHECK_THROWS_AS(deserialize("QUBITS 2\nCNOT 1 1\n"), CircuitParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    Circuit c = deserialize("# header\nQUBITS 2\n\n# a gate\nX 1\nMEASURE 1 0\n");
    CHECK(c.n_qubits == 2);
    CHECK(c.steps.size() == 1);
    REQUIRE(c.final_measurement.has_value());
    CHECK(*c.final_measurement == std::vector<int>{1, 0});
}

TEST_CASE("wide registers stay exact") {
    // 20 qubits = 1M amplitudes: uniform superposition, one entangling pair,
    // then undo; norm and round-trip stay tight.
    const int n = 20;
    Circuit c(n);
    for (int q = 0; q < n; ++q) c.add(Gate::make(GateKind::H), {q});
    c.add(Gate::make(GateKind::Cnot), {0, n - 1});
    StateVector out = run_statevector(c, StateVector::zero(n));
    CHECK(std::abs(out.norm_squared() - 1.0) <= 1e-10);
    StateVector back = run_statevector(inverse_of(c), out);
    CHECK(std::norm(back[0]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("custom gates have no text form") {
    Circuit c(1);
    c.add(Gate::custom(matrix_of(Gate::make(GateKind::H)), "H2"), {0});
    CHECK_THROWS_AS(serialize(c), std::invalid_argument);
}
