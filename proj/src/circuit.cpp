#include "qsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsim {

void Circuit::add(const Gate& g, std::vector<int> targets) {
    if (static_cast<int>(targets.size()) != g.arity()) {
        throw std::invalid_argument("gate arity does not match target count");
    }
    std::set<int> seen;
    for (int q : targets) {
        if (q < 0 || q >= n_qubits) {
            throw std::invalid_argument("gate target out of range");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("gate targets must be distinct");
        }
    }
    steps.push_back(GateApplication{g, std::move(targets)});
}

void apply_matrix_to_qubits(StateVector& s, const GateMatrix& u,
                            const std::vector<int>& targets) {
    const int k = static_cast<int>(targets.size());
    if (u.dim != (std::uint64_t{1} << k)) {
        throw std::invalid_argument("matrix dimension does not match target count");
    }

    // Fast path: single-qubit gate.
    if (k == 1) {
        const std::uint64_t mask = s.qubit_mask(targets[0]);
        const Amplitude u00 = u.at(0, 0), u01 = u.at(0, 1);
        const Amplitude u10 = u.at(1, 0), u11 = u.at(1, 1);
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            if (i & mask) continue;
            const std::uint64_t j = i | mask;
            const Amplitude a = s[i], b = s[j];
            s[i] = u00 * a + u01 * b;
            s[j] = u10 * a + u11 * b;
        }
        return;
    }

    std::vector<std::uint64_t> tmask(k);
    std::uint64_t all_targets = 0;
    for (int t = 0; t < k; ++t) {
        tmask[t] = s.qubit_mask(targets[t]);
        all_targets |= tmask[t];
    }

    const std::uint64_t sub = std::uint64_t{1} << k;
    std::vector<std::uint64_t> offset(sub);
    for (std::uint64_t local = 0; local < sub; ++local) {
        std::uint64_t off = 0;
        for (int t = 0; t < k; ++t) {
            // local bit 0 is targets[0]: the most significant local qubit.
            if ((local >> (k - 1 - t)) & 1u) off |= tmask[t];
        }
        offset[local] = off;
    }

    std::vector<Amplitude> gathered(sub);
    for (std::uint64_t base = 0; base < s.dim(); ++base) {
        if (base & all_targets) continue;
        for (std::uint64_t l = 0; l < sub; ++l) gathered[l] = s[base | offset[l]];
        for (std::uint64_t r = 0; r < sub; ++r) {
            Amplitude acc = 0.0;
            for (std::uint64_t c = 0; c < sub; ++c) {
                acc += u.at(r, c) * gathered[c];
            }
            s[base | offset[r]] = acc;
        }
    }
}

void apply_gate_application(StateVector& s, const GateApplication& app) {
    apply_matrix_to_qubits(s, matrix_of(app.gate), app.targets);
}

RunResult run(const Circuit& c, const StateVector& initial, SeededRng& rng) {
    if (initial.n_qubits() != c.n_qubits) {
        throw std::invalid_argument("initial state does not match circuit width");
    }
    StateVector s = run_statevector(c, initial);
    if (!c.final_measurement) {
        return RunResult{std::move(s), std::nullopt};
    }
    MeasurementOutcome m = measure_qubits(s, *c.final_measurement, rng);
    return RunResult{std::move(m.post_state), std::move(m.bits)};
}

StateVector run_statevector(const Circuit& c, const StateVector& initial) {
    StateVector s = initial;
    for (const auto& step : c.steps) {
        apply_gate_application(s, step);
    }
    return s;
}

Circuit inverse_of(const Circuit& c) {
    Circuit inv(c.n_qubits);
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        const Gate& g = it->gate;
        switch (g.kind()) {
            case GateKind::I:
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z:
            case GateKind::H:
            case GateKind::Cnot:
            case GateKind::Swap:
            case GateKind::Toffoli:
                inv.add(g, it->targets); // self-adjoint
                break;
            default:
                inv.add(Gate::custom(adjoint(matrix_of(g)), "adj"), it->targets);
                break;
        }
    }
    return inv;
}

GateComplexity gate_count(const Circuit& c, bool elementary_basis) {
    if (!elementary_basis) {
        return GateComplexity{static_cast<std::int64_t>(c.steps.size())};
    }
    std::int64_t count = 0;
    for (const auto& step : c.steps) {
        switch (step.gate.kind()) {
            case GateKind::Toffoli:
                count += static_cast<std::int64_t>(toffoli_two_qubit_decomposition().size());
                break;
            case GateKind::Swap:
                count += 3; // three CNOTs
                break;
            default:
                count += 1;
                break;
        }
    }
    return GateComplexity{count};
}

namespace {

std::uint64_t extract_bits(const StateVector& s, std::uint64_t index,
                           const std::vector<int>& regs) {
    std::uint64_t v = 0;
    for (int q : regs) {
        v = (v << 1) | static_cast<std::uint64_t>(s.bit_of(index, q));
    }
    return v;
}

std::uint64_t replace_bits(const StateVector& s, std::uint64_t index,
                           const std::vector<int>& regs, std::uint64_t value) {
    const int k = static_cast<int>(regs.size());
    for (int t = 0; t < k; ++t) {
        const std::uint64_t m = s.qubit_mask(regs[t]);
        if ((value >> (k - 1 - t)) & 1u) {
            index |= m;
        } else {
            index &= ~m;
        }
    }
    return index;
}

void check_oracle_registers(const Oracle& o, const StateVector& s,
                            const std::vector<int>& in_regs,
                            const std::vector<int>& out_regs) {
    if (static_cast<int>(in_regs.size()) != o.in_bits ||
        static_cast<int>(out_regs.size()) != o.out_bits) {
        throw std::invalid_argument("register lists do not match oracle arity");
    }
    std::set<int> seen;
    for (int q : in_regs) {
        if (q < 0 || q >= s.n_qubits() || !seen.insert(q).second) {
            throw std::invalid_argument("oracle registers invalid or overlapping");
        }
    }
    for (int q : out_regs) {
        if (q < 0 || q >= s.n_qubits() || !seen.insert(q).second) {
            throw std::invalid_argument("oracle registers invalid or overlapping");
        }
    }
}

} // namespace

StateVector oracle_apply(Oracle& o, const StateVector& s,
                         const std::vector<int>& in_regs,
                         const std::vector<int>& out_regs) {
    check_oracle_registers(o, s, in_regs, out_regs);
    const std::uint64_t out_mod = std::uint64_t{1} << o.out_bits;
    std::vector<Amplitude> amps(s.dim());
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (s[i] == Amplitude{}) continue;
        const std::uint64_t x = extract_bits(s, i, in_regs);
        const std::uint64_t y = extract_bits(s, i, out_regs);
        const std::uint64_t fx = o.f(x) & (out_mod - 1);
        const std::uint64_t y2 =
            o.target == OracleTarget::Xor ? (y ^ fx) : ((y + fx) & (out_mod - 1));
        amps[replace_bits(s, i, out_regs, y2)] += s[i];
    }
    ++o.query_count;
    return StateVector::from_amplitudes(s.n_qubits(), std::move(amps));
}

StateVector oracle_apply_phase(Oracle& o, const StateVector& s,
                               const std::vector<int>& in_regs) {
    if (o.out_bits != 1) {
        throw std::invalid_argument("phase application needs a single-bit oracle");
    }
    if (static_cast<int>(in_regs.size()) != o.in_bits) {
        throw std::invalid_argument("register list does not match oracle arity");
    }
    std::vector<Amplitude> amps = s.amplitudes();
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (amps[i] == Amplitude{}) continue;
        if (o.f(extract_bits(s, i, in_regs)) & 1u) amps[i] = -amps[i];
    }
    ++o.query_count;
    return StateVector::from_amplitudes(s.n_qubits(), std::move(amps));
}

namespace {

const char* mnemonic(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::T: return "T";
        case GateKind::Rk: return "RK";
        case GateKind::Cnot: return "CNOT";
        case GateKind::Swap: return "SWAP";
        case GateKind::Toffoli: return "CCX";
        default: return nullptr;
    }
}

} // namespace

std::string serialize(const Circuit& c) {
    std::ostringstream out;
    out << "QUBITS " << c.n_qubits << "\n";
    for (const auto& step : c.steps) {
        const char* name = mnemonic(step.gate.kind());
        if (name == nullptr) {
            throw std::invalid_argument("gate has no text-format representation");
        }
        out << name;
        if (step.gate.kind() == GateKind::Rk) out << ' ' << step.gate.k();
        for (int q : step.targets) out << ' ' << q;
        out << "\n";
    }
    if (c.final_measurement) {
        out << "MEASURE";
        for (int q : *c.final_measurement) out << ' ' << q;
        out << "\n";
    }
    return out.str();
}

CircuitParseError::CircuitParseError(int line_, std::string token_,
                                     const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ", token '" + token_ +
                         "': " + what_),
      line(line_),
      token(std::move(token_)) {}

namespace {

int parse_int(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw CircuitParseError(line, tok, "expected a decimal integer");
    }
}

} // namespace

Circuit deserialize(const std::string& text) {
    Circuit c;
    bool have_qubits = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0][0] == '#') continue;

        const std::string& op = toks[0];
        auto want = [&](size_t n) {
            if (toks.size() != n + 1) {
                throw CircuitParseError(lineno, op, "expected " + std::to_string(n) +
                                                        " operand(s)");
            }
        };

        if (op == "QUBITS") {
            want(1);
            if (have_qubits) throw CircuitParseError(lineno, op, "duplicate QUBITS line");
            c.n_qubits = parse_int(toks[1], lineno);
            if (c.n_qubits < 1 || c.n_qubits > MAX_QUBITS) {
                throw CircuitParseError(lineno, toks[1], "qubit count out of range");
            }
            have_qubits = true;
            continue;
        }
        if (!have_qubits) {
            throw CircuitParseError(lineno, op, "QUBITS must come before gates");
        }

        auto add = [&](const Gate& g, std::vector<int> targets) {
            try {
                c.add(g, std::move(targets));
            } catch (const std::invalid_argument& e) {
                throw CircuitParseError(lineno, op, e.what());
            }
        };

        if (op == "H" || op == "X" || op == "Y" || op == "Z" || op == "S" || op == "T") {
            want(1);
            GateKind kind = op == "H"   ? GateKind::H
                            : op == "X" ? GateKind::X
                            : op == "Y" ? GateKind::Y
                            : op == "Z" ? GateKind::Z
                            : op == "S" ? GateKind::S
                                        : GateKind::T;
            add(Gate::make(kind), {parse_int(toks[1], lineno)});
        } else if (op == "RK") {
            want(2);
            const int k = parse_int(toks[1], lineno);
            if (k < 1) throw CircuitParseError(lineno, toks[1], "RK requires k >= 1");
            add(Gate::rk(k), {parse_int(toks[2], lineno)});
        } else if (op == "CNOT") {
            want(2);
            add(Gate::make(GateKind::Cnot),
                {parse_int(toks[1], lineno), parse_int(toks[2], lineno)});
        } else if (op == "SWAP") {
            want(2);
            add(Gate::make(GateKind::Swap),
                {parse_int(toks[1], lineno), parse_int(toks[2], lineno)});
        } else if (op == "CCX") {
            want(3);
            add(Gate::make(GateKind::Toffoli),
                {parse_int(toks[1], lineno), parse_int(toks[2], lineno),
                 parse_int(toks[3], lineno)});
        } else if (op == "MEASURE") {
            if (toks.size() < 2) {
                throw CircuitParseError(lineno, op, "MEASURE needs at least one qubit");
            }
            if (c.final_measurement) {
                throw CircuitParseError(lineno, op, "duplicate MEASURE line");
            }
            std::vector<int> qubits;
            std::set<int> seen;
            for (size_t t = 1; t < toks.size(); ++t) {
                const int q = parse_int(toks[t], lineno);
                if (q < 0 || q >= c.n_qubits || !seen.insert(q).second) {
                    throw CircuitParseError(lineno, toks[t],
                                            "measured qubit invalid or repeated");
                }
                qubits.push_back(q);
            }
            c.final_measurement = std::move(qubits);
        } else {
            throw CircuitParseError(lineno, op, "unknown instruction");
        }
    }
    if (!have_qubits) {
        throw CircuitParseError(lineno == 0 ? 1 : lineno, "", "missing QUBITS line");
    }
    return c;
}

} // namespace qsim
