#include "qsim/money.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qsim {

StateVector encode_money_qubit(int bit, int basis) {
    if (basis == 0) return bit ? ket1() : ket0();
    return bit ? ket_minus() : ket_plus();
}

WiesnerBill Bank::mint(int n, SeededRng& rng) {
    if (n < 1 || n > 64) throw std::invalid_argument("bill size must be in [1, 64]");
    std::vector<int> bits(n), bases(n);
    for (int i = 0; i < n; ++i) {
        bits[i] = rng.next_bit();
        bases[i] = rng.next_bit();
    }
    return mint_forced(bits, bases);
}

WiesnerBill Bank::mint_forced(const std::vector<int>& bits,
                              const std::vector<int>& bases) {
    const int n = static_cast<int>(bits.size());
    if (n < 1 || n > 64 || bases.size() != bits.size()) {
        throw std::invalid_argument("bad bill description");
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "W%06llu",
                  static_cast<unsigned long long>(next_serial_++));
    BankRecord record{buf, bits, bases};
    records_[record.serial] = record;

    WiesnerBill bill;
    bill.serial = record.serial;
    bill.qubits.reserve(bits.size());
    for (int i = 0; i < n; ++i) {
        bill.qubits.push_back(encode_money_qubit(bits[i], bases[i]));
    }
    return bill;
}

const BankRecord& Bank::record(const std::string& serial) const {
    auto it = records_.find(serial);
    if (it == records_.end()) throw std::invalid_argument("unknown serial number");
    return it->second;
}

VerifyResult Bank::verify(const std::string& serial,
                          const std::vector<StateVector>& qubits, SeededRng& rng) {
    auto it = records_.find(serial);
    if (it == records_.end()) throw std::invalid_argument("unknown serial number");
    BankRecord& rec = it->second;
    if (qubits.size() != rec.bill_bits.size()) {
        throw std::invalid_argument("bill length does not match the record");
    }

    bool valid = true;
    std::vector<StateVector> post;
    post.reserve(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        const MeasurementBasis basis = rec.bases[i] == 0
                                           ? MeasurementBasis::Computational
                                           : MeasurementBasis::Hadamard;
        MeasurementOutcome out = measure_qubit(qubits[i], 0, basis, rng);
        if ((out.bits[0] == '1' ? 1 : 0) != rec.bill_bits[i]) valid = false;
        post.push_back(std::move(out.post_state));
    }

    VerifyResult result;
    result.verdict = valid ? Verdict::Valid : Verdict::Invalid;
    switch (policy_) {
        case BankPolicy::ReturnAlways:
            result.returned = std::move(post);
            break;
        case BankPolicy::ReturnOnValid:
            if (valid) result.returned = std::move(post);
            break;
        case BankPolicy::ReissueOnValid:
            if (valid) {
                const int n = static_cast<int>(rec.bill_bits.size());
                std::vector<int> bits(n), bases(n);
                std::vector<StateVector> fresh;
                fresh.reserve(n);
                for (int i = 0; i < n; ++i) {
                    bits[i] = rng.next_bit();
                    bases[i] = rng.next_bit();
                    fresh.push_back(encode_money_qubit(bits[i], bases[i]));
                }
                rec.bill_bits = std::move(bits);
                rec.bases = std::move(bases);
                result.returned = std::move(fresh);
            }
            break;
    }
    return result;
}

std::pair<WiesnerBill, WiesnerBill> guess_and_measure_attack(const WiesnerBill& bill,
                                                             SeededRng& rng) {
    WiesnerBill copy1{bill.serial, {}}, copy2{bill.serial, {}};
    for (const StateVector& q : bill.qubits) {
        const int guessed_basis = rng.next_bit();
        const MeasurementBasis basis = guessed_basis == 0
                                           ? MeasurementBasis::Computational
                                           : MeasurementBasis::Hadamard;
        MeasurementOutcome out = measure_qubit(q, 0, basis, rng);
        const int readout = out.bits[0] == '1' ? 1 : 0;
        copy1.qubits.push_back(encode_money_qubit(readout, guessed_basis));
        copy2.qubits.push_back(encode_money_qubit(readout, guessed_basis));
    }
    return {std::move(copy1), std::move(copy2)};
}

AdaptiveAttackResult adaptive_attack(Bank& bank, const std::string& serial,
                                     WiesnerBill bill, SeededRng& rng) {
    const int n = static_cast<int>(bill.qubits.size());
    AdaptiveAttackResult result;
    result.bits.assign(n, 0);
    result.bases.assign(n, 0);

    const GateMatrix x = matrix_of(Gate::make(GateKind::X));
    for (int i = 0; i < n; ++i) {
        apply_matrix_to_qubits(bill.qubits[i], x, {0});
        VerifyResult vr = bank.verify(serial, bill.qubits, rng);
        ++result.verify_calls;
        if (!vr.returned) {
            // The bank kept the state; the probe chain is broken.
            return result;
        }
        bill.qubits = std::move(*vr.returned);

        if (vr.verdict == Verdict::Invalid) {
            // The flipped qubit collapsed in the computational basis: undo
            // the flip and read the bit directly.
            apply_matrix_to_qubits(bill.qubits[i], x, {0});
            MeasurementOutcome out =
                measure_qubit(bill.qubits[i], 0, MeasurementBasis::Computational, rng);
            bill.qubits[i] = std::move(out.post_state);
            result.bases[i] = 0;
            result.bits[i] = out.bits[0] == '1' ? 1 : 0;
        } else {
            // X leaves the Hadamard-basis states fixed up to phase, so the
            // qubit can be read out in the Hadamard basis undisturbed.
            MeasurementOutcome out =
                measure_qubit(bill.qubits[i], 0, MeasurementBasis::Hadamard, rng);
            bill.qubits[i] = std::move(out.post_state);
            result.bases[i] = 1;
            result.bits[i] = out.bits[0] == '1' ? 1 : 0;
        }
    }
    result.completed = true;
    return result;
}

Adversary honest_adversary() {
    return [](Bank&, const std::vector<WiesnerBill>& bills, int m, SeededRng&) {
        std::vector<Submission> subs;
        for (const auto& b : bills) {
            if (static_cast<int>(subs.size()) == m) break;
            subs.push_back(Submission{b.serial, b.qubits});
        }
        return subs;
    };
}

Adversary guess_and_measure_adversary() {
    return [](Bank&, const std::vector<WiesnerBill>& bills, int m, SeededRng& rng) {
        std::vector<Submission> subs;
        for (const auto& b : bills) {
            auto [c1, c2] = guess_and_measure_attack(b, rng);
            subs.push_back(Submission{c1.serial, std::move(c1.qubits)});
            subs.push_back(Submission{c2.serial, std::move(c2.qubits)});
        }
        if (static_cast<int>(subs.size()) > m) subs.resize(m);
        return subs;
    };
}

Adversary adaptive_adversary() {
    return [](Bank& bank, const std::vector<WiesnerBill>& bills, int m, SeededRng& rng) {
        std::vector<Submission> subs;
        const int per_bill =
            bills.empty() ? 0 : (m + static_cast<int>(bills.size()) - 1) /
                                    static_cast<int>(bills.size());
        for (const auto& b : bills) {
            AdaptiveAttackResult rec = adaptive_attack(bank, b.serial, b, rng);
            for (int c = 0; c < per_bill; ++c) {
                Submission sub;
                sub.serial = b.serial;
                if (rec.completed) {
                    for (std::size_t i = 0; i < rec.bits.size(); ++i) {
                        sub.qubits.push_back(
                            encode_money_qubit(rec.bits[i], rec.bases[i]));
                    }
                } else {
                    sub.qubits = b.qubits; // best effort: original states
                }
                subs.push_back(std::move(sub));
            }
        }
        if (static_cast<int>(subs.size()) > m) subs.resize(m);
        return subs;
    };
}

ExperimentReport security_game(const Adversary& adversary, int n_bills,
                               int m_submissions, BankPolicy policy, int trials,
                               std::uint64_t seed) {
    const int bill_size = 5;
    ExperimentReport report;
    report.experiment = "security_game";
    report.seed = seed;
    report.params["n_bills"] = n_bills;
    report.params["m_submissions"] = m_submissions;
    report.params["trials"] = trials;
    report.params["bill_qubits"] = bill_size;

    int wins = 0;
    std::int64_t total_valid = 0;
    for (int trial = 0; trial < trials; ++trial) {
        SeededRng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        Bank bank(policy);
        std::vector<WiesnerBill> bills;
        bills.reserve(n_bills);
        for (int i = 0; i < n_bills; ++i) bills.push_back(bank.mint(bill_size, rng));

        std::vector<Submission> subs = adversary(bank, bills, m_submissions, rng);
        int valid = 0;
        for (const auto& sub : subs) {
            if (bank.verify(sub.serial, sub.qubits, rng).verdict == Verdict::Valid) {
                ++valid;
            }
        }
        total_valid += valid;
        if (valid > n_bills) ++wins;
    }

    report.results["wins"] = wins;
    report.results["win_rate"] = trials > 0 ? static_cast<double>(wins) / trials : 0.0;
    report.results["mean_valid_submissions"] =
        trials > 0 ? static_cast<double>(total_valid) / trials : 0.0;
    return report;
}

// ---------------------------------------------------------------------------
// Toy lightning scheme
// ---------------------------------------------------------------------------

LightningScheme toy_lightning_scheme(int k, std::uint64_t modulus) {
    if (k < 1 || k > 10) throw std::invalid_argument("k must be in [1, 10]");
    const std::uint64_t size = std::uint64_t{1} << k;
    if (modulus == 0 || size % modulus != 0) {
        throw std::invalid_argument("modulus must divide 2^k");
    }
    LightningScheme scheme;
    scheme.k = k;
    scheme.p_bits = 1;
    while ((std::uint64_t{1} << scheme.p_bits) < modulus) ++scheme.p_bits;
    scheme.f = [modulus](std::uint64_t g) { return g % modulus; };
    scheme.moves.push_back([size, modulus](std::uint64_t g) {
        return (g + modulus) % size;
    });
    scheme.moves.push_back([modulus](std::uint64_t g) -> std::uint64_t {
        if (g == 0) return modulus;
        if (g == modulus) return 0;
        return g;
    });

    for (const auto& move : scheme.moves) {
        for (std::uint64_t g = 0; g < size; ++g) {
            if (scheme.f(move(g)) != scheme.f(g)) {
                throw std::logic_error("move does not preserve the invariant");
            }
        }
    }
    return scheme;
}

LightningBill lightning_mint(const LightningScheme& scheme, SeededRng& rng) {
    const int total = scheme.k + scheme.p_bits;
    if (total > MAX_QUBITS) throw std::invalid_argument("scheme too wide");

    StateVector s = StateVector::zero(total);
    const GateMatrix h = matrix_of(Gate::make(GateKind::H));
    std::vector<int> g_regs(scheme.k), p_regs(scheme.p_bits);
    for (int q = 0; q < scheme.k; ++q) {
        apply_matrix_to_qubits(s, h, {q});
        g_regs[q] = q;
    }
    for (int q = 0; q < scheme.p_bits; ++q) p_regs[q] = scheme.k + q;

    Oracle oracle(scheme.k, scheme.p_bits, scheme.f, OracleTarget::Xor);
    s = oracle_apply(oracle, s, g_regs, p_regs);

    MeasurementOutcome out = measure_qubits(s, p_regs, rng);
    std::uint64_t p = 0;
    for (char b : out.bits) p = (p << 1) | static_cast<std::uint64_t>(b == '1');

    // The post-measurement state factorizes as (first register) x |p>.
    const std::uint64_t p_dim = std::uint64_t{1} << scheme.p_bits;
    std::vector<Amplitude> bill(std::uint64_t{1} << scheme.k);
    for (std::uint64_t g = 0; g < bill.size(); ++g) {
        bill[g] = out.post_state[g * p_dim + p];
    }
    StateVector bill_state = StateVector::from_amplitudes(scheme.k, std::move(bill));
    return LightningBill{p, std::move(bill_state)};
}

LightningVerifyResult lightning_verify(const LightningScheme& scheme,
                                       std::uint64_t /*p*/, const StateVector& state,
                                       int rounds, SeededRng& rng) {
    if (scheme.moves.empty()) throw std::invalid_argument("scheme has no moves");
    if (state.n_qubits() != scheme.k) {
        throw std::invalid_argument("state width does not match the scheme");
    }

    const std::uint64_t dim = state.dim();
    StateVector current = state;
    int passed = 0;
    for (int r = 0; r < rounds; ++r) {
        const auto& move = scheme.moves[r % scheme.moves.size()];

        // Ancilla |+> on qubit 0, controlled move on the rest.
        std::vector<Amplitude> amps(2 * dim);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (std::uint64_t g = 0; g < dim; ++g) {
            amps[g] += current[g] * inv_sqrt2;
            amps[dim + move(g)] += current[g] * inv_sqrt2;
        }
        StateVector s = StateVector::from_amplitudes(scheme.k + 1, std::move(amps));

        MeasurementOutcome out = measure_qubit(s, 0, MeasurementBasis::Hadamard, rng);
        const bool plus = out.bits[0] == '0';

        // The post-measurement state is (ancilla eigenstate) x (system);
        // slice the system register back out.
        std::vector<Amplitude> sys(dim);
        double mass = 0.0;
        for (std::uint64_t g = 0; g < dim; ++g) {
            sys[g] = out.post_state[g];
            mass += std::norm(sys[g]);
        }
        const double inv = 1.0 / std::sqrt(mass);
        for (auto& a : sys) a *= inv;
        current = StateVector::from_amplitudes(scheme.k, std::move(sys));

        if (!plus) {
            return LightningVerifyResult{false, passed, std::move(current)};
        }
        ++passed;
    }
    return LightningVerifyResult{true, passed, std::move(current)};
}

} // namespace qsim
