// Quantum money: a private-key bill scheme with per-qubit conjugate-basis
// encoding, bank return policies, the guess-and-measure and adaptive
// counterfeiting attacks, a challenger/adversary security game, and a toy
// instantiation of the invariant-superposition ("lightning") blueprint.

#pragma once

#include "qsim/circuit.hpp"
#include "qsim/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsim {

// A bill is a product state: one single-qubit StateVector per position.
// Freshly minted qubits are one of |0>, |1>, |+>, |->; arbitrary after
// tampering.
struct WiesnerBill {
    std::string serial;
    std::vector<StateVector> qubits;
};

// The bank's secret: classical bits and encoding bases (0 = computational,
// 1 = Hadamard). Never exposed through the verification interface.
struct BankRecord {
    std::string serial;
    std::vector<int> bill_bits;
    std::vector<int> bases;
};

enum class BankPolicy {
    ReturnAlways,   // post-measurement states returned on VALID and INVALID
    ReturnOnValid,  // states returned only on VALID
    ReissueOnValid, // fresh state minted and record replaced after VALID
};

enum class Verdict { Valid, Invalid };

struct VerifyResult {
    Verdict verdict = Verdict::Invalid;
    // Per-policy: post-measurement states, a fresh reissue, or nothing.
    std::optional<std::vector<StateVector>> returned;
};

// Encodes one (bit, basis) pair as a single-qubit state.
StateVector encode_money_qubit(int bit, int basis);

class Bank {
  public:
    explicit Bank(BankPolicy policy) : policy_(policy) {}

    BankPolicy policy() const { return policy_; }

    WiesnerBill mint(int n, SeededRng& rng);

    // Mints from given draws instead of random ones (for worked examples).
    WiesnerBill mint_forced(const std::vector<int>& bits,
                            const std::vector<int>& bases);

    // Measures each qubit in the recorded basis; VALID iff every readout
    // matches the recorded bit. Throws on an unknown serial.
    VerifyResult verify(const std::string& serial,
                        const std::vector<StateVector>& qubits, SeededRng& rng);

    const BankRecord& record(const std::string& serial) const;

  private:
    BankPolicy policy_;
    std::map<std::string, BankRecord> records_;
    std::uint64_t next_serial_ = 0;
};

// Non-adaptive forging: guess a basis per qubit, measure, and prepare two
// copies of the readout state in the guessed basis.
std::pair<WiesnerBill, WiesnerBill> guess_and_measure_attack(const WiesnerBill& bill,
                                                             SeededRng& rng);

struct AdaptiveAttackResult {
    bool completed = false; // false when the bank withheld the state
    std::vector<int> bits;
    std::vector<int> bases;
    std::int64_t verify_calls = 0;
};

// Qubit-by-qubit probing: flip qubit i, submit for verification, and use
// the verdict plus the returned state to identify the encoding. Under
// ReturnAlways this recovers the record with certainty in n calls; under
// the withholding policies it fails by construction and the failure is
// reported, not thrown.
AdaptiveAttackResult adaptive_attack(Bank& bank, const std::string& serial,
                                     WiesnerBill bill, SeededRng& rng);

// A forging strategy: receives the minted bills (and live bank access, so
// adaptive strategies can probe), returns candidate (serial, qubits)
// submissions.
struct Submission {
    std::string serial;
    std::vector<StateVector> qubits;
};

using Adversary = std::function<std::vector<Submission>(
    Bank& bank, const std::vector<WiesnerBill>& bills, int m, SeededRng& rng)>;

Adversary honest_adversary();
Adversary guess_and_measure_adversary();
Adversary adaptive_adversary();

// Challenger/adversary game: per trial, mint n bills, hand them to the
// adversary, verify its m submissions; the adversary wins a trial iff the
// number of successful verifications strictly exceeds n.
ExperimentReport security_game(const Adversary& adversary, int n_bills,
                               int m_submissions, BankPolicy policy, int trials,
                               std::uint64_t seed);

// ---------------------------------------------------------------------------
// Toy lightning scheme
// ---------------------------------------------------------------------------

// G = {0, ..., 2^k - 1} with an efficiently computable many-to-one invariant
// f : G -> P and a set of f-preserving permutations ("moves").
struct LightningScheme {
    int k = 0;      // |G| = 2^k
    int p_bits = 0; // output register width for invariant values
    std::function<std::uint64_t(std::uint64_t)> f;
    std::vector<std::function<std::uint64_t(std::uint64_t)>> moves;
};

// f(g) = g mod modulus (modulus must divide 2^k); moves are the in-class
// shift g -> g + modulus and one in-class transposition 0 <-> modulus.
LightningScheme toy_lightning_scheme(int k, std::uint64_t modulus);

struct LightningBill {
    std::uint64_t p = 0;  // measured invariant value (the serial)
    StateVector state;    // uniform superposition over f^{-1}(p)
};

// Uniform superposition over G, invariant computed into a second register,
// second register measured; the first register is the bill.
LightningBill lightning_mint(const LightningScheme& scheme, SeededRng& rng);

// One round: ancilla in |+>, controlled move, ancilla measured in the
// Hadamard basis; accept iff the outcome is +. Rounds cycle through the
// scheme's moves and the bill state evolves between rounds.
struct LightningVerifyResult {
    bool accept = false;
    int rounds_passed = 0;
    StateVector post_state;
};

LightningVerifyResult lightning_verify(const LightningScheme& scheme,
                                       std::uint64_t p, const StateVector& state,
                                       int rounds, SeededRng& rng);

} // namespace qsim
