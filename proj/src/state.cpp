#include "qsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > MAX_QUBITS) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(MAX_QUBITS) + "], got " +
                                    std::to_string(n));
    }
}

} // namespace

StateVector StateVector::zero(int n_qubits) {
    return basis(n_qubits, 0);
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    std::vector<Amplitude> amps(std::uint64_t{1} << n_qubits);
    if (index >= amps.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Amplitude> amps) {
    check_qubit_count(n_qubits);
    if (amps.size() != (std::uint64_t{1} << n_qubits)) {
        throw std::invalid_argument("amplitude vector length is not 2^n");
    }
    StateVector s(n_qubits, std::move(amps));
    if (!s.is_valid()) {
        throw std::invalid_argument("amplitudes are non-finite or not unit norm");
    }
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

void StateVector::renormalize() {
    const double n2 = norm_squared();
    if (n2 <= 0.0) {
        throw std::runtime_error("cannot renormalize a zero vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amps_) a *= inv;
}

bool StateVector::is_valid() const {
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    }
    return std::abs(norm_squared() - 1.0) <= NORM_TOL;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const int n = a.n_qubits() + b.n_qubits();
    if (n > MAX_QUBITS) {
        throw std::invalid_argument("tensor product exceeds MAX_QUBITS");
    }
    std::vector<Amplitude> amps(std::uint64_t{1} << n);
    const std::uint64_t db = b.dim();
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        if (a[i] == Amplitude{}) continue;
        for (std::uint64_t j = 0; j < db; ++j) {
            amps[i * db + j] = a[i] * b[j];
        }
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner product of mismatched register sizes");
    }
    Amplitude acc = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity_up_to_global_phase(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

MeasurementOutcome measure_all(const StateVector& s, SeededRng& rng) {
    // Inverse-CDF sampling over the cumulative |amp|^2.
    const double u = rng.next_double();
    double cum = 0.0;
    std::uint64_t outcome = s.dim() - 1;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        cum += std::norm(s[i]);
        if (u < cum) {
            outcome = i;
            break;
        }
    }
    std::string bits(s.n_qubits(), '0');
    for (int q = 0; q < s.n_qubits(); ++q) {
        bits[q] = s.bit_of(outcome, q) ? '1' : '0';
    }
    return MeasurementOutcome{bits, StateVector::basis(s.n_qubits(), outcome)};
}

namespace {

// H on one qubit, in place. Local copy so state.cpp does not depend on the
// gate module.
void hadamard_in_place(std::vector<Amplitude>& amps, std::uint64_t mask) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        const Amplitude a = amps[i], b = amps[j];
        amps[i] = (a + b) * inv_sqrt2;
        amps[j] = (a - b) * inv_sqrt2;
    }
}

} // namespace

MeasurementOutcome measure_qubit(const StateVector& s, int qubit,
                                 MeasurementBasis basis, SeededRng& rng) {
    if (qubit < 0 || qubit >= s.n_qubits()) {
        throw std::invalid_argument("qubit index out of range");
    }
    std::vector<Amplitude> amps = s.amplitudes();
    const std::uint64_t mask = s.qubit_mask(qubit);
    if (basis == MeasurementBasis::Hadamard) {
        hadamard_in_place(amps, mask);
    }

    double p1 = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & mask) p1 += std::norm(amps[i]);
    }
    const int outcome = rng.next_double() < p1 ? 1 : 0;

    // Project and renormalize.
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (static_cast<int>((i & mask) != 0) != outcome) amps[i] = 0.0;
    }
    double kept = outcome ? p1 : 1.0 - p1;
    const double inv = 1.0 / std::sqrt(kept);
    for (auto& a : amps) a *= inv;

    if (basis == MeasurementBasis::Hadamard) {
        hadamard_in_place(amps, mask);
    }
    StateVector post = StateVector::from_amplitudes(s.n_qubits(), std::move(amps));
    return MeasurementOutcome{std::string(1, outcome ? '1' : '0'), std::move(post)};
}

MeasurementOutcome measure_qubits(const StateVector& s,
                                  const std::vector<int>& qubits,
                                  SeededRng& rng) {
    // Sample a full outcome, then keep only the amplitudes consistent with
    // the measured bits. Marginals match a true partial measurement.
    const double u = rng.next_double();
    double cum = 0.0;
    std::uint64_t sampled = s.dim() - 1;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        cum += std::norm(s[i]);
        if (u < cum) {
            sampled = i;
            break;
        }
    }

    std::uint64_t mask = 0, pattern = 0;
    std::string bits;
    bits.reserve(qubits.size());
    for (int q : qubits) {
        if (q < 0 || q >= s.n_qubits()) {
            throw std::invalid_argument("qubit index out of range");
        }
        const std::uint64_t m = s.qubit_mask(q);
        mask |= m;
        if (sampled & m) pattern |= m;
        bits.push_back((sampled & m) ? '1' : '0');
    }

    std::vector<Amplitude> amps = s.amplitudes();
    double kept = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) != pattern) {
            amps[i] = 0.0;
        } else {
            kept += std::norm(amps[i]);
        }
    }
    const double inv = 1.0 / std::sqrt(kept);
    for (auto& a : amps) a *= inv;
    StateVector post = StateVector::from_amplitudes(s.n_qubits(), std::move(amps));
    return MeasurementOutcome{std::move(bits), std::move(post)};
}

bool is_product_two_qubit(const StateVector& s) {
    if (s.n_qubits() != 2) {
        throw std::invalid_argument("is_product_two_qubit needs a 2-qubit state");
    }
    const Amplitude det = s[0] * s[3] - s[1] * s[2];
    return std::abs(det) < ENTANGLE_TOL;
}

StateVector ket0() { return StateVector::basis(1, 0); }
StateVector ket1() { return StateVector::basis(1, 1); }

StateVector ket_plus() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector::from_amplitudes(1, {r, r});
}

StateVector ket_minus() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector::from_amplitudes(1, {r, -r});
}

} // namespace qsim
