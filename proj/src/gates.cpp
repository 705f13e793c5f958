#include "qsim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsim {

GateMatrix GateMatrix::identity(std::uint64_t dim) {
    GateMatrix m(dim);
    for (std::uint64_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

double GateMatrix::unitarity_defect() const {
    double worst = 0.0;
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            Amplitude acc = 0.0;
            for (std::uint64_t k = 0; k < dim; ++k) {
                acc += std::conj(at(k, r)) * at(k, c);
            }
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

bool GateMatrix::is_unitary(double tol) const {
    return unitarity_defect() < tol;
}

int GateMatrix::n_qubits() const {
    int n = 0;
    while ((std::uint64_t{1} << n) < dim) ++n;
    return n;
}

GateMatrix multiply(const GateMatrix& a, const GateMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
    GateMatrix out(a.dim);
    for (std::uint64_t r = 0; r < a.dim; ++r) {
        for (std::uint64_t k = 0; k < a.dim; ++k) {
            const Amplitude ark = a.at(r, k);
            if (ark == Amplitude{}) continue;
            for (std::uint64_t c = 0; c < a.dim; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

StateVector apply(const GateMatrix& u, const StateVector& s) {
    if (u.dim != s.dim()) throw std::invalid_argument("matrix/state dimension mismatch");
    std::vector<Amplitude> out(u.dim);
    for (std::uint64_t r = 0; r < u.dim; ++r) {
        Amplitude acc = 0.0;
        for (std::uint64_t c = 0; c < u.dim; ++c) {
            acc += u.at(r, c) * s[c];
        }
        out[r] = acc;
    }
    return StateVector::from_amplitudes(s.n_qubits(), std::move(out));
}

GateMatrix adjoint(const GateMatrix& u) {
    GateMatrix out(u.dim);
    for (std::uint64_t r = 0; r < u.dim; ++r) {
        for (std::uint64_t c = 0; c < u.dim; ++c) {
            out.at(r, c) = std::conj(u.at(c, r));
        }
    }
    return out;
}

GateMatrix controlled(const GateMatrix& u) {
    if (!u.is_unitary(1e-9)) {
        throw std::invalid_argument("controlled() requires a unitary matrix");
    }
    GateMatrix out(2 * u.dim);
    for (std::uint64_t i = 0; i < u.dim; ++i) out.at(i, i) = 1.0;
    for (std::uint64_t r = 0; r < u.dim; ++r) {
        for (std::uint64_t c = 0; c < u.dim; ++c) {
            out.at(u.dim + r, u.dim + c) = u.at(r, c);
        }
    }
    return out;
}

Gate Gate::make(GateKind kind) {
    switch (kind) {
        case GateKind::Rk:
        case GateKind::Custom:
        case GateKind::ControlledGate:
            throw std::invalid_argument("use the dedicated factory for this gate kind");
        default:
            break;
    }
    Gate g;
    g.kind_ = kind;
    return g;
}

Gate Gate::rk(int k) {
    if (k < 1) throw std::invalid_argument("Rk requires k >= 1");
    Gate g;
    g.kind_ = GateKind::Rk;
    g.k_ = k;
    return g;
}

Gate Gate::custom(GateMatrix u, std::string label) {
    if (!u.is_unitary(1e-9)) {
        throw std::invalid_argument("custom gate matrix is not unitary");
    }
    Gate g;
    g.kind_ = GateKind::Custom;
    g.custom_ = std::make_shared<const GateMatrix>(std::move(u));
    g.label_ = std::move(label);
    return g;
}

Gate Gate::make_controlled(Gate inner) {
    int depth = 1;
    const Gate* p = &inner;
    while (p->kind_ == GateKind::ControlledGate) {
        ++depth;
        p = p->inner_.get();
    }
    if (depth > 2) throw std::invalid_argument("controlled nesting is limited to depth 2");
    Gate g;
    g.kind_ = GateKind::ControlledGate;
    g.inner_ = std::make_shared<const Gate>(std::move(inner));
    return g;
}

int Gate::arity() const {
    switch (kind_) {
        case GateKind::Cnot:
        case GateKind::Swap:
            return 2;
        case GateKind::Toffoli:
            return 3;
        case GateKind::Custom:
            return custom_->n_qubits();
        case GateKind::ControlledGate:
            return 1 + inner_->arity();
        default:
            return 1;
    }
}

bool Gate::operator==(const Gate& other) const {
    if (kind_ != other.kind_ || k_ != other.k_) return false;
    if (kind_ == GateKind::ControlledGate) return *inner_ == *other.inner_;
    if (kind_ == GateKind::Custom) {
        return custom_->dim == other.custom_->dim &&
               custom_->entries == other.custom_->entries;
    }
    return true;
}

namespace {

GateMatrix single(Amplitude a00, Amplitude a01, Amplitude a10, Amplitude a11) {
    GateMatrix m(2);
    m.at(0, 0) = a00;
    m.at(0, 1) = a01;
    m.at(1, 0) = a10;
    m.at(1, 1) = a11;
    return m;
}

GateMatrix swap_matrix() {
    GateMatrix m(4);
    m.at(0, 0) = 1.0;
    m.at(1, 2) = 1.0;
    m.at(2, 1) = 1.0;
    m.at(3, 3) = 1.0;
    return m;
}

} // namespace

GateMatrix matrix_of(const Gate& g) {
    using std::numbers::pi;
    const double r = 1.0 / std::sqrt(2.0);
    const Amplitude i{0.0, 1.0};
    switch (g.kind()) {
        case GateKind::I:
            return GateMatrix::identity(2);
        case GateKind::X:
            return single(0, 1, 1, 0);
        case GateKind::Y:
            return single(0, -i, i, 0);
        case GateKind::Z:
            return single(1, 0, 0, -1);
        case GateKind::H:
            return single(r, r, r, -r);
        case GateKind::S:
            return single(1, 0, 0, std::polar(1.0, pi / 2));
        case GateKind::T:
            return single(1, 0, 0, std::polar(1.0, pi / 4));
        case GateKind::Rk:
            return single(1, 0, 0, std::polar(1.0, 2.0 * pi / std::pow(2.0, g.k())));
        case GateKind::Cnot:
            return controlled(single(0, 1, 1, 0));
        case GateKind::Swap:
            return swap_matrix();
        case GateKind::Toffoli:
            return controlled(controlled(single(0, 1, 1, 0)));
        case GateKind::Custom:
            return *g.custom_;
        case GateKind::ControlledGate:
            return controlled(matrix_of(g.inner()));
    }
    throw std::logic_error("unreachable gate kind");
}

std::vector<GateApplication> toffoli_two_qubit_decomposition() {
    const Gate h = Gate::make(GateKind::H);
    const Gate t = Gate::make(GateKind::T);
    const Gate tdg = Gate::custom(adjoint(matrix_of(t)), "Tdg");
    const Gate cnot = Gate::make(GateKind::Cnot);
    // Controls on qubits 0 and 1, target on 2.
    return {
        {h, {2}},
        {cnot, {1, 2}},
        {tdg, {2}},
        {cnot, {0, 2}},
        {t, {2}},
        {cnot, {1, 2}},
        {tdg, {2}},
        {cnot, {0, 2}},
        {t, {1}},
        {t, {2}},
        {h, {2}},
        {cnot, {0, 1}},
        {t, {0}},
        {tdg, {1}},
        {cnot, {0, 1}},
    };
}

} // namespace qsim
