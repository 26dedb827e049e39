#include "qacc/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qacc {

namespace {

void require_applicable(const DensityMatrix& rho, const KrausChannel& ch, const char* side) {
    if (ch.local_dim != (side[0] == 'A' ? rho.shape().dim_a : rho.shape().dim_b))
        throw std::invalid_argument(std::string("channel on side ") + side +
                                    " does not match the state's local dimension");
    if (ch.completeness_drift() > 1e-12)
        throw std::invalid_argument("channel operators are not complete within 1e-12");
}

}  // namespace

NoiseStrength::NoiseStrength(double gamma) : gamma_(gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("NoiseStrength: value must lie in [0, 1]");
}

const char* to_string(ChannelKind k) {
    return k == ChannelKind::Dephasing ? "dephasing" : "amplitude";
}

const char* to_string(Locality l) {
    switch (l) {
        case Locality::None: return "none";
        case Locality::MultiLocal: return "multi-local";
        case Locality::Global: return "global";
    }
    return "unknown";
}

const char* to_string(GlobalMode m) {
    return m == GlobalMode::LiteralRenormalized ? "literal" : "composed";
}

double KrausChannel::completeness_drift() const {
    ComplexMatrix sum(local_dim, local_dim);
    for (const ComplexMatrix& e : operators) sum += e.adjoint() * e;
    return max_abs_diff(sum, ComplexMatrix::identity(local_dim));
}

KrausChannel dephasing_kraus(NoiseStrength gamma) {
    const double g = gamma.value();
    const double keep = std::sqrt(1.0 - g);
    const double leak = std::sqrt(g);
    ComplexMatrix e1(3, 3), e2(3, 3), e3(3, 3);
    e1(0, 0) = 1.0;
    e1(1, 1) = keep;
    e1(2, 2) = keep;
    e2(1, 1) = leak;
    e3(2, 2) = leak;
    return {ChannelKind::Dephasing, g, 3, {e1, e2, e3}};
}

KrausChannel amplitude_damping_kraus(NoiseStrength gamma) {
    const double g = gamma.value();
    const double keep = std::sqrt(1.0 - g);
    const double leak = std::sqrt(g);
    ComplexMatrix e1(3, 3), e2(3, 3), e3(3, 3);
    e1(0, 0) = 1.0;
    e1(1, 1) = keep;
    e1(2, 2) = keep;
    e2(0, 1) = leak;  // |0><1|
    e3(0, 2) = leak;  // |0><2|
    return {ChannelKind::AmplitudeDamping, g, 3, {e1, e2, e3}};
}

KrausChannel extend_to_acc_space(const KrausChannel& ch) {
    if (ch.local_dim != 3)
        throw std::invalid_argument("extend_to_acc_space: channel must act on a qutrit");
    KrausChannel out{ch.kind, ch.gamma, 4, {}};
    bool first = true;
    for (const ComplexMatrix& e : ch.operators) {
        ComplexMatrix ext(4, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) ext(i, j) = e(i, j);
        if (first) ext(3, 3) = 1.0;  // the pair level rides through untouched
        first = false;
        out.operators.push_back(std::move(ext));
    }
    return out;
}

DensityMatrix apply_multilocal(const DensityMatrix& rho, const KrausChannel& ch_a,
                               const KrausChannel& ch_b) {
    require_applicable(rho, ch_a, "A");
    require_applicable(rho, ch_b, "B");
    const std::size_t n = rho.dim();
    ComplexMatrix out(n, n);
    for (const ComplexMatrix& ea : ch_a.operators)
        for (const ComplexMatrix& eb : ch_b.operators) {
            const ComplexMatrix k = kron(ea, eb);
            out += k * rho.matrix() * k.adjoint();
        }
    return DensityMatrix(std::move(out), rho.shape());
}

GlobalResult apply_global(const DensityMatrix& rho, const KrausChannel& ch, GlobalMode mode) {
    require_applicable(rho, ch, "A");
    require_applicable(rho, ch, "B");
    const std::size_t n = rho.dim();
    ComplexMatrix sigma(n, n);

    if (mode == GlobalMode::LiteralRenormalized) {
        for (const ComplexMatrix& ei : ch.operators)
            for (const ComplexMatrix& ej : ch.operators)
                for (const ComplexMatrix& ek : ch.operators) {
                    const ComplexMatrix k = kron(ei * ej, ei * ek);
                    sigma += k * rho.matrix() * k.adjoint();
                }
    } else {
        const DensityMatrix local = apply_multilocal(rho, ch, ch);
        for (const ComplexMatrix& ei : ch.operators) {
            const ComplexMatrix k = kron(ei, ei);
            sigma += k * local.matrix() * k.adjoint();
        }
    }

    const double t = sigma.trace().real();
    if (t <= 1e-12)
        throw std::runtime_error("apply_global: channel annihilated the state");
    sigma *= cplx(1.0 / t);
    return {DensityMatrix(std::move(sigma), rho.shape()), t};
}

}  // namespace qacc
