#include "duopoly/stability.hpp"

#include <cmath>

namespace duopoly {

std::string to_string(Stability s) {
    switch (s) {
        case Stability::StableNode: return "stable-node";
        case Stability::StableSpiral: return "stable-spiral";
        case Stability::Unstable: return "unstable";
        case Stability::Marginal: return "marginal";
    }
    return "unknown";
}

double sech_squared(double u) {
    if (std::fabs(u) > 400.0) return 0.0;
    const double s = 2.0 / (std::exp(u) + std::exp(-u));
    return s * s;
}

Jacobian2x2 jacobian_at(double z, const TransformedParams& tp) {
    const double gate = tp.c * sech_squared(tp.c * z / 2.0) / 4.0;
    return {1.0 - tp.alpha1 - tp.b1 * gate, tp.beta1, tp.beta1 + tp.a1 * gate,
            1.0 - tp.alpha1};
}

std::pair<std::complex<double>, std::complex<double>> eigenvalues(
    const Jacobian2x2& j) {
    const double tr = j.trace();
    const double disc = tr * tr / 4.0 - j.det();
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        return {{tr / 2.0 - s, 0.0}, {tr / 2.0 + s, 0.0}};
    }
    const double s = std::sqrt(-disc);
    return {{tr / 2.0, -s}, {tr / 2.0, s}};
}

StabilityReport classify_fixed_point(const FixedPointResult& fp,
                                     const TransformedParams& tp) {
    if (!fp.converged) throw NotConverged{};
    const Jacobian2x2 j = jacobian_at(fp.z0, tp);
    auto [e1, e2] = eigenvalues(j);
    const double rho = std::max(std::abs(e1), std::abs(e2));

    Stability cls;
    if (std::fabs(rho - 1.0) <= 1e-12) {
        cls = Stability::Marginal;
    } else if (rho < 1.0) {
        cls = (e1.imag() != 0.0) ? Stability::StableSpiral
                                 : Stability::StableNode;
    } else {
        cls = Stability::Unstable;
    }
    return {e1, e2, rho, cls, j.trace(), j.det()};
}

std::pair<double, double> period_one_condition(double z0,
                                               const TransformedParams& tp) {
    const double value =
        8.0 * (1.0 - tp.alpha1) - tp.c * tp.b1 * sech_squared(tp.c * z0 / 2.0);
    const double dist = std::min(std::fabs(value - 8.0), std::fabs(value + 8.0));
    return {value, dist};
}

double critical_elasticity(const TransformedParams& tp) {
    if (std::fabs(tp.b1) < 1e-14) throw ZeroB1{};
    return (16.0 + 8.0 * tp.alpha1) / tp.b1;
}

double lyapunov_largest(const DiffSumState& initial,
                        const TransformedParams& tp, long n_transient,
                        long n_sample) {
    if (n_sample < 1000)
        throw std::invalid_argument("lyapunov_largest: n_sample must be >= 1000");

    DiffSumState s = initial;
    for (long i = 0; i < n_transient; ++i) {
        s = step_zw(s, tp);
        if (std::fabs(s.z) > kDivergenceBound || std::fabs(s.w) > kDivergenceBound)
            throw Diverged{i};
    }
    double vz = 1.0, vw = 0.0;
    double log_sum = 0.0;
    for (long i = 0; i < n_sample; ++i) {
        const Jacobian2x2 j = jacobian_at(s.z, tp);
        const double nz = j.j11 * vz + j.j12 * vw;
        const double nw = j.j21 * vz + j.j22 * vw;
        const double norm = std::hypot(nz, nw);
        log_sum += std::log(norm);
        vz = nz / norm;
        vw = nw / norm;
        s = step_zw(s, tp);
        if (std::fabs(s.z) > kDivergenceBound || std::fabs(s.w) > kDivergenceBound)
            throw Diverged{n_transient + i};
    }
    return log_sum / static_cast<double>(n_sample);
}

}  // namespace duopoly
