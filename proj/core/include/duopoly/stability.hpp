#ifndef DUOPOLY_STABILITY_HPP
#define DUOPOLY_STABILITY_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "duopoly/fixed_points.hpp"
#include "duopoly/model.hpp"

namespace duopoly {

struct NotConverged : std::runtime_error {
    NotConverged()
        : std::runtime_error("fixed point did not converge; refusing to "
                             "classify its stability") {}
};

struct ZeroB1 : std::runtime_error {
    ZeroB1()
        : std::runtime_error("critical elasticity undefined: b1 is zero") {}
};

// Jacobian of the (z, w) map:
//   [ 1-alpha1 - c*b1/(4*cosh^2(c*z/2))   beta1    ]
//   [ beta1 + c*a1/(4*cosh^2(c*z/2))      1-alpha1 ]
struct Jacobian2x2 {
    double j11, j12, j21, j22;

    double trace() const { return j11 + j22; }
    double det() const { return j11 * j22 - j12 * j21; }
};

enum class Stability { StableNode, StableSpiral, Unstable, Marginal };

std::string to_string(Stability s);

struct StabilityReport {
    std::complex<double> eig1;
    std::complex<double> eig2;
    double spectral_radius;
    Stability classification;
    double trace;
    double determinant;
};

// 1/cosh^2(u), saturating to 0 for |u| > 400.
double sech_squared(double u);

Jacobian2x2 jacobian_at(double z, const TransformedParams& tp);

std::pair<std::complex<double>, std::complex<double>> eigenvalues(
    const Jacobian2x2& j);

StabilityReport classify_fixed_point(const FixedPointResult& fp,
                                     const TransformedParams& tp);

// Period-one trace diagnostic 8*(1-alpha1) - c*b1*sech^2(c*z0/2), returned
// with its distance to the nearer of +-8 (zero distance marks the stability
// boundary of period-one orbits).
std::pair<double, double> period_one_condition(double z0,
                                               const TransformedParams& tp);

// Closed-form threshold c_c = (16 + 8*alpha1)/b1. A negative return value
// means the threshold is not applicable for this parameter set.
double critical_elasticity(const TransformedParams& tp);

// Largest Lyapunov exponent: propagates a unit tangent vector through the
// orbit's Jacobians with per-step renormalization, averaging log stretch.
double lyapunov_largest(const DiffSumState& initial,
                        const TransformedParams& tp, long n_transient = 1000,
                        long n_sample = 10000);

// Exponent above which an aperiodic orbit is considered chaotic.
inline constexpr double kChaosThreshold = 1e-3;

}  // namespace duopoly

#endif
