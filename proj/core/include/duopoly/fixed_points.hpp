#ifndef DUOPOLY_FIXED_POINTS_HPP
#define DUOPOLY_FIXED_POINTS_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "duopoly/model.hpp"

namespace duopoly {

// Fixed points (z0, w0) of the (z, w) map solve
//   alpha1*z0 - beta1*w0 + b1*sigmoid(c*z0) = 0
//   alpha1*w0 - beta1*z0 - a1*sigmoid(c*z0) = 0
// and are related linearly, w0 = k*z0 with
//   k = (a1*alpha1 - b1*beta1) / (a1*beta1 - b1*alpha1),
// which reduces the pair to one scalar root problem solved by Brent's method.

struct DegenerateSlope : std::runtime_error {
    DegenerateSlope()
        : std::runtime_error(
              "degenerate parameters: a1*beta1 - b1*alpha1 is zero, the "
              "linear fixed-point relation is undefined") {}
};

struct NoSignChange : std::runtime_error {
    NoSignChange()
        : std::runtime_error("bracket does not enclose a sign change") {}
};

struct FixedPointResult {
    double z0;
    double w0;
    double residual7a;  // |alpha1*z0 - beta1*w0 + b1*sigmoid(c*z0)|
    double residual7b;  // |alpha1*w0 - beta1*z0 - a1*sigmoid(c*z0)|
    bool converged;
};

struct BracketingInterval {
    double lo;
    double hi;
    double g_lo;
    double g_hi;
};

struct ScanRange {
    double z_min = -5.0;
    double z_max = 5.0;
    int n_grid = 2001;
};

// Slope k of the linear relation w0 = k*z0. Throws DegenerateSlope when
// |a1*beta1 - b1*alpha1| < 1e-14.
double linear_slope(const TransformedParams& tp);

// g(z) = alpha1*z - beta1*k*z + b1*sigmoid(c*z); roots of g are fixed-point
// sale differences.
double scalar_residual(double z, const TransformedParams& tp);

// Residuals of the unreduced fixed-point pair, evaluated directly.
double residual_7a(double z0, double w0, const TransformedParams& tp);
double residual_7b(double z0, double w0, const TransformedParams& tp);

// Brent root finder: inverse quadratic interpolation with secant and
// bisection fallbacks. Requires a valid sign-change bracket.
double brent_root(const std::function<double(double)>& g,
                  const BracketingInterval& bracket, double tol = 1e-12);

// Scans g on a uniform grid, refines every sign-change interval with Brent,
// de-duplicates roots closer than 1e-8. Empty result means no sign change on
// the scan range.
std::vector<FixedPointResult> find_fixed_points(const TransformedParams& tp,
                                                const ScanRange& scan = {},
                                                double tol = 1e-12);

struct SweepRow {
    double c;
    std::vector<FixedPointResult> roots;  // empty if none found
    std::optional<std::string> error;     // set for degenerate cells
};

// find_fixed_points for each c, with tp_base's c replaced per row. Rows are
// ordered as the input; per-row failures are recorded, never thrown.
std::vector<SweepRow> fixed_point_sweep(const TransformedParams& tp_base,
                                        const std::vector<double>& c_values,
                                        const ScanRange& scan = {});

}  // namespace duopoly

#endif
