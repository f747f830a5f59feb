#include "duopoly/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace duopoly {

double linear_slope(const TransformedParams& tp) {
    const double den = tp.a1 * tp.beta1 - tp.b1 * tp.alpha1;
    if (std::fabs(den) < 1e-14) throw DegenerateSlope{};
    return (tp.a1 * tp.alpha1 - tp.b1 * tp.beta1) / den;
}

double scalar_residual(double z, const TransformedParams& tp) {
    const double k = linear_slope(tp);
    return tp.alpha1 * z - tp.beta1 * k * z + tp.b1 * sigmoid(tp.c * z);
}

double residual_7a(double z0, double w0, const TransformedParams& tp) {
    return std::fabs(tp.alpha1 * z0 - tp.beta1 * w0 +
                     tp.b1 * sigmoid(tp.c * z0));
}

double residual_7b(double z0, double w0, const TransformedParams& tp) {
    return std::fabs(tp.alpha1 * w0 - tp.beta1 * z0 -
                     tp.a1 * sigmoid(tp.c * z0));
}

double brent_root(const std::function<double(double)>& g,
                  const BracketingInterval& bracket, double tol) {
    double a = bracket.lo, b = bracket.hi;
    double fa = bracket.g_lo, fb = bracket.g_hi;
    if (!(a < b) || fa * fb > 0.0) throw NoSignChange{};
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;

    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 0; iter < 200; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic interpolation, secant when only two points
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = g(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

std::vector<FixedPointResult> find_fixed_points(const TransformedParams& tp,
                                                const ScanRange& scan,
                                                double tol) {
    const double k = linear_slope(tp);
    auto g = [&tp](double z) { return scalar_residual(z, tp); };

    std::vector<double> roots;
    const int n = std::max(scan.n_grid, 2);
    const double h = (scan.z_max - scan.z_min) / (n - 1);
    double z_prev = scan.z_min;
    double g_prev = g(z_prev);
    for (int i = 1; i < n; ++i) {
        const double z = scan.z_min + i * h;
        const double gz = g(z);
        if (g_prev == 0.0) {
            roots.push_back(z_prev);
        } else if (g_prev * gz < 0.0) {
            roots.push_back(brent_root(g, {z_prev, z, g_prev, gz}, tol));
        }
        z_prev = z;
        g_prev = gz;
    }
    if (g_prev == 0.0) roots.push_back(z_prev);

    std::sort(roots.begin(), roots.end());
    std::vector<FixedPointResult> out;
    for (double z0 : roots) {
        if (!out.empty() && std::fabs(z0 - out.back().z0) < 1e-8) continue;
        const double w0 = k * z0;
        const double r7a = residual_7a(z0, w0, tp);
        const double r7b = residual_7b(z0, w0, tp);
        out.push_back({z0, w0, r7a, r7b, r7a <= 1e-10 && r7b <= 1e-10});
    }
    return out;
}

std::vector<SweepRow> fixed_point_sweep(const TransformedParams& tp_base,
                                        const std::vector<double>& c_values,
                                        const ScanRange& scan) {
    std::vector<SweepRow> rows;
    rows.reserve(c_values.size());
    for (double c : c_values) {
        TransformedParams tp = tp_base;
        tp.c = c;
        SweepRow row{c, {}, std::nullopt};
        try {
            row.roots = find_fixed_points(tp, scan);
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace duopoly
