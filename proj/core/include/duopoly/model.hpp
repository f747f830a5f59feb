#ifndef DUOPOLY_MODEL_HPP
#define DUOPOLY_MODEL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

// Two-firm competition map: each firm's sales decay at a fixed rate and are
// replenished by an investment term gated by a logistic function of the
// current sale difference. The map is studied both in the original (x, y)
// sales coordinates and in difference/sum coordinates (z, w) = (x-y, x+y).

namespace duopoly {

// Thrown when an iterated state leaves the bounded region |z|,|w| <= 1e12.
struct Diverged : std::runtime_error {
    long step;
    explicit Diverged(long step_)
        : std::runtime_error("orbit diverged at step " + std::to_string(step_)),
          step(step_) {}
};

inline constexpr double kDivergenceBound = 1e12;

struct ModelParams {
    double a;      // investment scale of firm X
    double b;      // investment scale of firm Y
    double alpha;  // sales decay rate of firm X, in (0, 1]
    double beta;   // sales decay rate of firm Y, in (0, 1]
    double c;      // elasticity coefficient, >= 0

    ModelParams(double a_, double b_, double alpha_, double beta_, double c_)
        : a(a_), b(b_), alpha(alpha_), beta(beta_), c(c_) {
        validate();
    }

    void validate() const {
        auto bad = [](const std::string& msg) {
            throw std::invalid_argument("ModelParams: " + msg);
        };
        if (!(a > 0.0)) bad("a must be > 0, got " + std::to_string(a));
        if (!(b > 0.0)) bad("b must be > 0, got " + std::to_string(b));
        if (!(alpha > 0.0 && alpha <= 1.0))
            bad("alpha must be in (0, 1], got " + std::to_string(alpha));
        if (!(beta > 0.0 && beta <= 1.0))
            bad("beta must be in (0, 1], got " + std::to_string(beta));
        if (!(c >= 0.0)) bad("c must be >= 0, got " + std::to_string(c));
    }
};

// Parameters of the map in (z, w) coordinates:
//   a1 = a + b,  b1 = b - a,  alpha1 = (alpha+beta)/2,  beta1 = (beta-alpha)/2.
struct TransformedParams {
    double a1;
    double b1;
    double alpha1;
    double beta1;
    double c;
};

struct SaleState {
    double x;
    double y;
};

struct DiffSumState {
    double z;  // sale difference x - y
    double w;  // sale sum x + y
};

// Overflow-safe logistic function, exact 0.5 at u = 0.
inline double sigmoid(double u) {
    if (u >= 0.0) {
        return 1.0 / (1.0 + std::exp(-u));
    }
    const double e = std::exp(u);
    return e / (1.0 + e);
}

inline TransformedParams transform_params(const ModelParams& p) {
    return {p.a + p.b, p.b - p.a, 0.5 * (p.alpha + p.beta),
            0.5 * (p.beta - p.alpha), p.c};
}

inline DiffSumState to_diffsum(const SaleState& s) {
    return {s.x - s.y, s.x + s.y};
}

inline SaleState from_diffsum(const DiffSumState& d) {
    return {0.5 * (d.w + d.z), 0.5 * (d.w - d.z)};
}

inline SaleState step_xy(const SaleState& s, const ModelParams& p) {
    const double inv = sigmoid(p.c * (s.x - s.y));
    return {(1.0 - p.alpha) * s.x + p.a * inv,
            (1.0 - p.beta) * s.y + p.b * inv};
}

inline DiffSumState step_zw(const DiffSumState& s, const TransformedParams& tp) {
    const double inv = sigmoid(tp.c * s.z);
    return {(1.0 - tp.alpha1) * s.z + tp.beta1 * s.w - tp.b1 * inv,
            (1.0 - tp.alpha1) * s.w + tp.beta1 * s.z + tp.a1 * inv};
}

}  // namespace duopoly

#endif
