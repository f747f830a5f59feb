#ifndef DUOPOLY_ORBITS_HPP
#define DUOPOLY_ORBITS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "duopoly/model.hpp"

namespace duopoly {

struct InsufficientSamples : std::runtime_error {
    InsufficientSamples(std::size_t have, std::size_t need)
        : std::runtime_error("period detection needs at least " +
                             std::to_string(need) + " samples, got " +
                             std::to_string(have)) {}
};

struct OrbitConfig {
    DiffSumState initial{-0.1, 0.3};  // (x0, y0) = (0.1, 0.2)
    long n_transient = 1000;
    long n_sample = 500;
    double divergence_bound = kDivergenceBound;

    void validate() const {
        if (n_transient < 1 || n_sample < 1)
            throw std::invalid_argument("OrbitConfig: counts must be >= 1");
        if (!(divergence_bound > 0.0))
            throw std::invalid_argument("OrbitConfig: bound must be > 0");
    }
};

struct Orbit {
    std::vector<double> z;
    std::vector<double> w;
};

// Applies step_zw n_transient + n_sample times and returns the last n_sample
// states in order. Throws Diverged (with the offending step index) when the
// divergence bound is exceeded.
Orbit iterate_orbit(const OrbitConfig& cfg, const TransformedParams& tp);

// Smallest p <= max_period with |z[n+p] - z[n]| <= tol over the whole
// sequence; nullopt when aperiodic. Requires length >= 4*max_period.
std::optional<int> detect_period(const std::vector<double>& z,
                                 double tol = 1e-6, int max_period = 64);

struct BifurcationRow {
    double c;
    std::vector<double> samples_z;
    std::vector<double> samples_w;
    std::optional<int> detected_period;  // nullopt = aperiodic
    std::optional<std::string> error;    // set for diverged cells
};

// Uniform c grid in [c_min, c_max]; per-c orbit plus period detection.
// max_period is clamped to n_sample/4 so short sample windows stay legal.
std::vector<BifurcationRow> bifurcation_sweep(const TransformedParams& tp_base,
                                              double c_min, double c_max,
                                              int n_c, const OrbitConfig& cfg);

enum class Regime {
    FixedPoint,
    Leapfrogging,
    MonopolyX,
    MonopolyY,
    PeriodicOneSided,
    Chaotic,
    Diverged
};

std::string to_string(Regime r);

struct RegimeReport {
    Regime label;
    std::optional<int> period;
    int sign_changes_per_period;
    double min_w;
    double lyapunov;
};

// Labels the attractor reached from cfg.initial. Decision ladder:
// diverged; period 1 -> fixed-point; aperiodic with exponent above the chaos
// threshold -> chaotic; otherwise sign-alternating z -> leapfrogging,
// one-signed z -> periodic-one-sided (finite period > 1) or monopoly-X/-Y.
RegimeReport classify_regime(const TransformedParams& tp,
                             const OrbitConfig& cfg, double deadband = 1e-9);

struct RegimeCell {
    ModelParams params;
    std::optional<RegimeReport> report;
    std::optional<std::string> error;
};

// classify_regime per parameter set; failures isolated per cell, cell order
// preserved.
std::vector<RegimeCell> regime_grid(const std::vector<ModelParams>& cells,
                                    const OrbitConfig& cfg,
                                    double deadband = 1e-9);

}  // namespace duopoly

#endif
