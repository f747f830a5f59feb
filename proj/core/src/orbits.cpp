#include "duopoly/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "duopoly/stability.hpp"

namespace duopoly {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::FixedPoint: return "fixed-point";
        case Regime::Leapfrogging: return "leapfrogging";
        case Regime::MonopolyX: return "monopoly-X";
        case Regime::MonopolyY: return "monopoly-Y";
        case Regime::PeriodicOneSided: return "periodic-one-sided";
        case Regime::Chaotic: return "chaotic";
        case Regime::Diverged: return "diverged";
    }
    return "unknown";
}

Orbit iterate_orbit(const OrbitConfig& cfg, const TransformedParams& tp) {
    cfg.validate();
    DiffSumState s = cfg.initial;
    for (long i = 0; i < cfg.n_transient; ++i) {
        s = step_zw(s, tp);
        if (std::fabs(s.z) > cfg.divergence_bound ||
            std::fabs(s.w) > cfg.divergence_bound)
            throw Diverged{i};
    }
    Orbit orbit;
    orbit.z.reserve(cfg.n_sample);
    orbit.w.reserve(cfg.n_sample);
    for (long i = 0; i < cfg.n_sample; ++i) {
        s = step_zw(s, tp);
        if (std::fabs(s.z) > cfg.divergence_bound ||
            std::fabs(s.w) > cfg.divergence_bound)
            throw Diverged{cfg.n_transient + i};
        orbit.z.push_back(s.z);
        orbit.w.push_back(s.w);
    }
    return orbit;
}

std::optional<int> detect_period(const std::vector<double>& z, double tol,
                                 int max_period) {
    if (tol <= 0.0 || max_period < 1)
        throw std::invalid_argument("detect_period: bad tol or max_period");
    const std::size_t need = 4 * static_cast<std::size_t>(max_period);
    if (z.size() < need) throw InsufficientSamples{z.size(), need};

    for (int p = 1; p <= max_period; ++p) {
        bool ok = true;
        for (std::size_t n = 0; n + p < z.size(); ++n) {
            if (std::fabs(z[n + p] - z[n]) > tol) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return std::nullopt;
}

std::vector<BifurcationRow> bifurcation_sweep(const TransformedParams& tp_base,
                                              double c_min, double c_max,
                                              int n_c, const OrbitConfig& cfg) {
    if (!(c_min < c_max) || n_c < 2)
        throw std::invalid_argument("bifurcation_sweep: need c_min < c_max and n_c >= 2");
    cfg.validate();
    const int max_period =
        std::min<long>(64, std::max<long>(1, cfg.n_sample / 4));

    std::vector<BifurcationRow> rows;
    rows.reserve(n_c);
    for (int i = 0; i < n_c; ++i) {
        const double c = c_min + (c_max - c_min) * i / (n_c - 1);
        TransformedParams tp = tp_base;
        tp.c = c;
        BifurcationRow row{c, {}, {}, std::nullopt, std::nullopt};
        try {
            Orbit orbit = iterate_orbit(cfg, tp);
            row.detected_period = detect_period(orbit.z, 1e-6, max_period);
            row.samples_z = std::move(orbit.z);
            row.samples_w = std::move(orbit.w);
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

int sign_of(double z, double deadband) {
    if (z > deadband) return 1;
    if (z < -deadband) return -1;
    return 0;
}

// Counts deadband-filtered sign changes over [begin, end); circular when
// wrap is set (one-period windows).
int count_sign_changes(const std::vector<double>& z, std::size_t begin,
                       std::size_t end, double deadband, bool wrap) {
    std::vector<int> signs;
    for (std::size_t i = begin; i < end; ++i) {
        const int s = sign_of(z[i], deadband);
        if (s != 0) signs.push_back(s);
    }
    if (signs.size() < 2) return 0;
    int changes = 0;
    const std::size_t n = signs.size();
    const std::size_t last = wrap ? n : n - 1;
    for (std::size_t i = 0; i < last; ++i) {
        if (signs[i] != signs[(i + 1) % n]) ++changes;
    }
    return changes;
}

// For aperiodic sign-alternating orbits the fundamental cycle is estimated
// from upward (negative-to-positive) crossings.
int sign_changes_per_cycle(const std::vector<double>& z, double deadband) {
    int changes = 0;
    int upward = 0;
    int prev = 0;
    for (double v : z) {
        const int s = sign_of(v, deadband);
        if (s == 0) continue;
        if (prev != 0 && s != prev) {
            ++changes;
            if (s > 0) ++upward;
        }
        prev = s;
    }
    if (upward == 0) return changes;
    return static_cast<int>(
        std::lround(static_cast<double>(changes) / upward));
}

}  // namespace

RegimeReport classify_regime(const TransformedParams& tp,
                             const OrbitConfig& cfg, double deadband) {
    if (!(deadband > 0.0))
        throw std::invalid_argument("classify_regime: deadband must be > 0");
    cfg.validate();

    Orbit orbit;
    try {
        orbit = iterate_orbit(cfg, tp);
    } catch (const Diverged&) {
        return {Regime::Diverged, std::nullopt, 0,
                std::numeric_limits<double>::quiet_NaN(),
                std::numeric_limits<double>::quiet_NaN()};
    }

    const int max_period =
        std::min<long>(64, std::max<long>(1, cfg.n_sample / 4));
    const std::optional<int> period = detect_period(orbit.z, 1e-6, max_period);
    const double min_w = *std::min_element(orbit.w.begin(), orbit.w.end());

    double lyap;
    try {
        lyap = lyapunov_largest(cfg.initial, tp, cfg.n_transient,
                                std::max<long>(10000, cfg.n_sample));
    } catch (const Diverged&) {
        return {Regime::Diverged, std::nullopt, 0, min_w,
                std::numeric_limits<double>::quiet_NaN()};
    }

    bool has_pos = false, has_neg = false;
    for (double v : orbit.z) {
        if (v > deadband) has_pos = true;
        if (v < -deadband) has_neg = true;
    }

    int changes;
    if (period) {
        const std::size_t p = static_cast<std::size_t>(*period);
        changes = count_sign_changes(orbit.z, orbit.z.size() - p,
                                     orbit.z.size(), deadband, true);
    } else {
        changes = sign_changes_per_cycle(orbit.z, deadband);
    }

    Regime label;
    if (period && *period == 1) {
        label = Regime::FixedPoint;
    } else if (!period && lyap > kChaosThreshold) {
        label = Regime::Chaotic;
    } else if (has_pos && has_neg) {
        label = Regime::Leapfrogging;
    } else if (!has_pos && !has_neg) {
        label = Regime::FixedPoint;  // pinned inside the deadband
    } else if (period && *period > 1) {
        label = Regime::PeriodicOneSided;
    } else {
        label = has_pos ? Regime::MonopolyX : Regime::MonopolyY;
    }
    return {label, period, changes, min_w, lyap};
}

std::vector<RegimeCell> regime_grid(const std::vector<ModelParams>& cells,
                                    const OrbitConfig& cfg, double deadband) {
    std::vector<RegimeCell> out;
    out.reserve(cells.size());
    for (const ModelParams& p : cells) {
        RegimeCell cell{p, std::nullopt, std::nullopt};
        try {
            cell.report = classify_regime(transform_params(p), cfg, deadband);
        } catch (const std::exception& ex) {
            cell.error = ex.what();
        }
        out.push_back(std::move(cell));
    }
    return out;
}

}  // namespace duopoly
