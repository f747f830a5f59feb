// Command-line front end: simulate | fixed-points | bifurcation | classify |
// stability. Options come from an optional flat key=value config file plus
// flag overrides (flags win). Output is CSV or JSON with 12 significant
// digits. Exit codes: 0 success, 2 config/validation error, 3 divergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "duopoly/fixed_points.hpp"
#include "duopoly/model.hpp"
#include "duopoly/orbits.hpp"
#include "duopoly/stability.hpp"

using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDiverged = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Options {
    std::optional<double> a, b, alpha, beta, c;
    std::optional<double> c_min, c_max;
    std::optional<int> n_c;
    long transient = 1000;
    long samples = 500;
    double seed_x = 0.1;
    double seed_y = 0.2;
    double deadband = 1e-9;
    std::string format = "csv";
    std::string out;  // empty = stdout
    std::string c_list;
    bool include_transient = false;
};

const std::map<std::string, int>& known_keys() {
    static const std::map<std::string, int> keys = {
        {"a", 0},        {"b", 0},         {"alpha", 0},   {"beta", 0},
        {"c", 0},        {"c_min", 0},     {"c_max", 0},   {"n_c", 0},
        {"transient", 0}, {"samples", 0},  {"seed_x", 0},  {"seed_y", 0},
        {"deadband", 0}, {"format", 0},    {"out", 0},     {"c_list", 0},
        {"include_transient", 0}};
    return keys;
}

double parse_num(const std::string& key, const std::string& val, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(val, &pos);
        if (pos != val.size()) throw std::invalid_argument(val);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(line) + ": key '" +
                          key + "' has non-numeric value '" + val + "'");
    }
}

void load_config(const std::string& path, Options& opt) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == ';') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key=value, got '" + line + "'");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{}
                                          : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!known_keys().count(key))
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        if (key == "a") opt.a = parse_num(key, val, lineno);
        else if (key == "b") opt.b = parse_num(key, val, lineno);
        else if (key == "alpha") opt.alpha = parse_num(key, val, lineno);
        else if (key == "beta") opt.beta = parse_num(key, val, lineno);
        else if (key == "c") opt.c = parse_num(key, val, lineno);
        else if (key == "c_min") opt.c_min = parse_num(key, val, lineno);
        else if (key == "c_max") opt.c_max = parse_num(key, val, lineno);
        else if (key == "n_c") opt.n_c = static_cast<int>(parse_num(key, val, lineno));
        else if (key == "transient") opt.transient = static_cast<long>(parse_num(key, val, lineno));
        else if (key == "samples") opt.samples = static_cast<long>(parse_num(key, val, lineno));
        else if (key == "seed_x") opt.seed_x = parse_num(key, val, lineno);
        else if (key == "seed_y") opt.seed_y = parse_num(key, val, lineno);
        else if (key == "deadband") opt.deadband = parse_num(key, val, lineno);
        else if (key == "format") opt.format = val;
        else if (key == "out") opt.out = val;
        else if (key == "c_list") opt.c_list = val;
        else if (key == "include_transient")
            opt.include_transient = parse_num(key, val, lineno) != 0.0;
    }
}

duopoly::ModelParams model_params(const Options& opt, double c) {
    if (!opt.a || !opt.b || !opt.alpha || !opt.beta)
        throw ConfigError("model parameters a, b, alpha, beta are required "
                          "(via --a/--b/--alpha/--beta or a config file)");
    try {
        return {*opt.a, *opt.b, *opt.alpha, *opt.beta, c};
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
    }
}

double required_c(const Options& opt) {
    if (!opt.c) throw ConfigError("elasticity c is required (--c or config)");
    return *opt.c;
}

duopoly::OrbitConfig orbit_config(const Options& opt) {
    duopoly::OrbitConfig cfg;
    cfg.initial = duopoly::to_diffsum({opt.seed_x, opt.seed_y});
    cfg.n_transient = opt.transient;
    cfg.n_sample = opt.samples;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
    }
    return cfg;
}

std::vector<double> c_grid(const Options& opt) {
    if (!opt.c_list.empty()) {
        std::vector<double> cs;
        std::stringstream ss(opt.c_list);
        std::string tok;
        while (std::getline(ss, tok, ','))
            cs.push_back(parse_num("c_list", tok, 0));
        return cs;
    }
    if (opt.c_min && opt.c_max && opt.n_c) {
        if (!(*opt.c_min < *opt.c_max) || *opt.n_c < 2)
            throw ConfigError("need c_min < c_max and n_c >= 2");
        std::vector<double> cs(*opt.n_c);
        for (int i = 0; i < *opt.n_c; ++i)
            cs[i] = *opt.c_min + (*opt.c_max - *opt.c_min) * i / (*opt.n_c - 1);
        return cs;
    }
    if (opt.c) return {*opt.c};
    throw ConfigError("need --c, --c-list, or a --c-min/--c-max/--n-c range");
}

// Rows of (header, cells); JSON mode mirrors the CSV content.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const Options& opt) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.out.empty() && opt.out != "-") {
        file.open(opt.out);
        if (!file) throw ConfigError("cannot open output file: " + opt.out);
        os = &file;
    }
    if (opt.format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            *os << (i ? "," : "") << t.header[i];
        *os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                *os << (i ? "," : "") << row[i];
            *os << "\n";
        }
    } else if (opt.format == "json") {
        json arr = json::array();
        for (const auto& row : t.rows) {
            json rec;
            for (std::size_t i = 0; i < t.header.size(); ++i)
                rec[t.header[i]] = row[i];
            arr.push_back(rec);
        }
        *os << arr.dump(2) << "\n";
    } else {
        throw ConfigError("format must be csv or json, got '" + opt.format + "'");
    }
}

std::string period_str(const std::optional<int>& p) {
    return p ? std::to_string(*p) : std::string("aperiodic");
}

int cmd_simulate(const Options& opt) {
    const auto p = model_params(opt, required_c(opt));
    const auto tp = duopoly::transform_params(p);
    auto cfg = orbit_config(opt);

    Table t{{"n", "z", "w", "x", "y"}, {}};
    const long skip = opt.include_transient ? 0 : cfg.n_transient;
    cfg.n_sample += cfg.n_transient - skip;
    cfg.n_transient = skip;
    duopoly::Orbit orbit;
    try {
        orbit = duopoly::iterate_orbit(cfg, tp);
    } catch (const duopoly::Diverged& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDiverged;
    }
    for (std::size_t i = 0; i < orbit.z.size(); ++i) {
        const duopoly::SaleState s =
            duopoly::from_diffsum({orbit.z[i], orbit.w[i]});
        t.rows.push_back({std::to_string(skip + static_cast<long>(i) + 1),
                          fmt12(orbit.z[i]), fmt12(orbit.w[i]), fmt12(s.x),
                          fmt12(s.y)});
    }
    emit(t, opt);
    return 0;
}

int cmd_fixed_points(const Options& opt) {
    const auto cs = c_grid(opt);
    const auto p = model_params(opt, cs.front());
    const auto tp = duopoly::transform_params(p);
    const auto rows = duopoly::fixed_point_sweep(tp, cs);

    Table t{{"c", "z0", "w0", "residual7a", "residual7b", "converged"}, {}};
    for (const auto& row : rows) {
        if (row.error || row.roots.empty()) {
            t.rows.push_back({fmt12(row.c), "nan", "nan", "nan", "nan",
                              row.error ? "error" : "none"});
            continue;
        }
        for (const auto& r : row.roots) {
            t.rows.push_back({fmt12(row.c), fmt12(r.z0), fmt12(r.w0),
                              fmt12(r.residual7a), fmt12(r.residual7b),
                              r.converged ? "true" : "false"});
        }
    }
    emit(t, opt);
    return 0;
}

int cmd_bifurcation(const Options& opt) {
    if (!opt.c_min || !opt.c_max || !opt.n_c)
        throw ConfigError("bifurcation needs --c-min, --c-max and --n-c");
    const auto p = model_params(opt, *opt.c_min);
    const auto tp = duopoly::transform_params(p);
    auto cfg = orbit_config(opt);
    const auto rows =
        duopoly::bifurcation_sweep(tp, *opt.c_min, *opt.c_max, *opt.n_c, cfg);

    Table t{{"c", "sample_index", "z", "w", "period"}, {}};
    for (const auto& row : rows) {
        if (row.error) {
            t.rows.push_back({fmt12(row.c), "-1", "nan", "nan", "diverged"});
            continue;
        }
        const std::string per = period_str(row.detected_period);
        for (std::size_t i = 0; i < row.samples_z.size(); ++i) {
            t.rows.push_back({fmt12(row.c), std::to_string(i),
                              fmt12(row.samples_z[i]), fmt12(row.samples_w[i]),
                              per});
        }
    }
    emit(t, opt);
    return 0;
}

int cmd_classify(const Options& opt) {
    const auto cs = c_grid(opt);
    std::vector<duopoly::ModelParams> cells;
    for (double c : cs) cells.push_back(model_params(opt, c));
    const auto cfg = orbit_config(opt);
    const auto grid = duopoly::regime_grid(cells, cfg, opt.deadband);

    Table t{{"a", "b", "alpha", "beta", "c", "label", "period", "min_w",
             "lyapunov"},
            {}};
    for (const auto& cell : grid) {
        const auto& p = cell.params;
        std::vector<std::string> row{fmt12(p.a), fmt12(p.b), fmt12(p.alpha),
                                     fmt12(p.beta), fmt12(p.c)};
        if (cell.report) {
            const auto& r = *cell.report;
            row.insert(row.end(),
                       {duopoly::to_string(r.label),
                        r.period ? std::to_string(*r.period) : "none",
                        fmt12(r.min_w), fmt12(r.lyapunov)});
        } else {
            row.insert(row.end(), {"error", "none", "nan", "nan"});
        }
        t.rows.push_back(std::move(row));
    }
    emit(t, opt);
    return 0;
}

int cmd_stability(const Options& opt) {
    const auto p = model_params(opt, required_c(opt));
    const auto tp = duopoly::transform_params(p);
    const auto roots = duopoly::find_fixed_points(tp);

    double cc = std::numeric_limits<double>::quiet_NaN();
    bool cc_defined = true;
    try {
        cc = duopoly::critical_elasticity(tp);
    } catch (const duopoly::ZeroB1&) {
        cc_defined = false;
    }
    const auto cfg = orbit_config(opt);
    double lyap = std::numeric_limits<double>::quiet_NaN();
    try {
        lyap = duopoly::lyapunov_largest(cfg.initial, tp, cfg.n_transient);
    } catch (const duopoly::Diverged&) {
    }

    Table t{{"c", "z0", "w0", "classification", "eig1_re", "eig1_im",
             "eig2_re", "eig2_im", "spectral_radius", "trace", "determinant",
             "period_one_value", "period_one_distance", "c_c",
             "c_c_applicable", "lyapunov"},
            {}};
    for (const auto& r : roots) {
        const auto rep = duopoly::classify_fixed_point(r, tp);
        const auto [p1_value, p1_dist] = duopoly::period_one_condition(r.z0, tp);
        t.rows.push_back(
            {fmt12(tp.c), fmt12(r.z0), fmt12(r.w0),
             duopoly::to_string(rep.classification), fmt12(rep.eig1.real()),
             fmt12(rep.eig1.imag()), fmt12(rep.eig2.real()),
             fmt12(rep.eig2.imag()), fmt12(rep.spectral_radius),
             fmt12(rep.trace), fmt12(rep.determinant), fmt12(p1_value),
             fmt12(p1_dist), cc_defined ? fmt12(cc) : "undefined",
             (cc_defined && cc > 0.0) ? "true" : "false", fmt12(lyap)});
    }
    emit(t, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-firm competition map toolkit: orbits, fixed points, "
                 "bifurcation diagrams, regime classification"};
    app.require_subcommand(1);

    Options opt;
    std::string config_path;

    // pre-scan for --config so file values act as defaults under flags
    for (int i = 1; i < argc - 1; ++i) {
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    }
    if (!config_path.empty()) {
        try {
            load_config(config_path, opt);
        } catch (const ConfigError& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return kExitConfig;
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key=value config file");
        sub->add_option("--out", opt.out, "output path (default stdout)");
        sub->add_option("--format", opt.format, "csv | json");
        sub->add_option("--a", [&opt](auto& v) { opt.a = std::stod(v[0]); return true; }, "investment scale of firm X");
        sub->add_option("--b", [&opt](auto& v) { opt.b = std::stod(v[0]); return true; }, "investment scale of firm Y");
        sub->add_option("--alpha", [&opt](auto& v) { opt.alpha = std::stod(v[0]); return true; }, "decay rate of firm X");
        sub->add_option("--beta", [&opt](auto& v) { opt.beta = std::stod(v[0]); return true; }, "decay rate of firm Y");
        sub->add_option("--c", [&opt](auto& v) { opt.c = std::stod(v[0]); return true; }, "elasticity coefficient");
        sub->add_option("--transient", opt.transient, "discarded steps");
        sub->add_option("--samples", opt.samples, "recorded steps");
        sub->add_option("--seed-x", opt.seed_x, "initial x");
        sub->add_option("--seed-y", opt.seed_y, "initial y");
        sub->add_option("--c-min", [&opt](auto& v) { opt.c_min = std::stod(v[0]); return true; }, "sweep start");
        sub->add_option("--c-max", [&opt](auto& v) { opt.c_max = std::stod(v[0]); return true; }, "sweep end");
        sub->add_option("--n-c", [&opt](auto& v) { opt.n_c = std::stoi(v[0]); return true; }, "sweep grid size");
        sub->add_option("--c-list", opt.c_list, "comma-separated c values");
        sub->add_option("--deadband", opt.deadband, "sign classification deadband");
        sub->add_flag("--include-transient", opt.include_transient,
                      "emit the transient segment too");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "time series n,z,w,x,y");
    CLI::App* fixed = app.add_subcommand("fixed-points", "fixed-point sweep vs c");
    CLI::App* bif = app.add_subcommand("bifurcation", "bifurcation diagram vs c");
    CLI::App* classify = app.add_subcommand("classify", "regime classification");
    CLI::App* stability = app.add_subcommand("stability", "fixed-point stability report");
    for (CLI::App* sub : {simulate, fixed, bif, classify, stability})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(opt);
        if (fixed->parsed()) return cmd_fixed_points(opt);
        if (bif->parsed()) return cmd_bifurcation(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (stability->parsed()) return cmd_stability(opt);
    } catch (const ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const duopoly::Diverged& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDiverged;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
