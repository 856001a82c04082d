#include "qrel/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "qrel/hawking_gisin.hpp"

namespace qrel {

namespace {

constexpr double kPi = std::numbers::pi;

struct ParamRule {
    double lo;
    double hi;
    bool lo_open;
    bool hi_open;
    const char* range_text;
};

const std::map<std::string, ParamRule>& param_rules() {
    static const std::map<std::string, ParamRule> rules = {
        {"alpha", {0.0, 1.0, false, false, "alpha must lie in [0,1]"}},
        {"phi", {0.0, kPi / 2.0, false, false, "phi must lie in [0, pi/2]"}},
        {"omega", {0.0, 1e308, true, false, "omega must be positive"}},
        {"t_hawking", {0.0, 1e308, false, false, "t_hawking must be non-negative"}},
        {"r0", {1.0, 1e308, true, false, "r0 must exceed 1"}},
        {"kappa0", {-3.0, 1.0, false, false, "kappa0 must lie in [-3,1]"}},
        {"epsilon", {0.0, 1e308, true, false, "epsilon must be positive"}},
        {"t_unruh", {0.0, 1e308, true, false, "t_unruh must be positive"}},
    };
    return rules;
}

void check_param(const std::string& name, double value) {
    const auto it = param_rules().find(name);
    if (it == param_rules().end()) throw ValidationError("unknown parameter '" + name + "'");
    const ParamRule& r = it->second;
    const bool low_bad = r.lo_open ? value <= r.lo : value < r.lo;
    const bool high_bad = r.hi_open ? value >= r.hi : value > r.hi;
    if (low_bad || high_bad || !std::isfinite(value)) throw ValidationError(r.range_text);
}

const std::vector<std::string>& scenario_params(Scenario s) {
    static const std::vector<std::string> gisin = {"alpha", "phi", "omega", "t_hawking", "r0"};
    static const std::vector<std::string> unruh = {"kappa0", "epsilon", "t_unruh"};
    static const std::vector<std::string> det = {"kappa0", "omega", "t_hawking", "r0"};
    static const std::vector<std::string> none = {};
    switch (s) {
        case Scenario::GisinHawking: return gisin;
        case Scenario::Unruh: return unruh;
        case Scenario::StaticDetectors: return det;
        default: return none;
    }
}

bool is_scenario_param(Scenario s, const std::string& name) {
    const auto& v = scenario_params(s);
    return std::find(v.begin(), v.end(), name) != v.end();
}

struct RawEntry {
    int line;
    std::string section;
    std::string key;
    std::string value;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<RawEntry> tokenize(const std::string& text) {
    std::vector<RawEntry> entries;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    std::set<std::pair<std::string, std::string>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError(lineno, "unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) throw ParseError(lineno, "empty section name");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
        if (section.empty()) throw ParseError(lineno, "key before any [section] header");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, "empty key");
        if (value.empty()) throw ParseError(lineno, "empty value for '" + key + "'");
        if (!seen.insert({section, key}).second)
            throw ParseError(lineno, "duplicate key '" + key + "' in [" + section + "]");
        entries.push_back({lineno, section, std::move(key), std::move(value)});
    }
    return entries;
}

double parse_number(const RawEntry& e) {
    char* end = nullptr;
    const double v = std::strtod(e.value.c_str(), &end);
    if (end == e.value.c_str() || *end != '\0')
        throw ParseError(e.line, "value for '" + e.key + "' is not a number");
    return v;
}

int parse_int(const RawEntry& e) {
    char* end = nullptr;
    const long v = std::strtol(e.value.c_str(), &end, 10);
    if (end == e.value.c_str() || *end != '\0')
        throw ParseError(e.line, "value for '" + e.key + "' is not an integer");
    return static_cast<int>(v);
}

std::vector<double> parse_list(const RawEntry& e) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(e.value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError(e.line, "empty item in list for '" + e.key + "'");
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            throw ParseError(e.line, "list for '" + e.key + "' holds a non-number");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError(e.line, "empty list for '" + e.key + "'");
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::GisinHawking: return "gisin-hawking";
        case Scenario::Unruh: return "unruh";
        case Scenario::StaticDetectors: return "static-detectors";
        default: return "dynamics";
    }
}

Scenario scenario_from_string(const std::string& name) {
    if (name == "gisin-hawking") return Scenario::GisinHawking;
    if (name == "unruh") return Scenario::Unruh;
    if (name == "static-detectors") return Scenario::StaticDetectors;
    if (name == "dynamics") return Scenario::Dynamics;
    throw ValidationError(
        "scenario must be one of gisin-hawking, unruh, static-detectors, dynamics");
}

SweepSpec parse_config(const std::string& text) {
    SweepSpec spec;
    bool scenario_set = false, axis_set = false;

    for (const RawEntry& e : tokenize(text)) {
        if (e.section == "sweep") {
            if (e.key == "scenario") {
                spec.scenario = scenario_from_string(e.value);
                scenario_set = true;
            } else if (e.key == "axis") {
                spec.axis.name = e.value;
                axis_set = true;
            } else if (e.key == "start") {
                spec.axis.start = parse_number(e);
            } else if (e.key == "stop") {
                spec.axis.stop = parse_number(e);
            } else if (e.key == "points") {
                spec.axis.points = parse_int(e);
            } else if (e.key == "scale") {
                if (e.value == "linear")
                    spec.axis.scale = AxisScale::Linear;
                else if (e.value == "log")
                    spec.axis.scale = AxisScale::Log;
                else
                    throw ValidationError("scale must be 'linear' or 'log'");
            } else {
                throw ParseError(e.line, "unknown key '" + e.key + "' in [sweep]");
            }
        } else if (e.section == "fixed") {
            if (e.key == "vacuum") {
                spec.vacuum = e.value;
            } else {
                if (param_rules().count(e.key) == 0)
                    throw ParseError(e.line, "unknown key '" + e.key + "' in [fixed]");
                spec.fixed[e.key] = parse_number(e);
            }
        } else if (e.section == "series") {
            if (!spec.series_name.empty())
                throw ValidationError("only one series parameter is supported");
            if (param_rules().count(e.key) == 0)
                throw ParseError(e.line, "unknown key '" + e.key + "' in [series]");
            spec.series_name = e.key;
            spec.series_values = parse_list(e);
        } else if (e.section == "output") {
            if (e.key == "csv")
                spec.csv_path = e.value;
            else if (e.key == "svg")
                spec.svg_path = e.value;
            else
                throw ParseError(e.line, "unknown key '" + e.key + "' in [output]");
        } else {
            throw ParseError(e.line, "unknown section [" + e.section + "]");
        }
    }

    if (!scenario_set) throw ValidationError("missing 'scenario' in [sweep]");
    if (spec.scenario == Scenario::Dynamics)
        throw ValidationError("scenario dynamics runs through the 'dynamics' subcommand");
    if (!axis_set) throw ValidationError("missing 'axis' in [sweep]");

    // axis / series / fixed cross-checks
    if (!is_scenario_param(spec.scenario, spec.axis.name))
        throw ValidationError("axis '" + spec.axis.name + "' is not a parameter of scenario " +
                              to_string(spec.scenario));
    if (spec.fixed.count(spec.axis.name))
        throw ValidationError("axis parameter '" + spec.axis.name + "' must not appear in [fixed]");
    if (!spec.series_name.empty()) {
        if (!is_scenario_param(spec.scenario, spec.series_name))
            throw ValidationError("series '" + spec.series_name +
                                  "' is not a parameter of scenario " + to_string(spec.scenario));
        if (spec.series_name == spec.axis.name)
            throw ValidationError("series parameter must differ from the axis");
        if (spec.fixed.count(spec.series_name))
            throw ValidationError("series parameter '" + spec.series_name +
                                  "' must not appear in [fixed]");
    }

    if (spec.axis.points < 2) throw ValidationError("points must be at least 2");
    if (!(spec.axis.start < spec.axis.stop)) throw ValidationError("start must be less than stop");
    if (spec.axis.scale == AxisScale::Log && spec.axis.start <= 0.0)
        throw ValidationError("log scale requires start > 0");
    check_param(spec.axis.name, spec.axis.start);
    check_param(spec.axis.name, spec.axis.stop);
    for (double v : spec.series_values) check_param(spec.series_name, v);
    for (const auto& [k, v] : spec.fixed) {
        if (!is_scenario_param(spec.scenario, k))
            throw ValidationError("parameter '" + k + "' does not belong to scenario " +
                                  to_string(spec.scenario));
        check_param(k, v);
    }

    if (spec.scenario == Scenario::StaticDetectors) {
        if (spec.vacuum.empty()) spec.vacuum = "hartle-hawking";
        if (spec.vacuum != "boulware" && spec.vacuum != "hartle-hawking")
            throw ValidationError("vacuum must be 'boulware' or 'hartle-hawking'");
    } else if (!spec.vacuum.empty()) {
        throw ValidationError("'vacuum' only applies to scenario static-detectors");
    }

    // every remaining scenario parameter must be pinned in [fixed]
    for (const std::string& p : scenario_params(spec.scenario)) {
        if (p == spec.axis.name || p == spec.series_name || spec.fixed.count(p)) continue;
        const bool boulware = spec.scenario == Scenario::StaticDetectors &&
                              spec.vacuum == "boulware";
        if (boulware && (p == "omega" || p == "t_hawking" || p == "r0")) continue;
        throw ValidationError("missing required parameter '" + p + "' for scenario " +
                              to_string(spec.scenario));
    }
    return spec;
}

std::string emit_config(const SweepSpec& spec) {
    std::ostringstream out;
    out << "[sweep]\n";
    out << "scenario = " << to_string(spec.scenario) << "\n";
    out << "axis = " << spec.axis.name << "\n";
    out << "start = " << format_double(spec.axis.start) << "\n";
    out << "stop = " << format_double(spec.axis.stop) << "\n";
    out << "points = " << spec.axis.points << "\n";
    out << "scale = " << (spec.axis.scale == AxisScale::Linear ? "linear" : "log") << "\n";
    out << "\n[fixed]\n";
    for (const auto& [k, v] : spec.fixed) out << k << " = " << format_double(v) << "\n";
    if (!spec.vacuum.empty()) out << "vacuum = " << spec.vacuum << "\n";
    if (!spec.series_name.empty()) {
        out << "\n[series]\n" << spec.series_name << " = ";
        for (size_t i = 0; i < spec.series_values.size(); ++i) {
            if (i) out << ", ";
            out << format_double(spec.series_values[i]);
        }
        out << "\n";
    }
    out << "\n[output]\n";
    out << "csv = " << spec.csv_path << "\n";
    if (!spec.svg_path.empty()) out << "svg = " << spec.svg_path << "\n";
    return out.str();
}

namespace {

struct Job {
    double axis_value;
    std::string label;
    std::map<std::string, double> params;
    OmegaConvention convention = OmegaConvention::TanhTheta;
};

CsvRow evaluate_job(const SweepSpec& spec, const Job& job, const RunOptions& opts,
                    std::uint64_t job_index) {
    CsvRow row;
    row.axis_value = job.axis_value;
    row.series_label = job.label;

    auto p = [&](const char* name) { return job.params.at(name); };

    ResourceReport rep;
    DensityMatrix state = XState{0.25, 0.25, 0.25, 0.25, 0, 0}.to_density();
    switch (spec.scenario) {
        case Scenario::GisinHawking: {
            const GisinParams gp{p("alpha"), p("phi")};
            const HawkingEnv env{p("omega"), p("t_hawking"), p("r0")};
            rep = gisin_hawking_resources(gp, env);
            if (!env.rindler_valid()) row.flags = "rindler-out";
            if (opts.oracle_restarts > 0)
                state = hawking_channel_accessible(gisin_density(gp).to_density(),
                                                   hawking_theta(env));
            break;
        }
        case Scenario::Unruh: {
            const double ratio = omega_unruh(p("t_unruh"), p("epsilon"));
            rep = detector_resources_closed(ratio, p("kappa0"));
            if (opts.oracle_restarts > 0)
                state = equilibrium_state(ratio, p("kappa0")).to_density();
            break;
        }
        case Scenario::StaticDetectors: {
            double ratio = 1.0;
            if (spec.vacuum == "boulware") {
                ratio = omega_boulware();
            } else {
                ratio = omega_hh(p("omega"), p("t_hawking"), p("r0"), job.convention);
                const HawkingEnv env{p("omega"), p("t_hawking"), p("r0")};
                if (!env.rindler_valid()) row.flags = "rindler-out";
            }
            rep = detector_resources_closed(ratio, p("kappa0"));
            if (opts.oracle_restarts > 0)
                state = equilibrium_state(ratio, p("kappa0")).to_density();
            break;
        }
        default:
            throw DomainError("run_sweep cannot evaluate a dynamics spec");
    }

    row.coherence = rep.coherence;
    row.discord = rep.discord;
    row.concurrence = rep.concurrence;
    row.bures = rep.bures;
    if (opts.oracle_restarts > 0) {
        std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * (job_index + 1)));
        row.discord = trace_distance_discord_oracle(state, opts.oracle_restarts, 1e-6, rng);
    }
    return row;
}

}  // namespace

std::vector<CsvRow> run_sweep(const SweepSpec& spec, const RunOptions& opts) {
    std::vector<double> axis_values(spec.axis.points);
    for (int i = 0; i < spec.axis.points; ++i) {
        const double t = static_cast<double>(i) / (spec.axis.points - 1);
        axis_values[i] = spec.axis.scale == AxisScale::Linear
                             ? spec.axis.start + t * (spec.axis.stop - spec.axis.start)
                             : spec.axis.start * std::pow(spec.axis.stop / spec.axis.start, t);
    }

    const bool split_conventions =
        spec.scenario == Scenario::StaticDetectors && spec.vacuum == "hartle-hawking";

    std::vector<Job> jobs;
    for (double av : axis_values) {
        std::map<std::string, double> base = spec.fixed;
        base[spec.axis.name] = av;
        std::vector<std::pair<std::string, std::map<std::string, double>>> curve_points;
        if (spec.series_name.empty()) {
            curve_points.emplace_back("", base);
        } else {
            for (double sv : spec.series_values) {
                auto params = base;
                params[spec.series_name] = sv;
                curve_points.emplace_back(format_short(sv), params);
            }
        }
        for (auto& [label, params] : curve_points) {
            if (split_conventions) {
                const std::string stem = label.empty() ? "" : label;
                jobs.push_back({av, stem.empty() ? "tanh" : stem + ":tanh", params,
                                OmegaConvention::TanhTheta});
                jobs.push_back({av, stem.empty() ? "half" : stem + ":half", params,
                                OmegaConvention::HalfTheta});
            } else {
                jobs.push_back({av, label, params, OmegaConvention::TanhTheta});
            }
        }
    }

    std::vector<CsvRow> rows(jobs.size());
    const int threads = std::max(1, opts.threads);
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_text;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= jobs.size() || failed.load()) return;
            try {
                rows[k] = evaluate_job(spec, jobs[k], opts, k);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (error_text.empty()) {
                    error_text = "at " + spec.axis.name + "=" + format_short(jobs[k].axis_value);
                    if (!jobs[k].label.empty()) error_text += ", series=" + jobs[k].label;
                    error_text += ": " + std::string(ex.what());
                }
                return;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error(error_text);
    return rows;
}

std::string csv_text(const std::vector<CsvRow>& rows, const SweepSpec& spec) {
    std::ostringstream out;
    out << spec.axis.name << ",series,C_H,D_T,concurrence,B_d,flags\n";
    for (const CsvRow& r : rows) {
        out << format_double(r.axis_value) << ',' << r.series_label << ','
            << format_double(r.coherence) << ',' << format_double(r.discord) << ','
            << format_double(r.concurrence) << ',' << format_double(r.bures) << ',' << r.flags
            << '\n';
    }
    return out.str();
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig4", "fig5", "fig67", "fig89", "fig1011"};
}

std::vector<SweepSpec> preset_sweeps(const std::string& name) {
    auto hawking_base = [](const char* csv, const char* svg) {
        SweepSpec s;
        s.scenario = Scenario::GisinHawking;
        s.axis = {"t_hawking", 0.1, 20.0, 200, AxisScale::Linear};
        s.fixed = {{"omega", 10.0}, {"r0", 1.1}};
        s.csv_path = csv;
        s.svg_path = svg;
        return s;
    };
    auto unruh_base = [](const char* csv, const char* svg) {
        SweepSpec s;
        s.scenario = Scenario::Unruh;
        s.axis = {"t_unruh", 0.02, 20.0, 200, AxisScale::Linear};
        s.fixed = {{"epsilon", 5.0}};
        s.csv_path = csv;
        s.svg_path = svg;
        return s;
    };
    auto hh_base = [](const char* csv, const char* svg) {
        SweepSpec s;
        s.scenario = Scenario::StaticDetectors;
        s.vacuum = "hartle-hawking";
        s.axis = {"t_hawking", 0.2, 60.0, 240, AxisScale::Linear};
        s.csv_path = csv;
        s.svg_path = svg;
        return s;
    };

    if (name == "fig2") {
        // coherence/discord/entanglement against T_H for the alpha family,
        // phi = pi/4, omega = 10, R0 = 1.1
        SweepSpec s = hawking_base("fig2.csv", "fig2.svg");
        s.fixed["phi"] = kPi / 4.0;
        s.series_name = "alpha";
        s.series_values = {0.2, 0.4, 0.6, 0.8, 1.0};
        return {s};
    }
    if (name == "fig3") {
        // angle family at alpha = 1; the caption fixes no angles, so a spread
        // from pi/12 up to the maximally entangled pi/4 is used
        SweepSpec s = hawking_base("fig3.csv", "fig3.svg");
        s.fixed["alpha"] = 1.0;
        s.series_name = "phi";
        s.series_values = {kPi / 12.0, kPi / 8.0, kPi / 6.0, kPi / 4.0};
        return {s};
    }
    if (name == "fig4") {
        // distance family: R0 between 1.01 and 1.2 at alpha = 1, phi = pi/4
        SweepSpec s = hawking_base("fig4.csv", "fig4.svg");
        s.fixed.erase("r0");
        s.fixed["alpha"] = 1.0;
        s.fixed["phi"] = kPi / 4.0;
        s.series_name = "r0";
        s.series_values = {1.01, 1.05, 1.1, 1.2};
        return {s};
    }
    if (name == "fig5") {
        // initial-state family at epsilon = 5
        SweepSpec s = unruh_base("fig5.csv", "fig5.svg");
        s.series_name = "kappa0";
        s.series_values = {-2.0, -1.5, -0.6, 0.6, 1.0};
        return {s};
    }
    if (name == "fig67") {
        // level-spacing family, one positive and one negative initial state;
        // the text fixes kappa0 = 0.1 and -1.5, the epsilon values are a
        // representative spread
        SweepSpec a = unruh_base("fig67a.csv", "fig67a.svg");
        a.fixed = {{"kappa0", 0.1}};
        a.series_name = "epsilon";
        a.series_values = {1.0, 3.0, 5.0, 7.0};
        SweepSpec b = a;
        b.fixed = {{"kappa0", -1.5}};
        b.csv_path = "fig67b.csv";
        b.svg_path = "fig67b.svg";
        return {a, b};
    }
    if (name == "fig89") {
        // HH vacuum, distance family at omega = 50; both rate-ratio
        // conventions are emitted per series value
        SweepSpec a = hh_base("fig89a.csv", "fig89a.svg");
        a.fixed = {{"omega", 50.0}, {"kappa0", 0.6}};
        a.series_name = "r0";
        a.series_values = {1.01, 1.05, 1.1, 1.2};
        SweepSpec b = a;
        b.fixed = {{"omega", 50.0}, {"kappa0", -2.0}};
        b.csv_path = "fig89b.csv";
        b.svg_path = "fig89b.svg";
        return {a, b};
    }
    if (name == "fig1011") {
        // HH vacuum, frequency family at R0 = 1.1
        SweepSpec a = hh_base("fig1011a.csv", "fig1011a.svg");
        a.fixed = {{"r0", 1.1}, {"kappa0", 0.6}};
        a.series_name = "omega";
        a.series_values = {10.0, 30.0, 50.0, 70.0};
        SweepSpec b = a;
        b.fixed = {{"r0", 1.1}, {"kappa0", -2.0}};
        b.csv_path = "fig1011b.csv";
        b.svg_path = "fig1011b.svg";
        return {a, b};
    }
    throw ValidationError("unknown preset '" + name + "'");
}

DynamicsRunSpec parse_dynamics_config(const std::string& text) {
    DynamicsRunSpec spec;
    bool have_ratio = false, have_t_unruh = false, have_kappa0 = false;

    for (const RawEntry& e : tokenize(text)) {
        if (e.section == "dynamics") {
            if (e.key == "omega_ratio") {
                spec.omega_ratio = parse_number(e);
                have_ratio = true;
            } else if (e.key == "t_unruh") {
                spec.t_unruh = parse_number(e);
                have_t_unruh = true;
            } else if (e.key == "kappa0") {
                spec.kappa0 = parse_number(e);
                have_kappa0 = true;
            } else if (e.key == "epsilon") {
                spec.epsilon = parse_number(e);
            } else if (e.key == "gamma_plus") {
                spec.gamma_plus = parse_number(e);
            } else if (e.key == "gamma_zero") {
                spec.gamma_zero = parse_number(e);
            } else if (e.key == "dt") {
                spec.evolution.dt = parse_number(e);
            } else if (e.key == "max_time") {
                spec.evolution.max_time = parse_number(e);
            } else if (e.key == "tol") {
                spec.evolution.convergence_tol = parse_number(e);
            } else {
                throw ParseError(e.line, "unknown key '" + e.key + "' in [dynamics]");
            }
        } else if (e.section == "output") {
            if (e.key == "csv")
                spec.csv_path = e.value;
            else
                throw ParseError(e.line, "unknown key '" + e.key + "' in [output]");
        } else {
            throw ParseError(e.line, "unknown section [" + e.section + "] in dynamics config");
        }
    }

    if (!have_kappa0) throw ValidationError("missing 'kappa0' in [dynamics]");
    check_param("kappa0", spec.kappa0);
    check_param("epsilon", spec.epsilon);
    if (have_ratio == have_t_unruh)
        throw ValidationError("[dynamics] needs exactly one of omega_ratio or t_unruh");
    if (have_ratio && (spec.omega_ratio < 0.0 || spec.omega_ratio > 1.0))
        throw ValidationError("omega_ratio must lie in [0,1]");
    if (have_t_unruh) {
        check_param("t_unruh", spec.t_unruh);
        spec.omega_ratio = -1.0;
    }
    if (spec.gamma_plus <= 0.0) throw ValidationError("gamma_plus must be positive");
    return spec;
}

double dynamics_omega_ratio(const DynamicsRunSpec& spec) {
    if (spec.omega_ratio >= 0.0) return spec.omega_ratio;
    return omega_unruh(spec.t_unruh, spec.epsilon);
}

DensityMatrix random_state_with_kappa0(double kappa0, std::mt19937_64& rng) {
    if (kappa0 < -3.0 || kappa0 > 1.0) throw DomainError("kappa0 must lie in [-3,1]");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix raw = a * a.adjoint();
    raw = raw * (1.0 / raw.trace().real());

    double k = 0.0;
    for (int i = 0; i < 3; ++i)
        k += (raw * kron(pauli::by_index(i), pauli::by_index(i))).trace().real();

    // Mix toward a Bell state of known invariant (+1 or -3) to land exactly
    // on the requested kappa0 (the invariant is linear in the state).
    Matrix ref(4, 4);
    double kref;
    if (kappa0 > k) {
        ref(0, 0) = ref(3, 3) = ref(0, 3) = ref(3, 0) = 0.5;
        kref = 1.0;
    } else {
        ref(1, 1) = ref(2, 2) = 0.5;
        ref(1, 2) = ref(2, 1) = -0.5;
        kref = -3.0;
    }
    const double t = (kappa0 - k) / (kref - k);
    Matrix mixed = raw * (1.0 - t) + ref * t;
    return DensityMatrix((mixed + mixed.adjoint()) * Complex(0.5, 0.0));
}

}  // namespace qrel
