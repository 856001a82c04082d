#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qrel/detectors.hpp"
#include "qrel/dynamics.hpp"

namespace qrel {

enum class Scenario { GisinHawking, Unruh, StaticDetectors, Dynamics };
enum class AxisScale { Linear, Log };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

struct AxisSpec {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int points = 200;
    AxisScale scale = AxisScale::Linear;

    bool operator==(const AxisSpec&) const = default;
};

/// One sweep: a varying axis, fixed parameters, and an optional family of
/// curves (one per series value). Encodes each figure family as a preset.
struct SweepSpec {
    Scenario scenario = Scenario::GisinHawking;
    AxisSpec axis;
    std::map<std::string, double> fixed;
    std::string vacuum;  // static-detectors only: "boulware" | "hartle-hawking"
    std::string series_name;
    std::vector<double> series_values;
    std::string csv_path = "sweep.csv";
    std::string svg_path;  // empty = no chart

    bool operator==(const SweepSpec&) const = default;
};

struct CsvRow {
    double axis_value = 0.0;
    std::string series_label;  // "" for a single curve; HH rows carry ":tanh"/":half"
    double coherence = 0.0;
    double discord = 0.0;
    double concurrence = 0.0;
    double bures = 0.0;
    std::string flags = "ok";
};

struct RunOptions {
    std::uint64_t seed = 0;
    int oracle_restarts = 0;  // 0 = closed-form discord (default sweep path)
    int threads = 1;
};

/// Parses the line-oriented `key = value` config with [sweep] [fixed] [series]
/// [output] sections. Unknown keys and malformed lines raise ParseError with
/// the line number; range violations raise ValidationError naming the key.
SweepSpec parse_config(const std::string& text);

/// Canonical config text; parse_config(emit_config(s)) == s.
std::string emit_config(const SweepSpec& spec);

/// Evaluates the grid in axis-major, series-minor order. Hartle-Hawking
/// sweeps emit every series value twice, suffixed ":tanh" and ":half", one
/// row per rate-ratio convention. Deterministic for a fixed seed regardless
/// of thread count.
std::vector<CsvRow> run_sweep(const SweepSpec& spec, const RunOptions& opts = {});

/// Header plus one row per CsvRow, fixed %.17g formatting, '\n' endings.
std::string csv_text(const std::vector<CsvRow>& rows, const SweepSpec& spec);

/// Named figure presets; a name maps to one or two sweeps (the two-panel
/// families run a positive and a negative kappa0 case).
std::vector<SweepSpec> preset_sweeps(const std::string& name);
std::vector<std::string> preset_names();

/// Single dissipative trajectory run, driven by a config with [dynamics] and
/// [output] sections.
struct DynamicsRunSpec {
    double omega_ratio = -1.0;  // direct Omega; < 0 means derive from t_unruh/epsilon
    double t_unruh = 0.0;
    double kappa0 = 0.0;
    double epsilon = 5.0;
    double gamma_plus = 1.0;
    double gamma_zero = 0.0;
    EvolutionConfig evolution;
    std::string csv_path = "trajectory.csv";
};

DynamicsRunSpec parse_dynamics_config(const std::string& text);

/// Random two-qubit density matrix with the given kappa0, built by mixing a
/// seeded random state toward a Bell state of known invariant.
DensityMatrix random_state_with_kappa0(double kappa0, std::mt19937_64& rng);

/// Resolved rate ratio for the run (direct or tanh(epsilon/2T_U)).
double dynamics_omega_ratio(const DynamicsRunSpec& spec);

}  // namespace qrel
