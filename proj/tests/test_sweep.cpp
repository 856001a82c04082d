#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qrel/svg.hpp"
#include "qrel/sweep.hpp"

using namespace qrel;

namespace {

const char* kMinimalConfig = R"(# minimal sweep
[sweep]
scenario = gisin-hawking
axis = t_hawking
start = 0.1
stop = 20
points = 50

[fixed]
alpha = 1.0
phi = 0.7853981634
omega = 10
r0 = 1.1

[output]
csv = out.csv
)";

std::string replaced(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("minimal config parses with defaults") {
    const SweepSpec spec = parse_config(kMinimalConfig);
    CHECK(spec.scenario == Scenario::GisinHawking);
    CHECK(spec.axis.name == "t_hawking");
    CHECK(spec.axis.points == 50);
    CHECK(spec.axis.scale == AxisScale::Linear);
    CHECK(spec.fixed.at("alpha") == 1.0);
    CHECK(spec.csv_path == "out.csv");
    CHECK(spec.svg_path.empty());
    CHECK(spec.series_name.empty());
}

TEST_CASE("config rejections") {
    CHECK_THROWS_WITH_AS(parse_config(replaced(kMinimalConfig, "r0 = 1.1", "r0 = 0.9")),
                         "r0 must exceed 1", ValidationError);
    CHECK_THROWS_AS(parse_config(replaced(kMinimalConfig, "alpha = 1.0", "alpha = 1.4")),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(replaced(kMinimalConfig, "points = 50", "points = 1")),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(replaced(kMinimalConfig, "start = 0.1", "start = 30")),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(replaced(kMinimalConfig, "omega = 10", "bogus = 10")),
                    ParseError);
    CHECK_THROWS_AS(parse_config(replaced(kMinimalConfig, "omega = 10", "")), ValidationError);
    CHECK_THROWS_AS(parse_config(replaced(kMinimalConfig, "points = 50", "points = few")),
                    ParseError);

    // parse errors carry the line number
    try {
        parse_config(replaced(kMinimalConfig, "omega = 10", "omega 10"));
        FAIL("expected ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.line() == 12);
        CHECK(std::string(ex.what()).find("line 12") != std::string::npos);
    }
}

TEST_CASE("presets round-trip through emit and parse") {
    for (const std::string& name : preset_names()) {
        for (const SweepSpec& spec : preset_sweeps(name)) {
            const SweepSpec back = parse_config(emit_config(spec));
            CHECK(back == spec);
        }
    }
}

TEST_CASE("fig2 preset shape") {
    const auto specs = preset_sweeps("fig2");
    REQUIRE(specs.size() == 1);
    const SweepSpec& s = specs[0];
    CHECK(s.series_name == "alpha");
    CHECK(s.series_values == std::vector<double>{0.2, 0.4, 0.6, 0.8, 1.0});
    CHECK(s.fixed.at("omega") == 10.0);
    CHECK(s.fixed.at("r0") == 1.1);
    CHECK(s.fixed.at("phi") == doctest::Approx(std::acos(-1.0) / 4.0));
    CHECK(s.axis.name == "t_hawking");
}

TEST_CASE("unknown preset") { CHECK_THROWS_AS(preset_sweeps("fig99"), ValidationError); }

TEST_CASE("degenerate two-point sweep") {
    SweepSpec spec = parse_config(kMinimalConfig);
    spec.axis.points = 2;
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].axis_value == doctest::Approx(0.1));
    CHECK(rows[1].axis_value == doctest::Approx(20.0));
}

TEST_CASE("fig2 coherence tracks alpha at the cold end") {
    const SweepSpec spec = preset_sweeps("fig2")[0];
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == static_cast<size_t>(spec.axis.points) * 5);
    // axis-major: the first five rows sit at the smallest temperature
    for (int k = 0; k < 5; ++k) {
        const double alpha = spec.series_values[k];
        CHECK(rows[k].axis_value == doctest::Approx(0.1));
        CHECK(rows[k].coherence == doctest::Approx(alpha).epsilon(1e-9));
        CHECK(rows[k].discord == doctest::Approx(alpha).epsilon(1e-9));
    }
}

TEST_CASE("fig5 coherence approaches |kappa0|/3 at the hot end") {
    const SweepSpec spec = preset_sweeps("fig5")[0];
    const auto rows = run_sweep(spec);
    for (size_t k = rows.size() - 5; k < rows.size(); ++k) {
        const double kappa0 = spec.series_values[k - (rows.size() - 5)];
        CHECK(rows[k].axis_value == doctest::Approx(20.0));
        CHECK(rows[k].coherence == doctest::Approx(std::abs(kappa0) / 3.0).epsilon(0.05));
    }
}

TEST_CASE("hartle-hawking sweeps emit both conventions") {
    const SweepSpec spec = preset_sweeps("fig89")[0];
    SweepSpec small = spec;
    small.axis.points = 3;
    const auto rows = run_sweep(small);
    REQUIRE(rows.size() == 3u * 4u * 2u);
    CHECK(rows[0].series_label == "1.01:tanh");
    CHECK(rows[1].series_label == "1.01:half");
    CHECK(rows[2].series_label == "1.05:tanh");
    // conventions agree in the cold limit; r0=1.01 at T=0.2, omega=50 is cold
    CHECK(rows[0].coherence == doctest::Approx(rows[1].coherence).epsilon(1e-6));
}

TEST_CASE("csv output is stable and ordered") {
    SweepSpec spec = parse_config(kMinimalConfig);
    spec.axis.points = 4;
    const auto rows = run_sweep(spec);
    const std::string a = csv_text(rows, spec);
    const std::string b = csv_text(run_sweep(spec), spec);
    CHECK(a == b);
    CHECK(a.find("t_hawking,series,C_H,D_T,concurrence,B_d,flags\n") == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 5);
    CHECK(a.find("ok") != std::string::npos);
}

TEST_CASE("sweep results do not depend on the thread count") {
    const SweepSpec spec = preset_sweeps("fig5")[0];
    SweepSpec small = spec;
    small.axis.points = 6;
    RunOptions serial;
    RunOptions parallel;
    parallel.threads = 4;
    CHECK(csv_text(run_sweep(small, serial), small) == csv_text(run_sweep(small, parallel), small));
}

TEST_CASE("oracle-discord sweeps stay close to the closed form") {
    SweepSpec spec = parse_config(kMinimalConfig);
    spec.axis.points = 2;
    RunOptions opts;
    opts.oracle_restarts = 8;
    opts.seed = 7;
    const auto rows = run_sweep(spec, opts);
    const auto closed = run_sweep(spec);
    for (size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].discord - closed[k].discord > -1e-3);
        CHECK(rows[k].discord - closed[k].discord < 5e-3);
    }
}

TEST_CASE("svg rendering") {
    const SweepSpec spec = preset_sweeps("fig2")[0];
    SweepSpec small = spec;
    small.axis.points = 40;
    const auto rows = run_sweep(small);
    const std::string svg = render_svg(rows, small);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);
    size_t polylines = 0;
    for (size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos; ++pos)
        ++polylines;
    CHECK(polylines == 5);
    CHECK(svg.find(">t_hawking<") != std::string::npos);
    CHECK(svg.find("alpha=1") != std::string::npos);

    // single curve: no legend text entries
    SweepSpec single = parse_config(kMinimalConfig);
    single.axis.points = 10;
    const std::string svg1 = render_svg(run_sweep(single), single);
    size_t poly1 = 0;
    for (size_t pos = 0; (pos = svg1.find("<polyline", pos)) != std::string::npos; ++pos)
        ++poly1;
    CHECK(poly1 == 1);

    CHECK_THROWS_AS(render_svg({}, small), EmptyDataError);
}

TEST_CASE("long series are decimated") {
    SweepSpec spec = parse_config(kMinimalConfig);
    spec.axis.points = 10000;
    const auto rows = run_sweep(spec);
    const std::string svg = render_svg(rows, spec);
    const auto start = svg.find("points=\"");
    REQUIRE(start != std::string::npos);
    const auto end = svg.find('"', start + 8);
    const std::string pts = svg.substr(start + 8, end - start - 8);
    CHECK(std::count(pts.begin(), pts.end(), ',') <= 2001);
}

TEST_CASE("dynamics config") {
    const char* text = R"([dynamics]
omega_ratio = 0.76
kappa0 = 0.4
epsilon = 5
max_time = 40

[output]
csv = traj.csv
)";
    const DynamicsRunSpec spec = parse_dynamics_config(text);
    CHECK(spec.omega_ratio == 0.76);
    CHECK(spec.kappa0 == 0.4);
    CHECK(spec.evolution.max_time == 40.0);
    CHECK(spec.csv_path == "traj.csv");
    CHECK(dynamics_omega_ratio(spec) == 0.76);

    const DynamicsRunSpec viaT = parse_dynamics_config(
        "[dynamics]\nt_unruh = 2.5\nkappa0 = 0\nepsilon = 5\n");
    CHECK(dynamics_omega_ratio(viaT) == doctest::Approx(std::tanh(1.0)));

    CHECK_THROWS_AS(parse_dynamics_config("[dynamics]\nkappa0 = 0\n"), ValidationError);
    CHECK_THROWS_AS(
        parse_dynamics_config("[dynamics]\nomega_ratio = 0.5\nt_unruh = 1\nkappa0 = 0\n"),
        ValidationError);
    CHECK_THROWS_AS(parse_dynamics_config("[dynamics]\nomega_ratio = 0.5\nkappa0 = 9\n"),
                    ValidationError);
}

TEST_CASE("random states hit the requested kappa0") {
    std::mt19937_64 rng(73);
    for (double target : {-2.9, -1.0, 0.0, 0.7, 1.0}) {
        const DensityMatrix rho = random_state_with_kappa0(target, rng);
        CHECK(kappa0_of(rho) == doctest::Approx(target).epsilon(1e-10));
    }
}
