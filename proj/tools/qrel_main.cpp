#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrel/svg.hpp"
#include "qrel/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

void run_one_sweep(const qrel::SweepSpec& spec, const qrel::RunOptions& opts,
                   const std::string& out_dir) {
    const std::vector<qrel::CsvRow> rows = qrel::run_sweep(spec, opts);
    const std::filesystem::path dir(out_dir);
    const auto csv_path = (dir / spec.csv_path).string();
    write_file(csv_path, qrel::csv_text(rows, spec));
    std::cout << "wrote " << csv_path << " (" << rows.size() << " rows)\n";
    if (!spec.svg_path.empty()) {
        const auto svg_path = (dir / spec.svg_path).string();
        write_file(svg_path, qrel::render_svg(rows, spec));
        std::cout << "wrote " << svg_path << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qrel: distance-based quantum resources (coherence, discord, entanglement)\n"
        "for two-qubit states under Hawking and Unruh noise"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    int oracle_restarts = 0;
    int threads = 1;
    app.add_option("--seed", seed, "RNG seed for oracle restarts and random initial states")
        ->capture_default_str();
    app.add_option("--oracle-discord", oracle_restarts,
                   "replace the closed-form discord column with the variational oracle, "
                   "using this many random restarts (slow; default off)")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads for sweep grids")->capture_default_str();

    std::string config_path;
    auto* run_cmd = app.add_subcommand(
        "run",
        "execute a sweep config (sections [sweep] [fixed] [series] [output]; defaults: "
        "points=200, scale=linear, csv=sweep.csv, vacuum=hartle-hawking)");
    run_cmd->add_option("config", config_path, "config file")->required();

    std::string preset_name;
    std::string out_dir = ".";
    auto* preset_cmd = app.add_subcommand("preset", "run a built-in figure sweep");
    preset_cmd->add_option("name", preset_name, "one of fig2 fig3 fig4 fig5 fig67 fig89 fig1011")
        ->required();
    preset_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

    std::string dynamics_path;
    auto* dyn_cmd = app.add_subcommand(
        "dynamics",
        "integrate the two-detector master equation from a random initial state with the "
        "configured kappa0 and export the trajectory (sections [dynamics] [output])");
    dyn_cmd->add_option("config", dynamics_path, "config file")->required();

    CLI11_PARSE(app, argc, argv);

    qrel::RunOptions opts{seed, oracle_restarts, threads};
    try {
        if (*run_cmd) {
            run_one_sweep(qrel::parse_config(read_file(config_path)), opts, ".");
        } else if (*preset_cmd) {
            std::filesystem::create_directories(out_dir);
            for (const qrel::SweepSpec& spec : qrel::preset_sweeps(preset_name))
                run_one_sweep(spec, opts, out_dir);
        } else if (*dyn_cmd) {
            const qrel::DynamicsRunSpec spec =
                qrel::parse_dynamics_config(read_file(dynamics_path));
            const double ratio = qrel::dynamics_omega_ratio(spec);
            std::mt19937_64 rng(seed);
            const qrel::DensityMatrix rho0 = qrel::random_state_with_kappa0(spec.kappa0, rng);
            qrel::KossakowskiSpec k;
            k.gamma_plus = spec.gamma_plus;
            k.gamma_minus = ratio * spec.gamma_plus;
            k.gamma_zero = spec.gamma_zero;
            const qrel::EvolutionResult res =
                qrel::evolve(rho0, k, spec.epsilon, spec.evolution);
            std::ostringstream csv;
            qrel::write_trajectory_csv(csv, res.trajectory);
            write_file(spec.csv_path, csv.str());
            std::cout << "wrote " << spec.csv_path << " (" << res.trajectory.size()
                      << " samples, t=" << res.elapsed << ")\n";
            if (!res.converged) {
                std::cerr << "not converged: ||rhs||_F still "
                          << res.trajectory.back().rhs_norm << " at max_time\n";
                return kExitNumeric;
            }
        }
    } catch (const qrel::ParseError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const qrel::ValidationError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& ex) {
        std::cerr << "io error: " << ex.what() << "\n";
        return kExitIo;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
