#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stagnys/experiments.hpp"

namespace {

using namespace stagnys;

struct CommonOpts {
    std::string config_path;
    std::vector<int> n_override;
    double eps_override = 0.0;
    bool has_eps = false;
    double k_override = 0.0;
    bool has_k = false;
    std::string out_override;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON run configuration");
    cmd->add_option("--N", opts.n_override, "override N list")->delimiter(',');
    cmd->add_option("--eps", opts.eps_override, "override staggering eps")
        ->each([&](const std::string&) { opts.has_eps = true; });
    cmd->add_option("--k", opts.k_override, "override wavenumber")
        ->each([&](const std::string&) { opts.has_k = true; });
    cmd->add_option("--out", opts.out_override, "output CSV path");
}

RunConfig resolve(const CommonOpts& opts, ExperimentKind kind) {
    RunConfig config =
        opts.config_path.empty() ? default_config(kind) : load_config(opts.config_path);
    config.experiment = kind;
    if (!opts.n_override.empty()) config.n_list = opts.n_override;
    if (opts.has_eps) config.eps = opts.eps_override;
    if (opts.has_k) config.k = opts.k_override;
    if (!opts.out_override.empty()) config.out = opts.out_override;
    if (config.out.empty()) {
        switch (kind) {
            case ExperimentKind::Convergence: config.out = "convergence.csv"; break;
            case ExperimentKind::Richardson: config.out = "richardson.csv"; break;
            case ExperimentKind::SweepEps: config.out = "sweep_eps.csv"; break;
            case ExperimentKind::Cond: config.out = "cond.csv"; break;
        }
    }
    for (size_t r = 1; r < config.n_list.size(); ++r)
        if (config.n_list[r] <= config.n_list[r - 1])
            throw ConfigError("N list must be strictly increasing");
    return config;
}

int run_table(const RunConfig& config, bool richardson_mode) {
    ConvergenceTable table =
        richardson_mode ? run_richardson(config) : run_convergence(config);
    write_convergence_csv(config.out, table);
    write_sidecar(config.out, config);
    for (const auto& row : table.rows) {
        std::printf("N=%-5d %s=%.6e", row.n, table.error_kind.c_str(), row.error);
        if (row.ecr) std::printf("  ecr=%.4f", *row.ecr);
        std::printf("\n");
    }
    if (!table.failure.empty()) {
        std::cerr << "numerical failure: " << table.failure
                  << " (partial table written to " << config.out << ")\n";
        return 2;
    }
    std::printf("wrote %s\n", config.out.c_str());
    return 0;
}

int run_sweep(const RunConfig& config) {
    auto points = run_sweep_eps(config);
    write_sweep_csv(config.out, points);
    write_sidecar(config.out, config);
    size_t failed = 0;
    for (const auto& sp : points)
        if (!sp.ok) ++failed;
    std::printf("wrote %s (%zu eps values, %zu failed)\n", config.out.c_str(),
                points.size(), failed);
    return 0;
}

int run_cond_cmd(const RunConfig& config) {
    auto rows = run_cond(config);
    write_cond_csv(config.out, rows);
    write_sidecar(config.out, config);
    for (const auto& row : rows)
        std::printf("N=%-5d cond(VW)=%.6f cond(W)=%.6f\n", row.n, row.cond_vw,
                    row.cond_w);
    std::printf("wrote %s\n", config.out.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"staggered two-grid Nystrom solver for the 2D Helmholtz "
                 "hypersingular equation"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* convergence =
        app.add_subcommand("convergence", "error/ECR table (indirect or direct)");
    auto* richardson =
        app.add_subcommand("richardson", "Richardson-extrapolated potential errors");
    auto* sweep = app.add_subcommand("sweep-eps", "error as a function of eps at fixed N");
    auto* cond = app.add_subcommand("cond", "condition numbers of W and VW");
    for (auto* cmd : {convergence, richardson, sweep, cond}) add_common(cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (convergence->parsed())
            return run_table(resolve(opts, stagnys::ExperimentKind::Convergence), false);
        if (richardson->parsed())
            return run_table(resolve(opts, stagnys::ExperimentKind::Richardson), true);
        if (sweep->parsed()) return run_sweep(resolve(opts, stagnys::ExperimentKind::SweepEps));
        if (cond->parsed()) return run_cond_cmd(resolve(opts, stagnys::ExperimentKind::Cond));
    } catch (const stagnys::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
