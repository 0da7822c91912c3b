#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stagnys/assembly.hpp"
#include "stagnys/potential.hpp"

namespace stagnys {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Convergence, Richardson, SweepEps, Cond };

struct CurveSpec {
    std::string kind = "ellipse";
    Vec2 center{0.0, 0.0};
    double a = 1.0;
    double b = 1.0;
};

struct RunConfig {
    std::vector<CurveSpec> curves;
    double k = 1.0;
    double eps = 1.0 / 6.0;
    std::vector<int> n_list;
    Formulation formulation = Formulation::Indirect;
    Vec2 source{0.1, 0.2};
    std::vector<Vec2> observation_points;
    ExperimentKind experiment = ExperimentKind::Convergence;
    std::string out;

    // sweep grid; the guard band |eps mod 1| >= 0.02 keeps runs finite while
    // preserving the divergence trend toward integer eps
    double sweep_lo = 0.02;
    double sweep_hi = 0.98;
    double sweep_step = 0.005;
};

// The paper-reproduction defaults: two ellipses (unit/2 at the origin, 2/1 at
// (4,5)), k = 1, source (0.1, 0.2), the five printed observation points.
RunConfig default_config(ExperimentKind kind);

struct ConvergenceRow {
    int n = 0;
    double error = 0.0;
    std::optional<double> ecr;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    double eps = 0.0;
    Formulation formulation = Formulation::Indirect;
    std::string error_kind;   // "observation" or "boundary"
    std::string failure;      // nonempty: aborted at some N, rows are partial
};

struct SweepPoint {
    double eps = 0.0;
    double error = 0.0;
    bool ok = true;
};

struct CondRow {
    int n = 0;
    double cond_vw = 0.0;
    double cond_w = 0.0;
};

// ecr_r = log2(e_{r-1}/e_r); first entry and entries after nonpositive
// errors are absent.
std::vector<std::optional<double>> ecr(const std::vector<double>& errors);

ScattererConfig make_scatterer(const RunConfig& config, int n);

// assemble + solve at one N
DensitySolution solve_once(const RunConfig& config, int n);

ConvergenceTable run_convergence(const RunConfig& config);
ConvergenceTable run_richardson(const RunConfig& config);
std::vector<SweepPoint> run_sweep_eps(const RunConfig& config);
std::vector<CondRow> run_cond(const RunConfig& config);

// config file I/O (JSON); see README for the schema
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
std::string config_to_json(const RunConfig& config);

void write_convergence_csv(const std::string& path, const ConvergenceTable& table);
void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& points);
void write_cond_csv(const std::string& path, const std::vector<CondRow>& rows);
// provenance sidecar <path>.json with the fully resolved config
void write_sidecar(const std::string& csv_path, const RunConfig& config);

} // namespace stagnys
