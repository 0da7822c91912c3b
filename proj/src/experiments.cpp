#include "stagnys/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "stagnys/dense_solver.hpp"

namespace stagnys {

namespace {

std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10e", v);
    return buf;
}

std::string fmt_ecr(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

cplx exact_field(const RunConfig& config, const Vec2& z) {
    return point_source(z, config.source, config.k);
}

double table_error(const RunConfig& config, const DensitySolution& sol) {
    if (config.formulation == Formulation::Indirect) {
        std::vector<Vec2> pts = config.observation_points;
        auto field = evaluate_field(sol, pts);
        return observation_error(field,
                                 [&](const Vec2& z) { return exact_field(config, z); });
    }
    // direct: the unknown is the parametrized trace U(x_p(t))
    return boundary_error(sol, [&](int p, double t) {
        return exact_field(config, sol.parts[size_t(p)].curve.position(t));
    });
}

} // namespace

RunConfig default_config(ExperimentKind kind) {
    RunConfig config;
    config.experiment = kind;
    config.curves = {{"ellipse", {0.0, 0.0}, 1.0, 2.0}, {"ellipse", {4.0, 5.0}, 2.0, 1.0}};
    config.k = 1.0;
    config.eps = 1.0 / 6.0;
    config.source = {0.1, 0.2};
    config.observation_points = {{-4.0, -4.0}, {-5.0, -5.5}, {-6.0, -7.0},
                                 {7.0, 7.6},   {-6.8, -6.0}};
    switch (kind) {
        case ExperimentKind::Convergence:
        case ExperimentKind::Cond:
            config.n_list = {10, 20, 40, 80, 160, 320, 640};
            break;
        case ExperimentKind::Richardson:
            config.n_list = {10, 20, 40, 80, 160, 320};
            break;
        case ExperimentKind::SweepEps:
            config.n_list = {80};
            break;
    }
    return config;
}

std::vector<std::optional<double>> ecr(const std::vector<double>& errors) {
    std::vector<std::optional<double>> out(errors.size());
    for (size_t r = 1; r < errors.size(); ++r)
        if (errors[r - 1] > 0.0 && errors[r] > 0.0)
            out[r] = std::log2(errors[r - 1] / errors[r]);
    return out;
}

ScattererConfig make_scatterer(const RunConfig& config, int n) {
    std::vector<ParametricCurve> curves;
    for (const CurveSpec& spec : config.curves) {
        if (spec.kind != "ellipse")
            throw ConfigError("unsupported curve kind: " + spec.kind);
        curves.push_back(ellipse(spec.center, spec.a, spec.b));
    }
    std::vector<int> n_per_curve(curves.size(), n);
    return {std::move(curves), config.k, std::move(n_per_curve), config.eps};
}

DensitySolution solve_once(const RunConfig& config, int n) {
    ScattererConfig sc = make_scatterer(config, n);
    BlockSystem sys = assemble_system(sc, config.formulation, config.source);
    Eigen::VectorXcd x = lu_solve(sys.matrix, sys.rhs);
    return split_solution(sc, sys, x);
}

ConvergenceTable run_convergence(const RunConfig& config) {
    ConvergenceTable table;
    table.eps = reduce_eps(config.eps);
    table.formulation = config.formulation;
    table.error_kind =
        config.formulation == Formulation::Indirect ? "observation" : "boundary";
    std::vector<double> errors;
    for (int n : config.n_list) {
        try {
            DensitySolution sol = solve_once(config, n);
            errors.push_back(table_error(config, sol));
        } catch (const std::exception& e) {
            table.failure = "N=" + std::to_string(n) + ": " + e.what();
            break;
        }
        table.rows.push_back({n, errors.back(), std::nullopt});
    }
    auto rates = ecr(errors);
    for (size_t r = 0; r < table.rows.size(); ++r) table.rows[r].ecr = rates[r];
    return table;
}

ConvergenceTable run_richardson(const RunConfig& config) {
    ConvergenceTable table;
    table.eps = reduce_eps(config.eps);
    table.formulation = Formulation::Indirect;
    table.error_kind = "observation";
    if (std::fabs(std::fabs(table.eps) - 1.0 / 6.0) > 1e-12)
        std::cerr << "warning: richardson extrapolation assumes the superconvergent "
                     "staggering eps = +-1/6 (got "
                  << table.eps << ")\n";
    RunConfig base = config;
    base.formulation = Formulation::Indirect;
    std::vector<double> errors;
    for (int n : config.n_list) {
        try {
            // row N: h-grid N, refined h/2-grid 2N
            DensitySolution coarse = solve_once(base, n);
            DensitySolution fine = solve_once(base, 2 * n);
            auto u_h = evaluate_field(coarse, config.observation_points);
            auto u_half = evaluate_field(fine, config.observation_points);
            auto u_star = richardson(u_h, u_half);
            errors.push_back(observation_error(
                u_star, [&](const Vec2& z) { return exact_field(config, z); }));
        } catch (const std::exception& e) {
            table.failure = "N=" + std::to_string(n) + ": " + e.what();
            break;
        }
        table.rows.push_back({n, errors.back(), std::nullopt});
    }
    auto rates = ecr(errors);
    for (size_t r = 0; r < table.rows.size(); ++r) table.rows[r].ecr = rates[r];
    return table;
}

std::vector<SweepPoint> run_sweep_eps(const RunConfig& config) {
    if (config.n_list.empty()) throw ConfigError("sweep-eps: N_list must not be empty");
    const int n = config.n_list.front();
    std::vector<SweepPoint> out;
    const int steps = int(std::llround((config.sweep_hi - config.sweep_lo) / config.sweep_step));
    for (int s = 0; s <= steps; ++s) {
        const double eps = config.sweep_lo + s * config.sweep_step;
        const double frac = eps - std::floor(eps);
        if (std::min(frac, 1.0 - frac) < 0.02 - 1e-12) continue; // guard band
        if (std::fabs(reduce_eps(eps)) == 0.5)
            std::cerr << "note: eps = 1/2 lies outside the theory but is "
                         "numerically well behaved\n";
        RunConfig point = config;
        point.eps = eps;
        point.formulation = Formulation::Indirect;
        SweepPoint sp{eps, 0.0, true};
        try {
            DensitySolution sol = solve_once(point, n);
            sp.error = table_error(point, sol);
        } catch (const std::exception&) {
            sp.ok = false;
        }
        out.push_back(sp);
    }
    return out;
}

std::vector<CondRow> run_cond(const RunConfig& config) {
    std::vector<CondRow> out;
    for (int n : config.n_list) {
        ScattererConfig sc = make_scatterer(config, n);
        const Eigen::MatrixXcd w = assemble_w(sc);
        const Eigen::MatrixXcd v = assemble_calderon_v(sc);
        const Eigen::MatrixXcd vw = v * w;
        out.push_back({n, cond2(vw).value, cond2(w).value});
    }
    return out;
}

RunConfig parse_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    try {
        RunConfig config = default_config(ExperimentKind::Convergence);
        if (j.contains("experiment")) {
            const std::string kind = j["experiment"];
            if (kind == "convergence") config.experiment = ExperimentKind::Convergence;
            else if (kind == "richardson") config.experiment = ExperimentKind::Richardson;
            else if (kind == "sweep-eps") config.experiment = ExperimentKind::SweepEps;
            else if (kind == "cond") config.experiment = ExperimentKind::Cond;
            else throw ConfigError("unknown experiment: " + kind);
            // refresh experiment-dependent defaults before applying overrides
            RunConfig defaults = default_config(config.experiment);
            config.n_list = defaults.n_list;
        }
        if (j.contains("curves")) {
            config.curves.clear();
            for (const auto& jc : j["curves"]) {
                CurveSpec spec;
                spec.kind = jc.value("kind", "ellipse");
                if (jc.contains("center"))
                    spec.center = Vec2(jc["center"][0].get<double>(), jc["center"][1].get<double>());
                if (jc.contains("semiaxes")) {
                    spec.a = jc["semiaxes"][0];
                    spec.b = jc["semiaxes"][1];
                }
                config.curves.push_back(spec);
            }
        }
        if (j.contains("k")) config.k = j["k"];
        if (j.contains("eps")) config.eps = j["eps"];
        if (j.contains("N_list")) config.n_list = j["N_list"].get<std::vector<int>>();
        if (j.contains("formulation")) {
            const std::string f = j["formulation"];
            if (f == "indirect") config.formulation = Formulation::Indirect;
            else if (f == "direct") config.formulation = Formulation::Direct;
            else throw ConfigError("unknown formulation: " + f);
        }
        if (j.contains("source")) config.source = Vec2(j["source"][0].get<double>(), j["source"][1].get<double>());
        if (j.contains("observation_points")) {
            config.observation_points.clear();
            for (const auto& jp : j["observation_points"])
                config.observation_points.push_back(Vec2(jp[0].get<double>(), jp[1].get<double>()));
        }
        if (j.contains("out")) config.out = j["out"];

        if (config.curves.empty()) throw ConfigError("at least one curve required");
        if (config.n_list.empty()) throw ConfigError("N_list must not be empty");
        for (size_t r = 1; r < config.n_list.size(); ++r)
            if (config.n_list[r] <= config.n_list[r - 1])
                throw ConfigError("N_list must be strictly increasing");
        return config;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const RunConfig& config) {
    nlohmann::json j;
    switch (config.experiment) {
        case ExperimentKind::Convergence: j["experiment"] = "convergence"; break;
        case ExperimentKind::Richardson: j["experiment"] = "richardson"; break;
        case ExperimentKind::SweepEps: j["experiment"] = "sweep-eps"; break;
        case ExperimentKind::Cond: j["experiment"] = "cond"; break;
    }
    j["formulation"] =
        config.formulation == Formulation::Indirect ? "indirect" : "direct";
    j["k"] = config.k;
    j["eps"] = config.eps;
    j["N_list"] = config.n_list;
    j["source"] = {config.source.x(), config.source.y()};
    j["observation_points"] = nlohmann::json::array();
    for (const Vec2& z : config.observation_points)
        j["observation_points"].push_back({z.x(), z.y()});
    j["curves"] = nlohmann::json::array();
    for (const CurveSpec& spec : config.curves)
        j["curves"].push_back({{"kind", spec.kind},
                               {"center", {spec.center.x(), spec.center.y()}},
                               {"semiaxes", {spec.a, spec.b}}});
    if (config.experiment == ExperimentKind::SweepEps)
        j["sweep"] = {{"lo", config.sweep_lo},
                      {"hi", config.sweep_hi},
                      {"step", config.sweep_step}};
    if (!config.out.empty()) j["out"] = config.out;
    return j.dump(2);
}

void write_convergence_csv(const std::string& path, const ConvergenceTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "N,error,ecr\n";
    for (const auto& row : table.rows) {
        out << row.n << ',' << fmt_sci(row.error) << ',';
        if (row.ecr) out << fmt_ecr(*row.ecr);
        out << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& points) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "epsilon,error\n";
    for (const auto& sp : points) {
        if (!sp.ok) continue; // failed solves are recorded as missing rows
        out << fmt_sci(sp.eps) << ',' << fmt_sci(sp.error) << '\n';
    }
}

void write_cond_csv(const std::string& path, const std::vector<CondRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "N,cond_vw,cond_w\n";
    for (const auto& row : rows)
        out << row.n << ',' << fmt_sci(row.cond_vw) << ',' << fmt_sci(row.cond_w) << '\n';
}

void write_sidecar(const std::string& csv_path, const RunConfig& config) {
    std::ofstream out(csv_path + ".json");
    if (!out) throw std::runtime_error("cannot write " + csv_path + ".json");
    out << config_to_json(config) << '\n';
}

} // namespace stagnys
