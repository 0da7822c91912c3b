#include "stagnys/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stagnys/specfun.hpp"

namespace stagnys {

DensitySolution split_solution(const ScattererConfig& config, const BlockSystem& sys,
                               const Eigen::VectorXcd& x) {
    if (x.size() != sys.total())
        throw std::invalid_argument("split_solution: size mismatch");
    DensitySolution sol;
    sol.k = config.k;
    for (size_t p = 0; p < config.curves.size(); ++p)
        sol.parts.push_back({config.curves[p], sys.grids[p],
                             x.segment(sys.offsets[p], sys.sizes[p])});
    return sol;
}

FieldSample evaluate_potential(const DensitySolution& sol, const Vec2& z) {
    FieldSample sample{z, 0.0, false};
    for (const auto& part : sol.parts) {
        const StaggeredGrid& g = part.grid;
        double min_dist = std::numeric_limits<double>::max();
        double max_speed = 0.0;
        cplx acc = 0.0;
        for (int j = 0; j < g.n; ++j) {
            const double t = g.t(j);
            const Vec2 x = part.curve.position(t);
            const Vec2 n = part.curve.scaled_normal(t);
            const double r = (z - x).norm();
            min_dist = std::min(min_dist, r);
            max_speed = std::max(max_speed, n.norm());
            if (r <= 1e-12 * (z.norm() + x.norm() + 1.0))
                throw std::domain_error("evaluate_potential: point on the boundary");
            acc += hankel1_1(sol.k * r) * ((z - x).dot(n) / r) * part.values[j];
        }
        sample.value += cplx(0.0, 0.25 * sol.k) * g.h * acc;
        if (min_dist < 5.0 * g.h * max_speed) sample.near_boundary = true;
    }
    return sample;
}

std::vector<FieldSample> evaluate_field(const DensitySolution& sol,
                                        const std::vector<Vec2>& points) {
    std::vector<FieldSample> field;
    field.reserve(points.size());
    for (const Vec2& z : points) field.push_back(evaluate_potential(sol, z));
    return field;
}

std::vector<FieldSample> richardson(const std::vector<FieldSample>& u_h,
                                    const std::vector<FieldSample>& u_half) {
    if (u_h.size() != u_half.size())
        throw std::invalid_argument("richardson: mismatched point sets");
    std::vector<FieldSample> out;
    out.reserve(u_h.size());
    for (size_t i = 0; i < u_h.size(); ++i) {
        if (u_h[i].z != u_half[i].z)
            throw std::invalid_argument("richardson: mismatched point sets");
        out.push_back({u_h[i].z,
                       (4.0 / 3.0) * u_half[i].value - (1.0 / 3.0) * u_h[i].value,
                       u_h[i].near_boundary || u_half[i].near_boundary});
    }
    return out;
}

double observation_error(const std::vector<FieldSample>& field,
                         const std::function<cplx(const Vec2&)>& exact) {
    double err = 0.0;
    for (const auto& s : field) err = std::max(err, std::abs(exact(s.z) - s.value));
    return err;
}

double boundary_error(const DensitySolution& sol,
                      const std::function<cplx(int, double)>& exact_trace) {
    double err = 0.0;
    for (size_t p = 0; p < sol.parts.size(); ++p) {
        const auto& part = sol.parts[p];
        for (int j = 0; j < part.grid.n; ++j)
            err = std::max(err,
                           std::abs(part.values[j] - exact_trace(int(p), part.grid.t(j))));
    }
    return err;
}

cplx postprocess_functional(const DensitySolution::Part& part,
                            const std::function<cplx(double)>& v) {
    cplx acc = 0.0;
    for (int j = 0; j < part.grid.n; ++j) acc += part.values[j] * v(part.grid.t(j));
    return part.grid.h * acc;
}

} // namespace stagnys
