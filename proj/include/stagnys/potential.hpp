#pragma once

#include <functional>
#include <vector>

#include "stagnys/assembly.hpp"

namespace stagnys {

// Nodal density values phi_j attached to the t_j grid of each curve.
struct DensitySolution {
    struct Part {
        ParametricCurve curve;
        StaggeredGrid grid;
        Eigen::VectorXcd values;
    };
    std::vector<Part> parts;
    double k = 1.0;
};

// Split a concatenated solution vector back into per-curve nodal values.
DensitySolution split_solution(const ScattererConfig& config, const BlockSystem& sys,
                               const Eigen::VectorXcd& x);

struct FieldSample {
    Vec2 z;
    cplx value;
    bool near_boundary = false; // dist < 5 h max|x'|: midpoint potential degrades
};

// Fully discrete double-layer potential
// U_h(z) = sum_curves (i k/4) h sum_j H1(k|z-x(t_j)|) ((z-x(t_j)).n(t_j)/|z-x(t_j)|) phi_j.
// Throws std::domain_error if z lies on a curve.
FieldSample evaluate_potential(const DensitySolution& sol, const Vec2& z);

std::vector<FieldSample> evaluate_field(const DensitySolution& sol,
                                        const std::vector<Vec2>& points);

// U* = (4/3) U_{h/2} - (1/3) U_h pointwise; throws std::invalid_argument on
// mismatched point sets.
std::vector<FieldSample> richardson(const std::vector<FieldSample>& u_h,
                                    const std::vector<FieldSample>& u_half);

double observation_error(const std::vector<FieldSample>& field,
                         const std::function<cplx(const Vec2&)>& exact);

// max over curves and j of |phi_j - phi(t_j)|
double boundary_error(const DensitySolution& sol,
                      const std::function<cplx(int, double)>& exact_trace);

// h sum_j phi_j v(t_j)
cplx postprocess_functional(const DensitySolution::Part& part,
                            const std::function<cplx(double)>& v);

} // namespace stagnys
