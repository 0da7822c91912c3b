#pragma once

#include <Eigen/Dense>
#include <vector>

#include "stagnys/geometry.hpp"
#include "stagnys/kernels.hpp"

namespace stagnys {

// The four staggered node families on [0,1): s_i = (i-1/2)h, t_i = i h,
// s_{i+eps} = (i+eps-1/2)h, t_{i+eps} = (i+eps)h.
struct StaggeredGrid {
    int n = 0;
    double h = 0.0;
    double eps = 0.0; // reduced to (-1/2, 1/2] \ {0}

    double s(int i) const { return (i - 0.5) * h; }
    double t(int i) const { return i * h; }
    double s_eps(int i) const { return (i + eps - 0.5) * h; }
    double t_eps(int i) const { return (i + eps) * h; }
};

// Throws std::invalid_argument for N < 4 or integer eps.
StaggeredGrid build_grid(int n, double eps);

enum class Formulation { Indirect, Direct };

// Dense block system: matrix blocks ordered by curve, concatenated rhs.
struct BlockSystem {
    std::vector<int> sizes;
    std::vector<int> offsets; // offsets[p] = start row/col of curve p
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
    std::vector<StaggeredGrid> grids;

    Eigen::Index total() const { return matrix.rows(); }
    auto block(int p, int q) { return matrix.block(offsets[p], offsets[q], sizes[p], sizes[q]); }
    auto block(int p, int q) const {
        return matrix.block(offsets[p], offsets[q], sizes[p], sizes[q]);
    }
};

// One N x N block of the staggered Nystrom matrix: the 5-term stencil
//   V1(s_{i+1+eps}, s_{j+1}) - V1(s_{i+eps}, s_{j+1})
// - V1(s_{i+1+eps}, s_j)     + V1(s_{i+eps}, s_j)     + hp hq V2(t_{i+eps}, t_j)
// with observation arguments on curve p and source arguments on curve q.
Eigen::MatrixXcd assemble_w_block(const ParametricCurve& p, const ParametricCurve& q,
                                  const StaggeredGrid& grid_p, const StaggeredGrid& grid_q,
                                  double k);

// Full block matrix (no right-hand side).
Eigen::MatrixXcd assemble_w(const ScattererConfig& config);

// Matrix plus right-hand side.  Indirect: rhs_i = -h g~(t_{i+eps}) where
// g~ is the scaled Neumann trace of the point-source field at z0.
// Direct: rhs_i = h [ -1/2 g~(t_{i+eps})
//                     + sum_q h_q sum_j adjoint_dlp(t_{i+eps}; t_j) g~(t_j) ],
// the exterior jump relations fix the two signs; a wrong choice destroys
// convergence (exercised by the test suite).
BlockSystem assemble_system(const ScattererConfig& config, Formulation formulation,
                            const Vec2& z0);

// Calderon preconditioner matrix, block (p,q) entry (i,j) =
// H0^(1)(k |x_p(t_i) - x_q(t_{j+eps})|); no i/4 or h factor.
Eigen::MatrixXcd assemble_calderon_v(const ScattererConfig& config);

// Cell quadrature defects E_ij = int_{Q_ij} V2 ds dt - h^2 V2(t_{i+eps}, t_j)
// against a tensor Gauss reference on Q_ij = (s_{i+eps}, s_{i+1+eps}) x (s_j, s_{j+1}).
struct QuadratureErrorMatrix {
    Eigen::MatrixXcd entries;
    int reference_order = 16;
};

QuadratureErrorMatrix quadrature_error_matrix(const ParametricCurve& curve,
                                              const StaggeredGrid& grid, double k,
                                              int reference_order = 16);

} // namespace stagnys
