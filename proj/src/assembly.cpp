#include "stagnys/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "stagnys/specfun.hpp"

namespace stagnys {

namespace {

struct CurveNodes {
    std::vector<Vec2> x_s;      // x(s_j), j = 0..N-1
    std::vector<Vec2> n_s;
    std::vector<Vec2> x_s_eps;  // x(s_{j+eps})
    std::vector<Vec2> n_s_eps;
    std::vector<Vec2> x_t;      // x(t_j)
    std::vector<Vec2> n_t;      // n(t_j)
    std::vector<Vec2> x_t_eps;  // x(t_{j+eps})
    std::vector<Vec2> n_t_eps;  // n(t_{j+eps})
};

CurveNodes precompute_nodes(const ParametricCurve& c, const StaggeredGrid& g) {
    CurveNodes nodes;
    nodes.x_s.resize(g.n);
    nodes.n_s.resize(g.n);
    nodes.x_s_eps.resize(g.n);
    nodes.n_s_eps.resize(g.n);
    nodes.x_t.resize(g.n);
    nodes.n_t.resize(g.n);
    nodes.x_t_eps.resize(g.n);
    nodes.n_t_eps.resize(g.n);
    for (int j = 0; j < g.n; ++j) {
        nodes.x_s[j] = c.position(g.s(j));
        nodes.n_s[j] = c.scaled_normal(g.s(j));
        nodes.x_s_eps[j] = c.position(g.s_eps(j));
        nodes.n_s_eps[j] = c.scaled_normal(g.s_eps(j));
        nodes.x_t[j] = c.position(g.t(j));
        nodes.n_t[j] = c.scaled_normal(g.t(j));
        nodes.x_t_eps[j] = c.position(g.t_eps(j));
        nodes.n_t_eps[j] = c.scaled_normal(g.t_eps(j));
    }
    return nodes;
}

Eigen::MatrixXcd w_block_from_nodes(const CurveNodes& p, const CurveNodes& q,
                                    double hp, double hq, double k) {
    const int np = int(p.x_s_eps.size());
    const int nq = int(q.x_s.size());
    // V1 at (s_{i+eps}, s_j); 1-periodicity folds index i+1 (j+1) back to 0
    Eigen::MatrixXcd a1(np, nq);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nq; ++j)
            a1(i, j) = kernel_core::v1(k, p.x_s_eps[i], q.x_s[j]);

    const double hh = hp * hq;
    Eigen::MatrixXcd w(np, nq);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < np; ++i) {
        const int i1 = (i + 1) % np;
        for (int j = 0; j < nq; ++j) {
            const int j1 = (j + 1) % nq;
            w(i, j) = a1(i1, j1) - a1(i, j1) - a1(i1, j) + a1(i, j)
                    + hh * kernel_core::v2(k, p.x_t_eps[i], p.n_t_eps[i],
                                           q.x_t[j], q.n_t[j]);
        }
    }
    return w;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double xi = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = xi;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * xi * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            const double dx = p1 / dp;
            xi -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double wk = 2.0 / ((1.0 - xi * xi) * dp * dp);
        x[k] = -xi;
        w[k] = wk;
        x[n - 1 - k] = xi;
        w[n - 1 - k] = wk;
    }
}

} // namespace

StaggeredGrid build_grid(int n, double eps) {
    if (n < 4) throw std::invalid_argument("build_grid: N must be at least 4");
    StaggeredGrid g;
    g.n = n;
    g.h = 1.0 / n;
    g.eps = reduce_eps(eps);
    return g;
}

Eigen::MatrixXcd assemble_w_block(const ParametricCurve& p, const ParametricCurve& q,
                                  const StaggeredGrid& grid_p, const StaggeredGrid& grid_q,
                                  double k) {
    if (grid_p.eps != grid_q.eps)
        throw std::invalid_argument("assemble_w_block: grids must share eps");
    const CurveNodes np = precompute_nodes(p, grid_p);
    const CurveNodes nq = precompute_nodes(q, grid_q);
    return w_block_from_nodes(np, nq, grid_p.h, grid_q.h, k);
}

Eigen::MatrixXcd assemble_w(const ScattererConfig& config) {
    const size_t ncurves = config.curves.size();
    std::vector<StaggeredGrid> grids(ncurves);
    std::vector<CurveNodes> nodes(ncurves);
    int total = 0;
    std::vector<int> offsets(ncurves);
    for (size_t p = 0; p < ncurves; ++p) {
        grids[p] = build_grid(config.n_per_curve[p], config.eps);
        nodes[p] = precompute_nodes(config.curves[p], grids[p]);
        offsets[p] = total;
        total += grids[p].n;
    }
    Eigen::MatrixXcd w(total, total);
    for (size_t p = 0; p < ncurves; ++p)
        for (size_t q = 0; q < ncurves; ++q)
            w.block(offsets[p], offsets[q], grids[p].n, grids[q].n) =
                w_block_from_nodes(nodes[p], nodes[q], grids[p].h, grids[q].h, config.k);
    return w;
}

BlockSystem assemble_system(const ScattererConfig& config, Formulation formulation,
                            const Vec2& z0) {
    config.validate();
    const size_t ncurves = config.curves.size();
    BlockSystem sys;
    sys.sizes.resize(ncurves);
    sys.offsets.resize(ncurves);
    sys.grids.resize(ncurves);
    std::vector<CurveNodes> nodes(ncurves);
    int total = 0;
    for (size_t p = 0; p < ncurves; ++p) {
        sys.grids[p] = build_grid(config.n_per_curve[p], config.eps);
        nodes[p] = precompute_nodes(config.curves[p], sys.grids[p]);
        sys.sizes[p] = sys.grids[p].n;
        sys.offsets[p] = total;
        total += sys.grids[p].n;
    }
    sys.matrix.resize(total, total);
    for (size_t p = 0; p < ncurves; ++p)
        for (size_t q = 0; q < ncurves; ++q)
            sys.block(int(p), int(q)) = w_block_from_nodes(
                nodes[p], nodes[q], sys.grids[p].h, sys.grids[q].h, config.k);

    sys.rhs.resize(total);
    if (formulation == Formulation::Indirect) {
        for (size_t p = 0; p < ncurves; ++p) {
            const StaggeredGrid& g = sys.grids[p];
            for (int i = 0; i < g.n; ++i)
                sys.rhs[sys.offsets[p] + i] =
                    -g.h * point_source_neumann(config.curves[p], g.t_eps(i), z0, config.k);
        }
    } else {
        // scaled Neumann data at the t_j nodes of every source curve
        std::vector<Eigen::VectorXcd> gt(ncurves);
        for (size_t q = 0; q < ncurves; ++q) {
            const StaggeredGrid& g = sys.grids[q];
            gt[q].resize(g.n);
            for (int j = 0; j < g.n; ++j)
                gt[q][j] = point_source_neumann(config.curves[q], g.t(j), z0, config.k);
        }
        for (size_t p = 0; p < ncurves; ++p) {
            const StaggeredGrid& gp = sys.grids[p];
            for (int i = 0; i < gp.n; ++i) {
                const double ti = gp.t_eps(i);
                const cplx g_here =
                    point_source_neumann(config.curves[p], ti, z0, config.k);
                cplx ksum = 0.0;
                const Vec2 xi = nodes[p].x_t_eps[i];
                const Vec2 ni = nodes[p].n_t_eps[i];
                for (size_t q = 0; q < ncurves; ++q) {
                    const StaggeredGrid& gq = sys.grids[q];
                    cplx acc = 0.0;
                    for (int j = 0; j < gq.n; ++j)
                        acc += kernel_core::adjoint_dlp(config.k, xi, ni, nodes[q].x_t[j])
                             * gt[q][j];
                    ksum += gq.h * acc;
                }
                sys.rhs[sys.offsets[p] + i] = gp.h * (-0.5 * g_here + ksum);
            }
        }
    }
    return sys;
}

Eigen::MatrixXcd assemble_calderon_v(const ScattererConfig& config) {
    const size_t ncurves = config.curves.size();
    std::vector<StaggeredGrid> grids(ncurves);
    std::vector<CurveNodes> nodes(ncurves);
    int total = 0;
    std::vector<int> offsets(ncurves);
    for (size_t p = 0; p < ncurves; ++p) {
        grids[p] = build_grid(config.n_per_curve[p], config.eps);
        nodes[p] = precompute_nodes(config.curves[p], grids[p]);
        offsets[p] = total;
        total += grids[p].n;
    }
    Eigen::MatrixXcd v(total, total);
    for (size_t p = 0; p < ncurves; ++p)
        for (size_t q = 0; q < ncurves; ++q) {
            auto blk = v.block(offsets[p], offsets[q], grids[p].n, grids[q].n);
            for (int i = 0; i < grids[p].n; ++i)
                for (int j = 0; j < grids[q].n; ++j) {
                    const double r = (nodes[p].x_t[i] - nodes[q].x_t_eps[j]).norm();
                    if (r == 0.0)
                        throw std::invalid_argument("calderon matrix: coincident nodes");
                    blk(i, j) = hankel1_0(config.k * r);
                }
        }
    return v;
}

QuadratureErrorMatrix quadrature_error_matrix(const ParametricCurve& curve,
                                              const StaggeredGrid& grid, double k,
                                              int reference_order) {
    if (reference_order < 16)
        throw std::invalid_argument("reference order must be at least 16");
    std::vector<double> gx, gw;
    gauss_rule(reference_order, gx, gw);
    const int n = grid.n;
    const double h = grid.h;

    QuadratureErrorMatrix result;
    result.reference_order = reference_order;
    result.entries.resize(n, n);

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        // source points of the outer (s) direction for cell row i
        std::vector<Vec2> xs(reference_order), ns(reference_order);
        const double s_lo = grid.s_eps(i);
        for (int a = 0; a < reference_order; ++a) {
            const double s = s_lo + 0.5 * h * (1.0 + gx[a]);
            xs[a] = curve.position(s);
            ns[a] = curve.scaled_normal(s);
        }
        for (int j = 0; j < n; ++j) {
            const double t_lo = grid.s(j);
            cplx integral = 0.0;
            for (int b = 0; b < reference_order; ++b) {
                const double t = t_lo + 0.5 * h * (1.0 + gx[b]);
                const Vec2 xt = curve.position(t);
                const Vec2 nt = curve.scaled_normal(t);
                cplx inner = 0.0;
                for (int a = 0; a < reference_order; ++a)
                    inner += gw[a] * kernel_core::v2(k, xs[a], ns[a], xt, nt);
                integral += gw[b] * inner;
            }
            integral *= 0.25 * h * h; // jacobian of both [-1,1] -> length-h maps
            const cplx mid = kernel_core::v2(k, curve.position(grid.t_eps(i)),
                                             curve.scaled_normal(grid.t_eps(i)),
                                             curve.position(grid.t(j)),
                                             curve.scaled_normal(grid.t(j)));
            result.entries(i, j) = integral - h * h * mid;
        }
    }
    return result;
}

} // namespace stagnys
