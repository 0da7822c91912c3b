#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

namespace stagnys {

using Vec2 = Eigen::Vector2d;

enum class CurveKind { Ellipse, Custom };

// Smooth closed 1-periodic plane curve supplied with its analytic derivative.
// Parametrizations are counterclockwise, so the scaled normal (x2', -x1')
// points outward and carries the Jacobian factor |x'|.
class ParametricCurve {
public:
    using Evaluator = std::function<Vec2(double)>;

    ParametricCurve(Evaluator position, Evaluator derivative);

    Vec2 position(double t) const { return position_(t); }
    Vec2 derivative(double t) const { return derivative_(t); }
    Vec2 scaled_normal(double t) const {
        const Vec2 d = derivative_(t);
        return {d.y(), -d.x()};
    }

    CurveKind kind() const { return kind_; }
    const Vec2& center() const { return center_; }
    double semiaxis_a() const { return a_; }
    double semiaxis_b() const { return b_; }

private:
    Evaluator position_;
    Evaluator derivative_;
    CurveKind kind_ = CurveKind::Custom;
    Vec2 center_{0.0, 0.0};
    double a_ = 0.0, b_ = 0.0;

    friend ParametricCurve ellipse(const Vec2&, double, double);
};

// x(t) = center + (a cos 2 pi t, b sin 2 pi t).  Throws std::invalid_argument
// for nonpositive semiaxes.
ParametricCurve ellipse(const Vec2& center, double a, double b);

// Reduce eps modulo 1 into (-1/2, 1/2]; throws std::invalid_argument for
// integer eps (the kernels would be evaluated on the diagonal singularity).
double reduce_eps(double eps);

// Multi-curve scatterer: curves, wavenumber, per-curve N, staggering eps.
struct ScattererConfig {
    std::vector<ParametricCurve> curves;
    double k = 1.0;
    std::vector<int> n_per_curve;
    double eps = 1.0 / 6.0; // stored reduced

    ScattererConfig(std::vector<ParametricCurve> curves_, double k_,
                    std::vector<int> n_per_curve_, double eps_);

    // Pairwise disjointness via sampled nodes; throws std::invalid_argument.
    void validate() const;
};

} // namespace stagnys
