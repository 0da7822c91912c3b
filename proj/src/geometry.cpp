#include "stagnys/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stagnys {

ParametricCurve::ParametricCurve(Evaluator position, Evaluator derivative)
    : position_(std::move(position)), derivative_(std::move(derivative)) {
    if (!position_ || !derivative_)
        throw std::invalid_argument("ParametricCurve: both evaluators are required");
}

ParametricCurve ellipse(const Vec2& center, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("ellipse: semiaxes must be positive");
    constexpr double two_pi = 2.0 * M_PI;
    ParametricCurve curve(
        [center, a, b](double t) -> Vec2 {
            return {center.x() + a * std::cos(two_pi * t),
                    center.y() + b * std::sin(two_pi * t)};
        },
        [a, b](double t) -> Vec2 {
            return {-two_pi * a * std::sin(two_pi * t),
                    two_pi * b * std::cos(two_pi * t)};
        });
    curve.kind_ = CurveKind::Ellipse;
    curve.center_ = center;
    curve.a_ = a;
    curve.b_ = b;
    return curve;
}

double reduce_eps(double eps) {
    if (!std::isfinite(eps))
        throw std::invalid_argument("eps must be finite");
    double r = eps - std::floor(eps);  // [0, 1)
    if (r > 0.5) r -= 1.0;             // (-1/2, 1/2]
    if (r == 0.0)
        throw std::invalid_argument(
            "integer eps leads to evaluations of the logarithmic kernels "
            "in their diagonal singularity");
    return r;
}

ScattererConfig::ScattererConfig(std::vector<ParametricCurve> curves_, double k_,
                                 std::vector<int> n_per_curve_, double eps_)
    : curves(std::move(curves_)), k(k_), n_per_curve(std::move(n_per_curve_)),
      eps(reduce_eps(eps_)) {
    if (!(k > 0.0)) throw std::invalid_argument("wavenumber k must be positive");
    if (n_per_curve.size() != curves.size())
        throw std::invalid_argument("one N per curve required");
    for (int n : n_per_curve)
        if (n < 4) throw std::invalid_argument("N must be at least 4");
}

void ScattererConfig::validate() const {
    if (curves.size() < 2) return;
    // sampled node sets
    std::vector<std::vector<Vec2>> pts(curves.size());
    double lo = std::numeric_limits<double>::max(), hi = -lo;
    for (size_t p = 0; p < curves.size(); ++p) {
        const int n = n_per_curve[p];
        pts[p].reserve(n);
        for (int j = 0; j < n; ++j) {
            Vec2 x = curves[p].position(double(j) / n);
            pts[p].push_back(x);
            lo = std::min({lo, x.x(), x.y()});
            hi = std::max({hi, x.x(), x.y()});
        }
    }
    const double threshold = 10.0 * std::numeric_limits<double>::epsilon() * (hi - lo);
    for (size_t p = 0; p < curves.size(); ++p)
        for (size_t q = p + 1; q < curves.size(); ++q)
            for (const Vec2& xp : pts[p])
                for (const Vec2& xq : pts[q])
                    if ((xp - xq).norm() <= threshold)
                        throw std::invalid_argument("curves are not pairwise disjoint");
}

} // namespace stagnys
