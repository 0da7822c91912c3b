#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "stagnys/specfun.hpp"
#include "support/hankel_oracle.hpp"

using namespace stagnys;
using cplxd = std::complex<double>;

namespace {

// published 16-digit table values
struct TableEntry {
    int nu;
    double x, j, y;
};
constexpr TableEntry kTable[] = {
    {0, 1.0, 0.7651976865579666, 0.08825696421567696},
    {1, 1.0, 0.4400505857449335, -0.7812128213002887},
    {0, 2.0, 0.2238907791412357, 0.5103756726497451},
    {1, 2.0, 0.5767248077568734, -0.1070324315409375},
};

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> xs;
    xs.reserve(count);
    for (int i = 0; i < count; ++i)
        xs.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (count - 1)));
    return xs;
}

} // namespace

TEST_CASE("quadrature oracle reproduces published table values") {
    for (const auto& e : kTable) {
        auto h = oracle::hankel1(e.nu, e.x);
        CHECK(std::fabs(h.real() - e.j) <= 1e-15 * std::fabs(e.j));
        CHECK(std::fabs(h.imag() - e.y) <= 1e-15 * std::fabs(e.y));
    }
}

TEST_CASE("quadrature oracle satisfies the Wronskian in double-double") {
    for (double x : {1e-6, 1e-3, 0.5, 1.0, 17.9, 18.1, 321.0, 1999.0}) {
        auto h0 = oracle::hankel1_dd(0, x);
        auto h1 = oracle::hankel1_dd(1, x);
        using stagnys::dd::Real;
        Real w = h1.re * h0.im - h0.re * h1.im; // J1 Y0 - J0 Y1
        Real target = Real(2.0) / (stagnys::dd::pi() * Real(x));
        CHECK(std::fabs((w - target).value()) <= 1e-26 * target.value());
    }
}

TEST_CASE("hankel values match the frozen table entries") {
    auto h0 = hankel1_0(1.0);
    CHECK(h0.real() == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(h0.imag() == doctest::Approx(0.0882569642156770).epsilon(1e-13));
    auto h02 = hankel1_0(2.0);
    CHECK(h02.real() == doctest::Approx(0.2238907791412357).epsilon(1e-14));
    CHECK(h02.imag() == doctest::Approx(0.5103756726497451).epsilon(1e-14));
    auto h1 = hankel1_1(1.0);
    CHECK(h1.real() == doctest::Approx(0.4400505857449335).epsilon(1e-14));
    CHECK(h1.imag() == doctest::Approx(-0.7812128213002887).epsilon(1e-14));
}

TEST_CASE("hankel accuracy <= 1e-13 relative against the oracle on (0, 2000]") {
    auto xs = log_spaced(1e-6, 2000.0, 400);
    for (double x = 0.9; x <= 1.1; x += 0.004) xs.push_back(x);   // series/cheb switch
    for (double x = 17.8; x <= 18.2; x += 0.004) xs.push_back(x); // cheb/asym switch
    double worst0 = 0.0, worst1 = 0.0;
    for (double x : xs) {
        worst0 = std::max(worst0, std::abs(hankel1_0(x) - oracle::hankel1(0, x))
                                      / std::abs(oracle::hankel1(0, x)));
        worst1 = std::max(worst1, std::abs(hankel1_1(x) - oracle::hankel1(1, x))
                                      / std::abs(oracle::hankel1(1, x)));
    }
    CHECK(worst0 <= 1e-13);
    CHECK(worst1 <= 1e-13);
}

TEST_CASE("Wronskian J1 Y0 - J0 Y1 = 2/(pi x) over 1e4 log-spaced points") {
    double worst = 0.0;
    for (double x : log_spaced(1e-6, 2000.0, 10000)) {
        const double w = bessel_j1(x) * bessel_y0(x) - bessel_j0(x) * bessel_y1(x);
        const double target = 2.0 / (M_PI * x);
        worst = std::max(worst, std::fabs(w - target) / target);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("derivative consistency d/dx H0 = -H1 via central differences") {
    const double step = 1e-6;
    for (double x = 0.5; x <= 50.0; x += 0.7) {
        const cplxd der = (hankel1_0(x + step) - hankel1_0(x - step)) / (2.0 * step);
        CHECK(std::abs(der + hankel1_1(x)) <= 1e-8);
    }
}

TEST_CASE("branch agreement in the overlap bands") {
    using namespace specfun_detail;
    auto rel = [](const Quad& a, const Quad& b) {
        const cplxd h0a(a.j0, a.y0), h0b(b.j0, b.y0), h1a(a.j1, a.y1), h1b(b.j1, b.y1);
        return std::max(std::abs(h0a - h0b) / std::abs(h0b), std::abs(h1a - h1b) / std::abs(h1b));
    };
    for (double x = 1.0; x <= 2.0; x += 0.013)
        CHECK(rel(eval_series(x), eval_chebyshev(x)) <= 1e-13);
    for (double x = 15.5; x <= 19.5; x += 0.017)
        CHECK(rel(eval_asymptotic(x), eval_chebyshev(x)) <= 1e-13);
}

TEST_CASE("small-x limits") {
    // Y0(x) - (2/pi)(ln(x/2) + gamma) J0(x) -> 0
    const double gamma = 0.5772156649015329;
    for (double x : {1e-4, 1e-6}) {
        const double lim = bessel_y0(x) - (2.0 / M_PI) * (std::log(0.5 * x) + gamma) * bessel_j0(x);
        CHECK(std::fabs(lim) <= 1e-7);
    }
    // x Y1(x) -> -2/pi
    for (double x : {1e-5, 1e-7})
        CHECK(x * bessel_y1(x) == doctest::Approx(-2.0 / M_PI).epsilon(1e-8));
}

TEST_CASE("nonpositive arguments are rejected") {
    CHECK_THROWS_AS(hankel1_0(0.0), std::domain_error);
    CHECK_THROWS_AS(hankel1_0(-1.0), std::domain_error);
    CHECK_THROWS_AS(hankel1_1(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_y0(-2.5), std::domain_error);
}
