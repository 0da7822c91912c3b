#include "stagnys/spectral_toolkit.hpp"

#include <cmath>
#include <stdexcept>

namespace stagnys {

FourierVector::FourierVector(int window_size) : c_(size_t(window_size)) {
    if (window_size < 1) throw std::invalid_argument("window size must be positive");
}

FourierVector fourier_coeffs(const std::vector<cplx>& samples) {
    const int m_count = int(samples.size());
    if (m_count < 2) throw std::invalid_argument("fourier_coeffs: need at least 2 samples");
    FourierVector out(m_count);
    for (int m = out.m_lo(); m <= out.m_hi(); ++m) {
        cplx acc = 0.0;
        for (int j = 0; j < m_count; ++j) {
            const double phase = -2.0 * M_PI * double(m) * double(j) / double(m_count);
            acc += samples[size_t(j)] * cplx(std::cos(phase), std::sin(phase));
        }
        out[m] = acc / double(m_count);
    }
    return out;
}

double sobolev_norm(const FourierVector& coeffs, double r) {
    double sum = std::norm(coeffs[0]);
    for (int m = coeffs.m_lo(); m <= coeffs.m_hi(); ++m) {
        if (m == 0) continue;
        sum += std::pow(std::abs(double(m)), 2.0 * r) * std::norm(coeffs[m]);
    }
    return std::sqrt(sum);
}

FourierVector apply_hilbert(FourierVector coeffs) {
    for (int m = coeffs.m_lo(); m <= coeffs.m_hi(); ++m) {
        if (m == 0)
            coeffs[0] = 0.0;
        else if (m < 0)
            coeffs[m] = -coeffs[m];
    }
    return coeffs;
}

FourierVector apply_dn(FourierVector coeffs, int n) {
    for (int m = coeffs.m_lo(); m <= coeffs.m_hi(); ++m) {
        if (m == 0) {
            coeffs[0] = 0.0;
            continue;
        }
        const cplx factor = std::pow(cplx(0.0, 2.0 * M_PI * double(m)), double(n));
        coeffs[m] *= factor;
    }
    return coeffs;
}

cplx synthesize(const FourierVector& coeffs, double t) {
    cplx acc = 0.0;
    for (int m = coeffs.m_lo(); m <= coeffs.m_hi(); ++m) {
        const double phase = 2.0 * M_PI * double(m) * t;
        acc += coeffs[m] * cplx(std::cos(phase), std::sin(phase));
    }
    return acc;
}

double periodized_bernoulli(int ell, double t) {
    const double f = t - std::floor(t);
    switch (ell) {
        case 1:
            // -B1(f) = 1/2 - f on (0,1); Fourier-series value 0 at integers
            return (f == 0.0) ? 0.0 : 0.5 - f;
        case 2:
            // B2(f)/2 with B2 = f^2 - f + 1/6
            return 0.5 * (f * f - f + 1.0 / 6.0);
        default:
            throw std::invalid_argument("periodized_bernoulli: ell must be 1 or 2");
    }
}

cplx c_ell(int ell, double t) {
    if (ell == 1) {
        const double frac = t - std::floor(t);
        if (frac == 0.0)
            throw std::domain_error("c_ell(1, t): logarithmic singularity at integer t");
        const double s = std::sin(M_PI * frac);
        // -(1/(2 pi i)) log(4 sin^2(pi t))
        return cplx(0.0, 1.0 / (2.0 * M_PI)) * std::log(4.0 * s * s);
    }
    if (ell != 2) throw std::invalid_argument("c_ell: ell must be 1 or 2");
    // B2 coefficients over the symmetric 2048-mode window, pushed through H once
    static const FourierVector c2_coeffs = [] {
        FourierVector b2(4097); // window {-2048..2048}
        for (int m = b2.m_lo(); m <= b2.m_hi(); ++m)
            if (m != 0) b2[m] = 1.0 / (4.0 * M_PI * M_PI * double(m) * double(m));
        return apply_hilbert(std::move(b2));
    }();
    return synthesize(c2_coeffs, t);
}

} // namespace stagnys
