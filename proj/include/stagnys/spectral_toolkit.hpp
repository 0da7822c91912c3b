#pragma once

#include <complex>
#include <vector>

namespace stagnys {

using cplx = std::complex<double>;

// Fourier coefficients over the symmetric window Lambda_M = {m : -M/2 < m <= M/2}.
class FourierVector {
public:
    explicit FourierVector(int window_size);

    int window_size() const { return int(c_.size()); }
    int m_lo() const { return -((window_size() - 1) / 2); }
    int m_hi() const { return window_size() / 2; }

    cplx& operator[](int m) { return c_[size_t(m - m_lo())]; }
    cplx operator[](int m) const { return c_[size_t(m - m_lo())]; }

private:
    std::vector<cplx> c_;
};

// Trigonometric-interpolation coefficients of samples u(j/M), j = 0..M-1:
// u^(m) = (1/M) sum_j u_j exp(-2 pi i m j / M), m in Lambda_M.
FourierVector fourier_coeffs(const std::vector<cplx>& samples);

// ( |u^(0)|^2 + sum_{m != 0} |m|^{2r} |u^(m)|^2 )^{1/2} over the window.
double sobolev_norm(const FourierVector& coeffs, double r);

// Periodic Hilbert transform: u^(m) -> sign(m) u^(m), u^(0) -> 0.
FourierVector apply_hilbert(FourierVector coeffs);

// D_n: u^(m) -> (2 pi i m)^n u^(m), u^(0) -> 0.
FourierVector apply_dn(FourierVector coeffs, int n);

// sum over the window of coeffs[m] exp(2 pi i m t)
cplx synthesize(const FourierVector& coeffs, double t);

// Periodized Bernoulli functions: (-1)^l l! B_l equals the Bernoulli
// polynomial of degree l on (0,1), extended 1-periodically.
double periodized_bernoulli(int ell, double t);

// C_l = H B_l.  C_1 has the closed form -(1/(2 pi i)) log(4 sin^2(pi t));
// its only zeros are +-1/6 mod 1.  C_2 is synthesized from a 2048-mode
// truncated Fourier series (qualitative use only).
cplx c_ell(int ell, double t);

} // namespace stagnys
