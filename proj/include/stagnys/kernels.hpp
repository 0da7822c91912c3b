#pragma once

#include <complex>

#include "stagnys/geometry.hpp"

namespace stagnys {

using cplx = std::complex<double>;

// Point-based kernel cores.  The curve-parameter wrappers below and the
// assembly loops (which work on precomputed node coordinates) share these.
namespace kernel_core {

// V1(s,t) = (i/4) H0^(1)(k |xp - xq|)
cplx v1(double k, const Vec2& xp, const Vec2& xq);

// V2(s,t) = -(i k^2/4) H0^(1)(k |xp - xq|) (np . nq)
cplx v2(double k, const Vec2& xp, const Vec2& np, const Vec2& xq, const Vec2& nq);

// (i k/4) H1^(1)(k r) ((z - xq) . nq) / r,  r = |z - xq|
cplx dlp(double k, const Vec2& z, const Vec2& xq, const Vec2& nq);

// (i k/4) H1^(1)(k r) ((xp - xq) . np) / r  -- normal at the observation point
cplx adjoint_dlp(double k, const Vec2& xp, const Vec2& np, const Vec2& xq);

} // namespace kernel_core

cplx v1(const ParametricCurve& p, const ParametricCurve& q, double s, double t, double k);
cplx v2(const ParametricCurve& p, const ParametricCurve& q, double s, double t, double k);
cplx dlp_kernel(const Vec2& z, const ParametricCurve& q, double t, double k);
cplx adjoint_dlp_kernel(const ParametricCurve& p, double s,
                        const ParametricCurve& q, double t, double k);

// Exact radiating point-source field U(z) = H0^(1)(k |z - z0|) and its scaled
// Neumann trace g~(t) = grad U(x(t)) . n(t).
cplx point_source(const Vec2& z, const Vec2& z0, double k);
cplx point_source_neumann(const ParametricCurve& p, double t, const Vec2& z0, double k);

} // namespace stagnys
