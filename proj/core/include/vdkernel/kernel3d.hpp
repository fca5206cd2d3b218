#pragma once

#include "vdkernel/geometry.hpp"
#include "vdkernel/quadrature.hpp"

namespace vdkernel {

/// Transition density, w.r.t. m_gamma, of the process on the 3D part killed
/// on first hitting the origin:
///   q(t, x, y) = (2 pi t)^{-3/2} exp(-gamma^2 t/2 - |x - y|^2 / 2t)
///                / (psi(x) psi(y)).
/// Both points must lie in the 3D component.
double killed_kernel3d(double t, const EPoint& x, const EPoint& y, const KernelParams& params);

/// P_x(t < hitting time of the origin) = int_{E1} q(t, x, .) dm_gamma,
/// integrated over (radius, polar angle about x) with the angular integral
/// done numerically.
QuadResult survival_probability_3d(double t, const EPoint& x, const KernelParams& params,
                                   const QuadConfig& cfg);

/// A unit vector orthogonal to `v` (v nonzero).
Vec3 orthogonal_unit(const Vec3& v);

/// Point of the 3D part at radius r whose polar angle about the direction
/// of `axis` has cosine c; the azimuth is fixed by orthogonal_unit(axis).
EPoint point_on_cone(const EPoint& axis, double r, double c);

}  // namespace vdkernel
