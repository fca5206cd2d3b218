#pragma once

#include <string_view>

#include "vdkernel/geometry.hpp"
#include "vdkernel/quadrature.hpp"

namespace vdkernel {

/// Which branch of the transition density an argument pair falls into.
enum class CaseTag {
  Case_i_3D3D,
  Case_ii_1D1D,
  Case_iii_cross,
  Case_iv_origin,
};

std::string_view to_string(CaseTag c) noexcept;

/// Short label used by the CLI: "i", "ii", "iii" or "iv".
std::string_view short_label(CaseTag c) noexcept;

/// Case of the pair (x, y), determined only by the component tags.
CaseTag classify(const EPoint& x, const EPoint& y) noexcept;

struct KernelVDValue {
  double value = 0.0;  ///< density with respect to m_gamma
  CaseTag case_tag = CaseTag::Case_iv_origin;
  double error_estimate = 0.0;
};

/// Transition density p(t, x, y) of distorted Brownian motion on E with
/// respect to m_gamma. With H = (reflected - killed half-line kernel) / 2 at
/// the radii (|x|, |y|):
///   both in 3D:       q(t, x, y) + H
///   both on the line: (killed + reflected) / 2
///   one of each:      H
///   either at 0:      origin_kernel
/// Arguments are put in canonical order first, so the result is
/// bit-for-bit symmetric.
KernelVDValue kernel(double t, const EPoint& x, const EPoint& y, const KernelParams& params,
                     const QuadConfig& cfg = {});

/// p(t, 0, y) = reflected_kernel(t, 0, |y|) / 2, the limit of the line and
/// cross cases as |x| -> 0.
KernelVDValue origin_kernel(double t, const EPoint& y, const KernelParams& params,
                            const QuadConfig& cfg = {});

}  // namespace vdkernel
