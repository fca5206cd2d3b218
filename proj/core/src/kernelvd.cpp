#include "vdkernel/kernelvd.hpp"

#include <cmath>

#include "vdkernel/errors.hpp"
#include "vdkernel/kernel3d.hpp"
#include "vdkernel/kernels1d.hpp"

namespace vdkernel {

std::string_view to_string(CaseTag c) noexcept {
  switch (c) {
    case CaseTag::Case_i_3D3D:
      return "Case_i_3D3D";
    case CaseTag::Case_ii_1D1D:
      return "Case_ii_1D1D";
    case CaseTag::Case_iii_cross:
      return "Case_iii_cross";
    case CaseTag::Case_iv_origin:
      return "Case_iv_origin";
  }
  return "?";
}

std::string_view short_label(CaseTag c) noexcept {
  switch (c) {
    case CaseTag::Case_i_3D3D:
      return "i";
    case CaseTag::Case_ii_1D1D:
      return "ii";
    case CaseTag::Case_iii_cross:
      return "iii";
    case CaseTag::Case_iv_origin:
      return "iv";
  }
  return "?";
}

CaseTag classify(const EPoint& x, const EPoint& y) noexcept {
  if (x.is_origin() || y.is_origin()) return CaseTag::Case_iv_origin;
  if (x.component() != y.component()) return CaseTag::Case_iii_cross;
  return x.component() == Component::Comp3D ? CaseTag::Case_i_3D3D : CaseTag::Case_ii_1D1D;
}

KernelVDValue origin_kernel(double t, const EPoint& y, const KernelParams& params,
                            const QuadConfig& cfg) {
  require(std::isfinite(t) && t > 0.0, ErrorCode::InvalidInput, "t must be finite and > 0");
  const Kernel1DValue r = reflected_kernel(t, 0.0, y.radius(), params, cfg);
  return KernelVDValue{0.5 * r.value, CaseTag::Case_iv_origin, 0.5 * r.error_estimate};
}

KernelVDValue kernel(double t, const EPoint& x_in, const EPoint& y_in, const KernelParams& params,
                     const QuadConfig& cfg) {
  require(std::isfinite(t) && t > 0.0, ErrorCode::InvalidInput, "t must be finite and > 0");
  const bool swap = canonical_less(y_in, x_in);
  const EPoint& x = swap ? y_in : x_in;
  const EPoint& y = swap ? x_in : y_in;

  const CaseTag tag = classify(x, y);
  if (tag == CaseTag::Case_iv_origin) {
    return origin_kernel(t, x.is_origin() ? y : x, params, cfg);
  }

  const double rx = x.radius();
  const double ry = y.radius();
  switch (tag) {
    case CaseTag::Case_i_3D3D: {
      const double q = killed_kernel3d(t, x, y, params);
      const Kernel1DValue h = hitting_part(t, rx, ry, params, cfg);
      return KernelVDValue{q + h.value, tag, h.error_estimate};
    }
    case CaseTag::Case_ii_1D1D: {
      const Kernel1DValue refl = reflected_kernel(t, rx, ry, params, cfg);
      const Kernel1DValue killed = killed_halfline_kernel(t, rx, ry, params);
      return KernelVDValue{0.5 * (killed.value + refl.value), tag, 0.5 * refl.error_estimate};
    }
    default: {
      const Kernel1DValue h = hitting_part(t, rx, ry, params, cfg);
      return KernelVDValue{h.value, tag, h.error_estimate};
    }
  }
}

}  // namespace vdkernel
