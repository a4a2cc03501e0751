#pragma once

#include <limits>
#include <optional>

#include "aqg/operators.hpp"
#include "aqg/spectral_field.hpp"

namespace aqg {

/// L^p norm over the box by collocation quadrature, p in [2, inf]. Exact (to
/// roundoff) for p = 2 by Parseval; a spectral-accuracy approximation for
/// other p since |f|^p is not band-limited. p = inf is the grid max.
double lebesgue_norm(const SpectralField& f, double p);

inline constexpr double infinite_p = std::numeric_limits<double>::infinity();

enum class SobolevFlavor { inhomogeneous, homogeneous };

/// Optional directional weight applied inside sobolev_norm, so e.g.
/// ||d_1|^alpha f|_{H^1} is a single weighted mode sum.
struct FracWeight {
  Axis axis;
  double gamma;
};

/// Sobolev norm by weighted mode sum:
///   inhomogeneous: (1 + |kappa|^2)^s, any real s;
///   homogeneous:   |kappa|^{2s} over nonzero modes, any real s.
/// With a FracWeight the summand gains |kappa_axis|^{2 gamma}.
double sobolev_norm(const SpectralField& f, double s,
                    SobolevFlavor flavor = SobolevFlavor::inhomogeneous,
                    std::optional<FracWeight> weight = std::nullopt);

/// Parseval L^2 norm (equals sobolev_norm at s = 0, inhomogeneous).
double l2_norm(const SpectralField& f);

namespace detail {
/// Collocation L^p quadrature for any p >= 1 on physical samples.
double lp_quadrature(std::span<const double> phys, double p, double cell_area);
}  // namespace detail

}  // namespace aqg
