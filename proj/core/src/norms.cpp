#include "aqg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aqg {

namespace detail {

double lp_quadrature(std::span<const double> phys, double p, double cell_area) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : phys) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (double v : phys) sum += v * v;
  } else if (p == 4.0) {
    for (double v : phys) {
      const double w = v * v;
      sum += w * w;
    }
  } else {
    for (double v : phys) sum += std::pow(std::abs(v), p);
  }
  return std::pow(cell_area * sum, 1.0 / p);
}

}  // namespace detail

double lebesgue_norm(const SpectralField& f, double p) {
  if (!(p >= 2.0))
    throw std::invalid_argument("lebesgue_norm: p must lie in [2, inf]");
  const std::vector<double> phys = inverse_transform(f);
  return detail::lp_quadrature(phys, p, f.grid().cell_area());
}

double sobolev_norm(const SpectralField& f, double s, SobolevFlavor flavor,
                    std::optional<FracWeight> weight) {
  const GridSpec& g = f.grid();
  auto c = f.coeffs();
  double sum = 0.0;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double kappa1 = g.kappa1(g.mode1(i1));
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double kappa2 = g.kappa2(g.mode2(i2));
      const double k2 = kappa1 * kappa1 + kappa2 * kappa2;
      double w;
      if (flavor == SobolevFlavor::inhomogeneous) {
        w = s == 0.0 ? 1.0 : std::pow(1.0 + k2, s);
      } else {
        if (k2 == 0.0) continue;
        w = s == 0.0 ? 1.0 : std::pow(k2, s);
      }
      if (weight) {
        const double ka = weight->axis == Axis::x1 ? kappa1 : kappa2;
        if (ka == 0.0) continue;
        w *= std::pow(ka * ka, weight->gamma);
      }
      sum += w * std::norm(c[g.index(i1, i2)]);
    }
  }
  return std::sqrt(g.box_size * g.box_size * sum);
}

double l2_norm(const SpectralField& f) {
  const GridSpec& g = f.grid();
  double sum = 0.0;
  for (const auto& c : f.coeffs()) sum += std::norm(c);
  return std::sqrt(g.box_size * g.box_size * sum);
}

}  // namespace aqg
