#include "aqg/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aqg {
namespace {

constexpr double relative_slack = 1e-10;

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("inequalities: grid mismatch");
}

}  // namespace

NormReport make_report(double lhs, double rhs) {
  NormReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  if (rhs > 0.0) {
    r.ratio = lhs / rhs;
  } else if (lhs == 0.0) {
    r.ratio = 0.0;
  } else {
    r.ratio = std::numeric_limits<double>::infinity();
  }
  r.holds_with_constant_one = lhs <= rhs * (1.0 + relative_slack);
  return r;
}

NormReport check_interpolation(const SpectralField& f, Axis axis, double s,
                               double s1, double s2, double z,
                               SobolevFlavor flavor) {
  if (!(z >= 0.0) || z > 1.0)
    throw std::invalid_argument("check_interpolation: z outside [0,1]");
  const double blend = z * s1 + (1.0 - z) * s2;
  if (!(s1 > 0.0) || !(s2 > 0.0) || !(blend > 0.0))
    throw std::invalid_argument("check_interpolation: derivative orders must be positive");
  const double lhs = sobolev_norm(f, s, flavor, FracWeight{axis, blend});
  const double n1 = sobolev_norm(f, s, flavor, FracWeight{axis, s1});
  const double n2 = sobolev_norm(f, s, flavor, FracWeight{axis, s2});
  const double rhs = std::pow(n1, z) * std::pow(n2, 1.0 - z);
  return make_report(lhs, rhs);
}

NormReport check_product(const SpectralField& f, const SpectralField& g,
                         double s1, double s2, ProductVariant variant) {
  require_same_grid(f, g);
  if (!(s1 < 1.0))
    throw std::invalid_argument("check_product: s1 must be below 1");
  if (variant == ProductVariant::asymmetric && !(s2 < 1.0))
    throw std::invalid_argument("check_product: s2 must be below 1");
  if (!(s1 + s2 > 0.0))
    throw std::invalid_argument("check_product: s1 + s2 must be positive");
  const SpectralField fg = exact_product(f, g);
  const double lhs = sobolev_norm(fg, s1 + s2 - 1.0, SobolevFlavor::homogeneous);
  const double f1 = sobolev_norm(f, s1, SobolevFlavor::homogeneous);
  const double g2 = sobolev_norm(g, s2, SobolevFlavor::homogeneous);
  double rhs = f1 * g2;
  if (variant == ProductVariant::symmetric) {
    rhs += sobolev_norm(f, s2, SobolevFlavor::homogeneous) *
           sobolev_norm(g, s1, SobolevFlavor::homogeneous);
  }
  return make_report(lhs, rhs);
}

NormReport check_embedding(const SpectralField& f, double sigma, double p) {
  if (!(sigma >= 0.0) || sigma >= 1.0)
    throw std::invalid_argument("check_embedding: sigma outside [0,1)");
  const double expected_p = 2.0 / (1.0 - sigma);
  if (!(p > 0.0) || std::abs(p - expected_p) > 1e-9 * expected_p)
    throw std::invalid_argument("check_embedding: p must satisfy 1/p + sigma/2 = 1/2");
  double peak = 0.0;
  for (const auto& c : f.coeffs()) peak = std::max(peak, std::abs(c));
  if (std::abs(f.at_mode(0, 0)) > 1e-13 * std::max(peak, 1e-300))
    throw std::invalid_argument("check_embedding: field must be mean-free");
  const double lhs = lebesgue_norm(f, expected_p);
  const double rhs = sobolev_norm(f, sigma, SobolevFlavor::homogeneous);
  return make_report(lhs, rhs);
}

NormReport check_commutator(const SpectralField& f, const SpectralField& g,
                            double s, double alpha) {
  require_same_grid(f, g);
  if (!(s > 1.0))
    throw std::invalid_argument("check_commutator: s must exceed 1");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("check_commutator: alpha outside (0,1)");
  const SpectralField whole = isotropic_frac_deriv(exact_product(f, g), s);
  const SpectralField carried = exact_product(f, isotropic_frac_deriv(g, s));
  const double lhs = l2_norm(whole - carried);
  const double rhs =
      s * std::pow(2.0, s) *
      (sobolev_norm(f, s + alpha, SobolevFlavor::homogeneous) *
           sobolev_norm(g, 1.0 - alpha, SobolevFlavor::homogeneous) +
       sobolev_norm(g, s - 1.0 + alpha, SobolevFlavor::homogeneous) *
           sobolev_norm(f, 2.0 - alpha, SobolevFlavor::homogeneous));
  return make_report(lhs, rhs);
}

NormReport check_commutator_kernel(double s, int max_radius) {
  if (!(s > 1.0))
    throw std::invalid_argument("check_commutator_kernel: s must exceed 1");
  if (max_radius < 1)
    throw std::invalid_argument("check_commutator_kernel: radius must be positive");
  const int r = max_radius;
  const double r2 = static_cast<double>(r) * r;
  const double front = s * std::pow(2.0, s - 1.0);
  NormReport worst;
  bool all_hold = true;
  for (int x1 = -r; x1 <= r; ++x1) {
    for (int x2 = -r; x2 <= r; ++x2) {
      const double xi2 = static_cast<double>(x1) * x1 + static_cast<double>(x2) * x2;
      if (xi2 > r2) continue;
      const double xi = std::sqrt(xi2);
      for (int y1 = -r; y1 <= r; ++y1) {
        for (int y2 = -r; y2 <= r; ++y2) {
          const double eta2 =
              static_cast<double>(y1) * y1 + static_cast<double>(y2) * y2;
          if (eta2 > r2) continue;
          const double eta = std::sqrt(eta2);
          const double diff = std::hypot(x1 - y1, x2 - y2);
          const double lhs = std::abs(std::pow(xi, s) - std::pow(eta, s));
          const double rhs =
              front * (std::pow(diff, s) + std::pow(eta, s - 1.0) * diff);
          const NormReport here = make_report(lhs, rhs);
          all_hold = all_hold && here.holds_with_constant_one;
          if (here.ratio > worst.ratio) worst = here;
        }
      }
    }
  }
  worst.holds_with_constant_one = all_hold;
  return worst;
}

NormReport check_riesz_bound(const SpectralField& f, double p) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("check_riesz_bound: p must lie in (1, inf)");
  const double cell = f.grid().cell_area();
  const std::vector<double> r1 =
      inverse_transform(riesz_transform(f, Axis::x1));
  const std::vector<double> r2 =
      inverse_transform(riesz_transform(f, Axis::x2));
  const std::vector<double> base = inverse_transform(f);
  const double lhs = std::max(detail::lp_quadrature(r1, p, cell),
                              detail::lp_quadrature(r2, p, cell));
  const double rhs = detail::lp_quadrature(base, p, cell);
  return make_report(lhs, rhs);
}

}  // namespace aqg
