#include "aqg/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "aqg/fft.hpp"

namespace aqg {
namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("operators: grid mismatch");
}

template <typename Fn>
SpectralField apply_multiplier(const SpectralField& f, Fn&& m) {
  const GridSpec& g = f.grid();
  SpectralField out = f;
  auto c = out.coeffs();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double kappa1 = g.kappa1(g.mode1(i1));
    for (int i2 = 0; i2 < g.n2; ++i2) {
      c[g.index(i1, i2)] *= m(kappa1, g.kappa2(g.mode2(i2)));
    }
  }
  return out;
}

}  // namespace

SpectralField frac_deriv(const SpectralField& f, Axis axis, double gamma) {
  if (!(gamma > 0.0))
    throw std::invalid_argument("frac_deriv: order must be positive");
  return apply_multiplier(f, [axis, gamma](double kappa1, double kappa2) {
    const double k = axis == Axis::x1 ? kappa1 : kappa2;
    return k == 0.0 ? 0.0 : std::pow(std::abs(k), gamma);
  });
}

SpectralField isotropic_frac_deriv(const SpectralField& f, double gamma) {
  if (gamma == 0.0)
    throw std::invalid_argument("isotropic_frac_deriv: order must be nonzero");
  return apply_multiplier(f, [gamma](double kappa1, double kappa2) {
    const double k = std::hypot(kappa1, kappa2);
    return k == 0.0 ? 0.0 : std::pow(k, gamma);
  });
}

SpectralField derivative(const SpectralField& f, Axis axis) {
  const GridSpec& g = f.grid();
  SpectralField out = f;
  auto c = out.coeffs();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double kappa1 = g.kappa1(g.mode1(i1));
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double k = axis == Axis::x1 ? kappa1 : g.kappa2(g.mode2(i2));
      c[g.index(i1, i2)] *= std::complex<double>(0.0, k);
    }
  }
  return out;
}

SpectralField riesz_transform(const SpectralField& f, Axis axis) {
  const GridSpec& g = f.grid();
  SpectralField out = f;
  auto c = out.coeffs();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double kappa1 = g.kappa1(g.mode1(i1));
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double kappa2 = g.kappa2(g.mode2(i2));
      const double norm = std::hypot(kappa1, kappa2);
      const std::size_t idx = g.index(i1, i2);
      if (norm == 0.0) {
        c[idx] = 0.0;
      } else {
        const double k = axis == Axis::x1 ? kappa1 : kappa2;
        c[idx] *= std::complex<double>(0.0, k / norm);
      }
    }
  }
  return out;
}

VelocityField riesz_perp(const SpectralField& f) {
  const GridSpec& g = f.grid();
  VelocityField v{SpectralField(g), SpectralField(g)};
  auto fc = f.coeffs();
  auto u1 = v.u1.coeffs();
  auto u2 = v.u2.coeffs();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double kappa1 = g.kappa1(g.mode1(i1));
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double kappa2 = g.kappa2(g.mode2(i2));
      const double norm = std::hypot(kappa1, kappa2);
      const std::size_t idx = g.index(i1, i2);
      if (norm == 0.0) continue;
      u1[idx] = fc[idx] * std::complex<double>(0.0, -kappa2 / norm);
      u2[idx] = fc[idx] * std::complex<double>(0.0, kappa1 / norm);
    }
  }
  return v;
}

SpectralField spectral_cutoff(const SpectralField& f, double n) {
  if (!(n > 0.0))
    throw std::invalid_argument("spectral_cutoff: radius must be positive");
  const GridSpec& g = f.grid();
  SpectralField out = f;
  auto c = out.coeffs();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const int k1 = g.mode1(i1);
    for (int i2 = 0; i2 < g.n2; ++i2) {
      if (!g.in_cutoff(k1, g.mode2(i2), n)) c[g.index(i1, i2)] = 0.0;
    }
  }
  return out;
}

SpectralField apply_dealias_mask(const SpectralField& f) {
  const GridSpec& g = f.grid();
  SpectralField out = f;
  auto c = out.coeffs();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const int k1 = g.mode1(i1);
    for (int i2 = 0; i2 < g.n2; ++i2) {
      if (!g.in_dealias_mask(k1, g.mode2(i2))) c[g.index(i1, i2)] = 0.0;
    }
  }
  return out;
}

SpectralField embed(const SpectralField& f, const GridSpec& target) {
  const GridSpec& g = f.grid();
  if (target.n1 < g.n1 || target.n2 < g.n2 || target.box_size != g.box_size)
    throw std::invalid_argument("embed: target must be a finer grid on the same box");
  SpectralField out(target);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const int k1 = g.mode1(i1);
    const bool ny1 = k1 == -g.n1 / 2 && target.n1 > g.n1;
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const int k2 = g.mode2(i2);
      const bool ny2 = k2 == -g.n2 / 2 && target.n2 > g.n2;
      const std::complex<double> c = f.at(i1, i2);
      const double w = (ny1 ? 0.5 : 1.0) * (ny2 ? 0.5 : 1.0);
      for (int s1 = 0; s1 < (ny1 ? 2 : 1); ++s1) {
        for (int s2 = 0; s2 < (ny2 ? 2 : 1); ++s2) {
          out.at_mode(s1 == 0 ? k1 : -k1, s2 == 0 ? k2 : -k2) += w * c;
        }
      }
    }
  }
  return out;
}

SpectralField restrict_to(const SpectralField& f, const GridSpec& target) {
  const GridSpec& g = f.grid();
  if (target.n1 > g.n1 || target.n2 > g.n2 || target.box_size != g.box_size)
    throw std::invalid_argument("restrict_to: target must be a coarser grid on the same box");
  SpectralField out(target);
  for (int i1 = 0; i1 < target.n1; ++i1) {
    const int k1 = target.mode1(i1);
    const bool ny1 = k1 == -target.n1 / 2 && g.n1 > target.n1;
    for (int i2 = 0; i2 < target.n2; ++i2) {
      const int k2 = target.mode2(i2);
      const bool ny2 = k2 == -target.n2 / 2 && g.n2 > target.n2;
      std::complex<double> c(0.0, 0.0);
      for (int s1 = 0; s1 < (ny1 ? 2 : 1); ++s1) {
        for (int s2 = 0; s2 < (ny2 ? 2 : 1); ++s2) {
          c += f.at_mode(s1 == 0 ? k1 : -k1, s2 == 0 ? k2 : -k2);
        }
      }
      out.at(i1, i2) = c;
    }
  }
  return out;
}

SpectralField exact_product(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f, g);
  const GridSpec& grid = f.grid();
  // Doubled grid: product modes reach |k_i| <= n_i - 2, inside its range.
  const GridSpec padded(2 * grid.n1, 2 * grid.n2, grid.box_size, 1.0,
                        grid.cutoff_shape);
  const SpectralField fp = embed(f, padded);
  const SpectralField gp = embed(g, padded);
  std::vector<std::complex<double>> fz(padded.size());
  std::vector<std::complex<double>> gz(padded.size());
  fft::inverse(padded.n1, padded.n2, fp.coeffs().data(), fz.data());
  fft::inverse(padded.n1, padded.n2, gp.coeffs().data(), gz.data());
  std::vector<double> prod(padded.size());
  for (std::size_t i = 0; i < prod.size(); ++i)
    prod[i] = fz[i].real() * gz[i].real();
  return forward_transform(padded, prod);
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
  return apply_dealias_mask(restrict_to(exact_product(f, g), f.grid()));
}

}  // namespace aqg
