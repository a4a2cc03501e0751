#include "aqg/random_field.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "aqg/norms.hpp"

namespace aqg {
namespace {

// Hand-rolled Box-Muller on top of mt19937_64 so draws are bit-reproducible
// across standard libraries (std::normal_distribution is not).
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

 private:
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec) {
  const int b = spec.band_limit;
  if (b < 1) throw std::invalid_argument("random_field: band limit must be positive");
  if (b >= grid.n1 / 2 || b >= grid.n2 / 2)
    throw std::invalid_argument("random_field: band limit exceeds grid range");
  if (!(spec.target_norm >= 0.0) || !std::isfinite(spec.target_norm))
    throw std::invalid_argument("random_field: target norm must be finite and nonnegative");

  GaussianSource gauss(spec.seed);
  SpectralField f(grid);
  // One draw per independent mode: k1 > 0, or k1 == 0 with k2 > 0; the
  // conjugate partner is set alongside.
  for (int k1 = 0; k1 <= b; ++k1) {
    for (int k2 = -b; k2 <= b; ++k2) {
      if (k1 * k1 + k2 * k2 > b * b) continue;
      if (k1 == 0 && k2 <= 0) continue;
      const std::complex<double> c(gauss.next(), gauss.next());
      f.at_mode(k1, k2) = c;
      f.at_mode(-k1, -k2) = std::conj(c);
    }
  }

  const double norm =
      spec.norm_space == RandomFieldSpec::NormSpace::l2
          ? l2_norm(f)
          : sobolev_norm(f, spec.s, SobolevFlavor::inhomogeneous);
  if (norm > 0.0 && spec.target_norm > 0.0) {
    const double scale = spec.target_norm / norm;
    for (auto& c : f.coeffs()) c *= scale;
  } else if (spec.target_norm == 0.0) {
    for (auto& c : f.coeffs()) c = 0.0;
  }
  return f;
}

}  // namespace aqg
