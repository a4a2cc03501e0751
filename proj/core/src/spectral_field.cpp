#include "aqg/spectral_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "aqg/fft.hpp"

namespace aqg {

double SpectralField::hermitian_defect() const {
  double worst = 0.0;
  for (int i1 = 0; i1 < grid_.n1; ++i1) {
    const int j1 = i1 == 0 ? 0 : grid_.n1 - i1;
    for (int i2 = 0; i2 < grid_.n2; ++i2) {
      const int j2 = i2 == 0 ? 0 : grid_.n2 - i2;
      const std::complex<double> d =
          c_[grid_.index(j1, j2)] - std::conj(c_[grid_.index(i1, i2)]);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

void SpectralField::enforce_hermitian() {
  for (int i1 = 0; i1 < grid_.n1; ++i1) {
    const int j1 = i1 == 0 ? 0 : grid_.n1 - i1;
    for (int i2 = 0; i2 < grid_.n2; ++i2) {
      const int j2 = i2 == 0 ? 0 : grid_.n2 - i2;
      const std::size_t a = grid_.index(i1, i2);
      const std::size_t b = grid_.index(j1, j2);
      if (a == b) {
        c_[a] = std::complex<double>(c_[a].real(), 0.0);
      } else if (a < b) {
        const std::complex<double> m = 0.5 * (c_[a] + std::conj(c_[b]));
        c_[a] = m;
        c_[b] = std::conj(m);
      }
    }
  }
}

namespace {
void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("SpectralField: grid mismatch");
}
}  // namespace

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b);
  SpectralField out = a;
  auto oc = out.coeffs();
  auto bc = b.coeffs();
  for (std::size_t i = 0; i < oc.size(); ++i) oc[i] += bc[i];
  return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b);
  SpectralField out = a;
  auto oc = out.coeffs();
  auto bc = b.coeffs();
  for (std::size_t i = 0; i < oc.size(); ++i) oc[i] -= bc[i];
  return out;
}

SpectralField operator*(double s, const SpectralField& f) {
  SpectralField out = f;
  for (auto& c : out.coeffs()) c *= s;
  return out;
}

SpectralField forward_transform(const GridSpec& grid, std::span<const double> physical) {
  if (physical.size() != grid.size())
    throw std::invalid_argument("forward_transform: sample count does not match grid");
  std::vector<std::complex<double>> in(grid.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = physical[i];
  SpectralField out(grid);
  fft::forward(grid.n1, grid.n2, in.data(), out.coeffs().data());
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : out.coeffs()) c *= scale;
  out.enforce_hermitian();
  return out;
}

std::vector<double> inverse_transform(const SpectralField& f) {
  const GridSpec& grid = f.grid();
  std::vector<std::complex<double>> out(grid.size());
  fft::inverse(grid.n1, grid.n2, f.coeffs().data(), out.data());
  std::vector<double> phys(grid.size());
  for (std::size_t i = 0; i < phys.size(); ++i) phys[i] = out[i].real();
  return phys;
}

}  // namespace aqg
