#pragma once

#include <complex>
#include <span>
#include <vector>

#include "aqg/grid.hpp"

namespace aqg {

/// Fourier coefficients of a real scalar field on a GridSpec, stored as a full
/// complex array in FFT index order (no half-spectrum packing). The physical
/// field is sum_k coeff(k) exp(i (2pi/L) k.x), so realness is the explicit
/// invariant coeff(-k) == conj(coeff(k)), maintained exactly by every operator
/// in this library and checkable via hermitian_defect().
class SpectralField {
 public:
  explicit SpectralField(const GridSpec& grid)
      : grid_(grid), c_(grid.size(), std::complex<double>(0.0, 0.0)) {}

  const GridSpec& grid() const { return grid_; }

  std::span<const std::complex<double>> coeffs() const { return c_; }
  std::span<std::complex<double>> coeffs() { return c_; }

  std::complex<double> at(int i1, int i2) const { return c_[grid_.index(i1, i2)]; }
  std::complex<double>& at(int i1, int i2) { return c_[grid_.index(i1, i2)]; }

  std::complex<double> at_mode(int k1, int k2) const {
    return c_[grid_.index(GridSpec::index_of(k1, grid_.n1),
                          GridSpec::index_of(k2, grid_.n2))];
  }
  std::complex<double>& at_mode(int k1, int k2) {
    return c_[grid_.index(GridSpec::index_of(k1, grid_.n1),
                          GridSpec::index_of(k2, grid_.n2))];
  }

  /// max_k |coeff(-k) - conj(coeff(k))| over paired modes.
  double hermitian_defect() const;

  /// Pairwise-average coefficients so the defect becomes exactly zero;
  /// self-conjugate modes (0 and Nyquist combinations) get a zero imaginary
  /// part.
  void enforce_hermitian();

  friend bool operator==(const SpectralField&, const SpectralField&) = default;

 private:
  GridSpec grid_;
  std::vector<std::complex<double>> c_;
};

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double s, const SpectralField& f);

/// Physical samples (row-major, x = (i1*L/n1, i2*L/n2)) -> coefficients.
/// Normalizes by 1/(n1*n2) and enforces Hermitian symmetry exactly.
SpectralField forward_transform(const GridSpec& grid, std::span<const double> physical);

/// Coefficients -> physical samples. Takes the real part; the imaginary part
/// is roundoff whenever the Hermitian invariant holds.
std::vector<double> inverse_transform(const SpectralField& f);

}  // namespace aqg
