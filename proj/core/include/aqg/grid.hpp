#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

namespace aqg {

enum class CutoffShape { ball, square };

enum class Axis : int { x1 = 1, x2 = 2 };

/// Discretization of the periodic box [0,L)^2.
///
/// Modes are stored in FFT index order; index i along an axis with n modes
/// carries the signed integer wavenumber k = i for i < n/2 and k = i - n
/// otherwise, so k ranges over [-n/2, n/2). Physical wavenumbers are
/// (2*pi/L)*k. Cutoff radii (dealias mask, spectral cutoff) are measured in
/// integer-mode units, i.e. multiples of the fundamental wavenumber.
struct GridSpec {
  int n1;
  int n2;
  double box_size;
  double dealias_fraction;
  CutoffShape cutoff_shape;

  GridSpec(int n1_, int n2_, double box = 2.0 * std::numbers::pi,
           double dealias = 2.0 / 3.0, CutoffShape shape = CutoffShape::ball);

  std::size_t size() const { return static_cast<std::size_t>(n1) * n2; }
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * n2 + i2;
  }

  static int mode_of(int index, int n) { return index < n / 2 ? index : index - n; }
  static int index_of(int mode, int n) { return mode >= 0 ? mode : mode + n; }

  int mode1(int i1) const { return mode_of(i1, n1); }
  int mode2(int i2) const { return mode_of(i2, n2); }

  double wavenumber_scale() const { return 2.0 * std::numbers::pi / box_size; }
  double kappa1(int k1) const { return k1 * wavenumber_scale(); }
  double kappa2(int k2) const { return k2 * wavenumber_scale(); }

  double grid_spacing1() const { return box_size / n1; }
  double grid_spacing2() const { return box_size / n2; }
  double cell_area() const { return grid_spacing1() * grid_spacing2(); }

  /// Membership in the spectral cutoff of radius n (integer-mode units).
  bool in_cutoff(int k1, int k2, double n) const {
    if (cutoff_shape == CutoffShape::ball)
      return static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2 <= n * n;
    return std::abs(k1) <= n && std::abs(k2) <= n;
  }

  double dealias_radius1() const { return dealias_fraction * n1 / 2.0; }
  double dealias_radius2() const { return dealias_fraction * n2 / 2.0; }

  /// Dealias mask. Nyquist modes are excluded at any fraction (they have no
  /// conjugate partner on the grid, so odd-order derivatives would break
  /// realness).
  bool in_dealias_mask(int k1, int k2) const {
    if (k1 == -n1 / 2 || k2 == -n2 / 2) return false;
    const double r1 = dealias_radius1();
    const double r2 = dealias_radius2();
    if (cutoff_shape == CutoffShape::ball) {
      const double a = k1 / r1;
      const double b = k2 / r2;
      return a * a + b * b <= 1.0;
    }
    return std::abs(k1) <= r1 && std::abs(k2) <= r2;
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace aqg
