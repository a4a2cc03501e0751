#pragma once

#include <cstdint>

#include "aqg/spectral_field.hpp"

namespace aqg {

/// Seeded band-limited random field. Coefficients are complex Gaussians drawn
/// in a fixed wavenumber order (not grid order), so the same spec produces the
/// same trigonometric polynomial on every grid that contains the band. The
/// result is mean-free, real, and rescaled to the requested norm.
struct RandomFieldSpec {
  std::uint64_t seed = 1;
  int band_limit = 4;  // modes with |k| <= band_limit (Euclidean)
  enum class NormSpace { l2, hs } norm_space = NormSpace::hs;
  double s = 1.5;           // Sobolev index when norm_space == hs
  double target_norm = 1.0;
};

SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec);

}  // namespace aqg
