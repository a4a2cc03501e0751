#pragma once

#include "aqg/spectral_field.hpp"

namespace aqg {

/// Directional fractional derivative |d_i|^gamma: multiplier |kappa_i|^gamma.
/// Requires gamma > 0. Exact composition: applying gamma1 then gamma2 matches
/// gamma1+gamma2 to roundoff.
SpectralField frac_deriv(const SpectralField& f, Axis axis, double gamma);

/// Isotropic fractional derivative |grad|^gamma: multiplier |kappa|^gamma,
/// zero at the mean mode. Requires gamma != 0; negative orders act on the
/// mean-free part.
SpectralField isotropic_frac_deriv(const SpectralField& f, double gamma);

/// Ordinary partial derivative d_i: multiplier i*kappa_i.
SpectralField derivative(const SpectralField& f, Axis axis);

/// Riesz transform R_i: multiplier i*kappa_i/|kappa|, zero at the mean mode.
SpectralField riesz_transform(const SpectralField& f, Axis axis);

struct VelocityField {
  SpectralField u1;
  SpectralField u2;
};

/// Divergence-free velocity (-R_2 f, R_1 f); multipliers
/// (-i*kappa_2/|kappa|, i*kappa_1/|kappa|).
VelocityField riesz_perp(const SpectralField& f);

/// Sharp Fourier projection onto modes inside radius n (integer-mode units,
/// shape from the grid). Idempotent and an L2 contraction.
SpectralField spectral_cutoff(const SpectralField& f, double n);

/// Zero every mode outside the grid's dealias mask.
SpectralField apply_dealias_mask(const SpectralField& f);

/// Copy modes onto a finer grid over the same box. Nyquist content is split
/// evenly between +-n/2 so the represented real trigonometric polynomial is
/// preserved exactly.
SpectralField embed(const SpectralField& f, const GridSpec& target);

/// Inverse of embed for the retained modes: target mode k takes the source
/// coefficient at k; target Nyquist modes fold the +-n/2 pair.
SpectralField restrict_to(const SpectralField& f, const GridSpec& target);

/// Product of the two trigonometric polynomials, computed without aliasing on
/// a doubled grid. The result lives on that doubled grid and retains every
/// product mode.
SpectralField exact_product(const SpectralField& f, const SpectralField& g);

/// Pointwise product restricted back to the common grid with the dealias mask
/// applied: exact convolution for the retained modes at any dealias fraction.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);

}  // namespace aqg
