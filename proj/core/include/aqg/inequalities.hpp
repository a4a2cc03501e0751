#pragma once

#include "aqg/norms.hpp"
#include "aqg/spectral_field.hpp"

namespace aqg {

/// Outcome of a single inequality evaluation. ratio is lhs/rhs, defined as 0
/// when both sides vanish and +inf when only rhs does; it is finite whenever
/// rhs > 0. holds_with_constant_one allows 1e-10 relative slack for roundoff.
struct NormReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool holds_with_constant_one = false;
};

NormReport make_report(double lhs, double rhs);

/// Directional interpolation ||d_i|^{z s1 + (1-z) s2} f|_{H^s} against the
/// z-weighted geometric mean of the endpoint norms. Holds with constant one
/// (Hoelder on the mode sum). z in [0,1]; every exponent that reaches
/// frac_deriv must be positive.
NormReport check_interpolation(const SpectralField& f, Axis axis, double s,
                               double s1, double s2, double z,
                               SobolevFlavor flavor = SobolevFlavor::inhomogeneous);

enum class ProductVariant { symmetric, asymmetric };

/// Bilinear product estimate |fg|_{dot H^{s1+s2-1}} against
///   symmetric:  |f|_{dot H^{s1}} |g|_{dot H^{s2}} + |f|_{dot H^{s2}} |g|_{dot H^{s1}}
///   asymmetric: |f|_{dot H^{s1}} |g|_{dot H^{s2}}
/// with the constant left at one; ratio is the empirical constant. Requires
/// s1 < 1 and s1 + s2 > 0 (asymmetric also s2 < 1). The product is formed on a
/// doubled grid, so lhs carries no truncation error.
NormReport check_product(const SpectralField& f, const SpectralField& g,
                         double s1, double s2,
                         ProductVariant variant = ProductVariant::symmetric);

/// Sobolev embedding |f|_{L^p} <= C ||grad|^sigma f|_{L^2} for mean-free f,
/// with 1/p + sigma/2 = 1/2, sigma in [0,1). Rejects (sigma, p) pairs off the
/// scaling line and fields with a mean.
NormReport check_embedding(const SpectralField& f, double sigma, double p);

/// Commutator estimate: lhs = ||grad|^s (fg) - f |grad|^s g|_{L^2} on a
/// doubled grid; rhs = s 2^s (||grad|^{s+alpha} f| ||grad|^{1-alpha} g| +
/// ||grad|^{s-1+alpha} g| ||grad|^{2-alpha} f|), all L^2. Requires s > 1,
/// alpha in (0,1).
NormReport check_commutator(const SpectralField& f, const SpectralField& g,
                            double s, double alpha);

/// Pointwise kernel bound behind the commutator estimate:
///   ||xi|^s - |eta|^s| <= s 2^{s-1} (|xi - eta|^s + |eta|^{s-1} |xi - eta|),
/// scanned exhaustively over the integer lattice |xi|, |eta| <= max_radius.
/// The report carries the worst pair; requires s > 1.
NormReport check_commutator_kernel(double s, int max_radius);

/// L^p boundedness of both Riesz transforms, p in (1, inf):
/// lhs = max_i |R_i f|_{L^p}, rhs = |f|_{L^p}. At p = 2 the ratio never
/// exceeds one; away from 2 the ratio is the empirical operator norm.
NormReport check_riesz_bound(const SpectralField& f, double p);

}  // namespace aqg
