#pragma once

namespace aqg {

/// Coefficients of the dissipative transport equation
///   d_t theta + u.grad theta + mu |d_1|^{2 alpha} theta + nu |d_2|^{2 beta} theta = 0,
/// with u = (-R_2 theta, R_1 theta).
struct AqgParams {
  double alpha;
  double beta;
  double mu = 1.0;
  double nu = 1.0;

  void validate() const;
};

/// Parameter regimes with different expected a-priori behavior.
///   semi_critical: min(alpha, beta) == 1/2 exactly and max(alpha, beta) in (1/2, 1).
///   growth_region: beta > 1/(2 alpha + 1)       for 0 < alpha <= 1/2,
///                  beta > (1 - alpha)/(2 alpha) for 1/2 < alpha < 1.
///   other:         everything else.
/// semi_critical takes precedence where the two overlap.
enum class Regime { semi_critical, growth_region, other };

bool satisfies_growth_condition(double alpha, double beta);

Regime classify(const AqgParams& p);

const char* regime_name(Regime r);

}  // namespace aqg
