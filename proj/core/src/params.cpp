#include "aqg/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace aqg {

void AqgParams::validate() const {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha outside (0,1]");
  if (!(beta > 0.0) || beta > 1.0)
    throw std::invalid_argument("beta outside (0,1]");
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be nonnegative");
  if (!(nu >= 0.0)) throw std::invalid_argument("nu must be nonnegative");
}

bool satisfies_growth_condition(double alpha, double beta) {
  if (alpha > 0.0 && alpha <= 0.5) return beta > 1.0 / (2.0 * alpha + 1.0);
  if (alpha > 0.5 && alpha < 1.0) return beta > (1.0 - alpha) / (2.0 * alpha);
  return false;
}

Regime classify(const AqgParams& p) {
  p.validate();
  const double lo = std::min(p.alpha, p.beta);
  const double hi = std::max(p.alpha, p.beta);
  if (lo == 0.5 && hi > 0.5 && hi < 1.0) return Regime::semi_critical;
  if (satisfies_growth_condition(p.alpha, p.beta)) return Regime::growth_region;
  return Regime::other;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::semi_critical: return "semi_critical";
    case Regime::growth_region: return "growth_region";
    case Regime::other: return "other";
  }
  return "other";
}

}  // namespace aqg
