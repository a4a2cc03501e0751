#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "aqg/dynamics.hpp"
#include "aqg/series.hpp"

namespace aqg {

enum class MonitorStatus { pass, fail, not_applicable };

/// One a-priori estimate checked against a recorded run. worst_violation is
/// the largest relative excursion beyond the estimate (0 when it never
/// occurs), t_at its sample time. Monitors that calibrate a constant report it
/// in empirical_constant (NaN otherwise).
struct MonitorVerdict {
  std::string monitor;
  MonitorStatus status = MonitorStatus::pass;
  double worst_violation = 0.0;
  double t_at = 0.0;
  double empirical_constant = std::numeric_limits<double>::quiet_NaN();

  bool passed() const { return status != MonitorStatus::fail; }
};

const char* monitor_status_name(MonitorStatus s);

/// Energy balance: l2(t)^2 + 2 mu diss1(t) + 2 nu diss2(t) against l2(0)^2.
/// Fails if the relative residual exceeds 1e-6 at any sample or the balance
/// exceeds the initial energy by more than 1e-10 relative.
MonitorVerdict energy_ledger(const NormSeries& series);

/// L^p monotonicity for p in {2, 4, inf}: each sample may exceed its
/// predecessor by at most a 1 + 1e-8 factor.
MonitorVerdict maximum_principle(const NormSeries& series, std::span<const double> p_list);

/// H^1 boundedness, applicable when (alpha, beta) satisfies the growth
/// condition (or is semi-critical): passes when the H^1 peak sits in the first
/// half of the run or the running max grows at most 1e-3 relative over the
/// final quarter. empirical_constant is the largest observed value of
/// h1^2 + int (d1a_h1^2 + d2b_h1^2).
MonitorVerdict h1_bound(const NormSeries& series, const AqgParams& params);

/// H^s Gronwall envelope for one tracked s > 1: calibrates the smallest C with
///   hs(t)^2 <= hs(0)^2 exp(C int_0^t (d1a_h1^2 + d2b_h1^2)),
/// reports it in empirical_constant, and fails only if no finite C exists.
MonitorVerdict hs_envelope(const NormSeries& series, double s);

/// Two runs from theta0 and theta0 + delta |theta0|_{L^2} p (p a seeded unit
/// perturbation): records |difference|_{L^2} over time, the empirical Gronwall
/// constant of the growth envelope, and whether the two trajectories are
/// bit-identical (the delta = 0 case).
struct ContractionReport {
  double delta = 0.0;
  std::vector<double> times;
  std::vector<double> omega_l2;
  double gronwall_constant = 0.0;  // C in omega <= omega_0 exp(C int S), S the H^s drive
  double gronwall_rate = 0.0;      // C sup S, the plain-exponential rate
  bool envelope_ok = true;
  bool identical = false;
};

struct TwinOptions {
  double horizon = 2.0;
  double sample_every = 0.01;
  double s = 1.5;  // Sobolev index of the drive norm
  std::uint64_t perturbation_seed = 77;
  int perturbation_band = 4;
};

ContractionReport twin_experiment(const SpectralField& theta0, double delta,
                                  const AqgParams& params, const TimeStepper& stepper,
                                  const TwinOptions& options);

/// One (alpha, beta) cell of a coefficient sweep.
struct SweepCell {
  double alpha = 0.0;
  double beta = 0.0;
  Regime regime = Regime::other;
  bool blew_up = false;
  double blowup_t = 0.0;
  double max_hs_growth = 0.0;  // sup_t hs(t)/hs(0)
  std::vector<MonitorVerdict> verdicts;
};

/// Runs the same initial data across an alpha x beta grid and applies every
/// monitor per cell. Blow-ups are recorded, not fatal.
std::vector<SweepCell> regime_sweep(const SpectralField& theta0,
                                    std::span<const double> alphas,
                                    std::span<const double> betas, double mu, double nu,
                                    const TimeStepper& stepper,
                                    const SimulateOptions& options);

}  // namespace aqg
