#include "aqg/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aqg/norms.hpp"
#include "aqg/operators.hpp"
#include "aqg/random_field.hpp"

namespace aqg {
namespace {

constexpr double ledger_residual_tol = 1e-6;
constexpr double inequality_slack = 1e-10;
constexpr double monotone_slack = 1e-8;
constexpr double plateau_growth_tol = 1e-3;

void require_samples(const NormSeries& series) {
  if (series.samples() < 2)
    throw std::invalid_argument("monitor: series needs at least two samples");
}

/// Cumulative trapezoid of d1a_h1^2 + d2b_h1^2 over the sample times.
std::vector<double> h1_drive_integral(const NormSeries& s) {
  std::vector<double> out(s.samples(), 0.0);
  auto value = [&s](std::size_t i) {
    return s.d1a_h1[i] * s.d1a_h1[i] + s.d2b_h1[i] * s.d2b_h1[i];
  };
  for (std::size_t i = 1; i < s.samples(); ++i) {
    out[i] = out[i - 1] +
             0.5 * (s.times[i] - s.times[i - 1]) * (value(i) + value(i - 1));
  }
  return out;
}

}  // namespace

const char* monitor_status_name(MonitorStatus s) {
  switch (s) {
    case MonitorStatus::pass: return "pass";
    case MonitorStatus::fail: return "fail";
    case MonitorStatus::not_applicable: return "not_applicable";
  }
  return "fail";
}

MonitorVerdict energy_ledger(const NormSeries& series) {
  require_samples(series);
  MonitorVerdict v;
  v.monitor = "energy_ledger";
  const double e0 = series.l2[0] * series.l2[0];
  const double scale = std::max(e0, 1e-300);
  double worst = 0.0;
  double worst_t = series.times[0];
  bool overshoot = false;
  for (std::size_t i = 0; i < series.samples(); ++i) {
    const double balance = series.l2[i] * series.l2[i] +
                           2.0 * series.params.mu * series.diss1_int[i] +
                           2.0 * series.params.nu * series.diss2_int[i];
    const double residual = std::abs(balance - e0) / scale;
    if (residual > worst) {
      worst = residual;
      worst_t = series.times[i];
    }
    if (balance - e0 > inequality_slack * scale) overshoot = true;
  }
  v.worst_violation = worst;
  v.t_at = worst_t;
  v.status = (worst <= ledger_residual_tol && !overshoot) ? MonitorStatus::pass
                                                          : MonitorStatus::fail;
  return v;
}

MonitorVerdict maximum_principle(const NormSeries& series, std::span<const double> p_list) {
  require_samples(series);
  MonitorVerdict v;
  v.monitor = "maximum_principle";
  double worst = 0.0;
  double worst_t = series.times[0];
  for (double p : p_list) {
    const std::vector<double>* values = nullptr;
    if (p == 2.0) values = &series.l2;
    else if (p == 4.0) values = &series.l4;
    else if (std::isinf(p)) values = &series.linf;
    else throw std::invalid_argument("maximum_principle: p must be one of 2, 4, inf");
    for (std::size_t i = 1; i < values->size(); ++i) {
      const double prev = (*values)[i - 1];
      const double cur = (*values)[i];
      const double allowed = prev * (1.0 + monotone_slack);
      if (cur > allowed) {
        const double excess = (cur - allowed) / std::max(prev, 1e-300);
        if (excess > worst) {
          worst = excess;
          worst_t = series.times[i];
        }
      }
    }
  }
  v.worst_violation = worst;
  v.t_at = worst_t;
  v.status = worst == 0.0 ? MonitorStatus::pass : MonitorStatus::fail;
  return v;
}

MonitorVerdict h1_bound(const NormSeries& series, const AqgParams& params) {
  require_samples(series);
  MonitorVerdict v;
  v.monitor = "h1_bound";
  if (classify(params) == Regime::other) {
    v.status = MonitorStatus::not_applicable;
    return v;
  }

  const std::vector<double> drive = h1_drive_integral(series);
  double best = 0.0;
  std::size_t peak = 0;
  double c_emp = 0.0;
  for (std::size_t i = 0; i < series.samples(); ++i) {
    if (series.h1[i] > best) {
      best = series.h1[i];
      peak = i;
    }
    c_emp = std::max(c_emp, series.h1[i] * series.h1[i] + drive[i]);
  }
  v.empirical_constant = c_emp;
  v.t_at = series.times[peak];

  const double t0 = series.times.front();
  const double t1 = series.times.back();
  const bool peak_in_first_half = series.times[peak] - t0 <= 0.5 * (t1 - t0);

  // Running max over the final quarter.
  std::size_t iq = 0;
  while (iq + 1 < series.samples() && series.times[iq] < t0 + 0.75 * (t1 - t0)) ++iq;
  double run_max = 0.0;
  for (std::size_t i = 0; i <= iq; ++i) run_max = std::max(run_max, series.h1[i]);
  const double at_quarter = std::max(run_max, 1e-300);
  for (std::size_t i = iq + 1; i < series.samples(); ++i)
    run_max = std::max(run_max, series.h1[i]);
  const double growth = (run_max - at_quarter) / at_quarter;

  if (peak_in_first_half || growth <= plateau_growth_tol) {
    v.status = MonitorStatus::pass;
    v.worst_violation = 0.0;
  } else {
    v.status = MonitorStatus::fail;
    v.worst_violation = growth;
  }
  return v;
}

MonitorVerdict hs_envelope(const NormSeries& series, double s) {
  require_samples(series);
  if (!(s > 1.0))
    throw std::invalid_argument("hs_envelope: s must exceed 1");
  std::size_t j = series.s_list.size();
  for (std::size_t i = 0; i < series.s_list.size(); ++i) {
    if (std::abs(series.s_list[i] - s) <= 1e-12) j = i;
  }
  if (j == series.s_list.size())
    throw std::invalid_argument("hs_envelope: s is not tracked by the series");

  MonitorVerdict v;
  v.monitor = "hs_envelope";
  const std::vector<double>& hs = series.hs[j];
  const std::vector<double> drive = h1_drive_integral(series);
  const double h0 = hs[0];
  double c_emp = 0.0;
  bool finite_envelope = true;
  double worst_t = series.times[0];
  for (std::size_t i = 1; i < series.samples(); ++i) {
    if (hs[i] == 0.0) continue;
    if (h0 == 0.0) {
      finite_envelope = false;  // growth out of zero admits no multiplicative bound
      worst_t = series.times[i];
      break;
    }
    const double growth = 2.0 * std::log(hs[i] / h0);
    if (growth <= 0.0) continue;
    if (drive[i] <= 0.0) {
      finite_envelope = false;
      worst_t = series.times[i];
      break;
    }
    c_emp = std::max(c_emp, growth / drive[i]);
  }
  v.empirical_constant = c_emp;
  v.t_at = worst_t;
  v.status = finite_envelope ? MonitorStatus::pass : MonitorStatus::fail;
  v.worst_violation = finite_envelope ? 0.0 : std::numeric_limits<double>::infinity();
  return v;
}

ContractionReport twin_experiment(const SpectralField& theta0, double delta,
                                  const AqgParams& params, const TimeStepper& stepper,
                                  const TwinOptions& options) {
  if (!(delta >= 0.0))
    throw std::invalid_argument("twin_experiment: delta must be nonnegative");
  if (!(options.s > 1.0))
    throw std::invalid_argument("twin_experiment: s must exceed 1");
  const GridSpec& grid = theta0.grid();

  SimState base(apply_dealias_mask(theta0));
  SimState twin = base;
  if (delta > 0.0) {
    RandomFieldSpec pspec;
    pspec.seed = options.perturbation_seed;
    pspec.band_limit = options.perturbation_band;
    pspec.norm_space = RandomFieldSpec::NormSpace::l2;
    pspec.target_norm = 1.0;
    const SpectralField direction = apply_dealias_mask(random_field(grid, pspec));
    const double base_l2 = l2_norm(base.theta);
    const double scale = delta * (base_l2 > 0.0 ? base_l2 : 1.0);
    twin = SimState(base.theta + scale * direction);
  }

  StepDriver drive_base(grid, params, stepper);
  StepDriver drive_twin(grid, params, stepper);

  ContractionReport report;
  report.delta = delta;
  report.identical = true;

  const FracWeight wa{Axis::x1, params.alpha};
  const FracWeight wb{Axis::x2, params.beta};
  std::vector<double> s_drive;
  for (double target : sample_times(options.horizon, options.sample_every)) {
    if (target > 0.0) {
      drive_base.advance_to(base, target);
      drive_twin.advance_to(twin, target);
    }
    report.times.push_back(target);
    report.omega_l2.push_back(l2_norm(twin.theta - base.theta));
    const double hs = sobolev_norm(twin.theta, options.s);
    const double da = sobolev_norm(twin.theta, options.s, SobolevFlavor::inhomogeneous, wa);
    const double db = sobolev_norm(twin.theta, options.s, SobolevFlavor::inhomogeneous, wb);
    s_drive.push_back(hs * hs + da * da + db * db);
    report.identical = report.identical && base.theta == twin.theta;
  }

  const double omega0 = report.omega_l2.front();
  double integral = 0.0;
  double c_emp = 0.0;
  double sup_drive = s_drive.empty() ? 0.0 : s_drive.front();
  for (std::size_t i = 1; i < report.times.size(); ++i) {
    integral += 0.5 * (report.times[i] - report.times[i - 1]) *
                (s_drive[i] + s_drive[i - 1]);
    sup_drive = std::max(sup_drive, s_drive[i]);
    if (omega0 > 0.0 && report.omega_l2[i] > omega0 && integral > 0.0) {
      c_emp = std::max(c_emp, 2.0 * std::log(report.omega_l2[i] / omega0) / integral);
    }
  }
  report.gronwall_constant = c_emp;
  report.gronwall_rate = c_emp * sup_drive;

  integral = 0.0;
  for (std::size_t i = 1; i < report.times.size(); ++i) {
    integral += 0.5 * (report.times[i] - report.times[i - 1]) *
                (s_drive[i] + s_drive[i - 1]);
    const double bound =
        omega0 * std::exp(0.5 * c_emp * integral) * (1.0 + 1e-9) + 1e-300;
    if (report.omega_l2[i] > bound && omega0 > 0.0) report.envelope_ok = false;
  }
  return report;
}

std::vector<SweepCell> regime_sweep(const SpectralField& theta0,
                                    std::span<const double> alphas,
                                    std::span<const double> betas, double mu, double nu,
                                    const TimeStepper& stepper,
                                    const SimulateOptions& options) {
  std::vector<SweepCell> cells;
  cells.reserve(alphas.size() * betas.size());
  for (double alpha : alphas) {
    for (double beta : betas) {
      SweepCell cell;
      cell.alpha = alpha;
      cell.beta = beta;
      const AqgParams params{alpha, beta, mu, nu};
      params.validate();
      cell.regime = classify(params);
      try {
        const SimulationResult run = simulate(theta0, params, stepper, options);
        const NormSeries& series = run.series;
        if (!series.hs.empty() && series.hs[0][0] > 0.0) {
          for (std::size_t i = 0; i < series.samples(); ++i)
            cell.max_hs_growth =
                std::max(cell.max_hs_growth, series.hs[0][i] / series.hs[0][0]);
        }
        const double plist[] = {2.0, 4.0, infinite_p};
        cell.verdicts.push_back(energy_ledger(series));
        cell.verdicts.push_back(maximum_principle(series, plist));
        cell.verdicts.push_back(h1_bound(series, params));
        if (!options.s_list.empty() && options.s_list[0] > 1.0)
          cell.verdicts.push_back(hs_envelope(series, options.s_list[0]));
      } catch (const BlowupError& e) {
        cell.blew_up = true;
        cell.blowup_t = e.diagnostic.t;
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace aqg
