#include "aqg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aqg/fft.hpp"
#include "aqg/norms.hpp"
#include "aqg/operators.hpp"

namespace aqg {
namespace {

constexpr double auto_dt_velocity_floor = 1e-12;

std::string blowup_message(const BlowupDiagnostic& d) {
  return "solution lost regularity near t = " + std::to_string(d.t);
}

SpectralField project(const SpectralField& f, double cutoff_n) {
  SpectralField out = apply_dealias_mask(f);
  if (cutoff_n > 0.0) out = spectral_cutoff(out, cutoff_n);
  return out;
}

bool finite(const SpectralField& f) {
  for (const auto& c : f.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

/// Bound dynamics for one (grid, params, stepper, cutoff) tuple: caches the
/// dissipation symbol and reuses each step's endpoint nonlinear evaluation as
/// the next step's first stage.
class Propagator {
 public:
  Propagator(const GridSpec& grid, const AqgParams& params,
             const TimeStepper& stepper, double cutoff_n)
      : grid_(grid), params_(params), stepper_(stepper), cutoff_n_(cutoff_n) {
    params_.validate();
    if (stepper_.dt && !(*stepper_.dt > 0.0))
      throw std::invalid_argument("TimeStepper: dt must be positive");
    if (!(stepper_.cfl_number > 0.0) || stepper_.cfl_number > 1.0)
      throw std::invalid_argument("TimeStepper: cfl number outside (0,1]");
    symbol_.resize(grid.size());
    w1_.resize(grid.size());
    w2_.resize(grid.size());
    for (int i1 = 0; i1 < grid.n1; ++i1) {
      const double k1 = std::abs(grid.kappa1(grid.mode1(i1)));
      const double d1 = k1 == 0.0 ? 0.0 : std::pow(k1, 2.0 * params.alpha);
      for (int i2 = 0; i2 < grid.n2; ++i2) {
        const double k2 = std::abs(grid.kappa2(grid.mode2(i2)));
        const double d2 = k2 == 0.0 ? 0.0 : std::pow(k2, 2.0 * params.beta);
        const std::size_t idx = grid.index(i1, i2);
        w1_[idx] = d1;
        w2_[idx] = d2;
        symbol_[idx] = params.mu * d1 + params.nu * d2;
      }
    }
  }

  const std::vector<double>& symbol() const { return symbol_; }

  void drop_cache() { nl_cache_.reset(); }

  /// Steps until state.t == t_target, clipping the final step.
  void advance_to(SimState& state, double t_target) {
    const double eps = 1e-12 * std::max(1.0, std::abs(t_target));
    while (state.t < t_target - eps) {
      const double dt = std::min(nominal_dt(state), t_target - state.t);
      state = step_once(state, dt);
      if (std::abs(state.t - t_target) <= eps) state.t = t_target;
    }
    state.t = t_target;
  }

  SimState single_step(const SimState& state) {
    return step_once(state, nominal_dt(state));
  }

 private:
  double nominal_dt(const SimState& state) const {
    if (stepper_.dt) return *stepper_.dt;
    const VelocityField v = riesz_perp(state.theta);
    const std::vector<double> u1 = inverse_transform(v.u1);
    const std::vector<double> u2 = inverse_transform(v.u2);
    double umax = 0.0;
    for (std::size_t i = 0; i < u1.size(); ++i)
      umax = std::max(umax, std::max(std::abs(u1[i]), std::abs(u2[i])));
    const double dx = std::min(grid_.grid_spacing1(), grid_.grid_spacing2());
    return stepper_.cfl_number * dx / std::max(umax, auto_dt_velocity_floor);
  }

  SpectralField rhs_nonlinear(const SpectralField& theta) const {
    if (!stepper_.advection) return SpectralField(grid_);
    SpectralField n = nonlinear_term(theta);
    if (cutoff_n_ > 0.0) n = spectral_cutoff(n, cutoff_n_);
    return n;
  }

  // L^2-squared dissipation integrands and their time derivatives; ddot uses
  // d_t c = -(symbol c + nhat).
  void integrands(const SpectralField& theta, const SpectralField& nhat,
                  double& i1, double& i2, double& di1, double& di2) const {
    const double l2box = grid_.box_size * grid_.box_size;
    auto c = theta.coeffs();
    auto n = nhat.coeffs();
    double s1 = 0.0, s2 = 0.0, ds1 = 0.0, ds2 = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double e = std::norm(c[i]);
      const double r =
          c[i].real() * (-symbol_[i] * c[i].real() - n[i].real()) +
          c[i].imag() * (-symbol_[i] * c[i].imag() - n[i].imag());
      s1 += w1_[i] * e;
      s2 += w2_[i] * e;
      ds1 += w1_[i] * r;
      ds2 += w2_[i] * r;
    }
    i1 = l2box * s1;
    i2 = l2box * s2;
    di1 = 2.0 * l2box * ds1;
    di2 = 2.0 * l2box * ds2;
  }

  // The integrating factors only depend on dt, which advance_to holds fixed
  // until the final clipped step; recompute them on change only.
  void refresh_exponentials(double dt) {
    if (dt == exp_dt_) return;
    const std::size_t m = grid_.size();
    efull_.resize(m);
    ehalf_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      efull_[i] = std::exp(-dt * symbol_[i]);
      ehalf_[i] = std::exp(-0.5 * dt * symbol_[i]);
    }
    exp_dt_ = dt;
  }

  SimState step_once(const SimState& state, double dt) {
    const std::size_t m = grid_.size();
    refresh_exponentials(dt);
    const std::vector<double>& efull = efull_;
    const std::vector<double>& ehalf = ehalf_;

    const SpectralField n1 = nl_cache_ ? std::move(*nl_cache_) : rhs_nonlinear(state.theta);
    nl_cache_.reset();

    auto th = state.theta.coeffs();
    SimState next{SpectralField(grid_)};
    auto out = next.theta.coeffs();

    if (stepper_.scheme == Scheme::ifeuler) {
      auto nc = n1.coeffs();
      for (std::size_t i = 0; i < m; ++i)
        out[i] = efull[i] * (th[i] - dt * nc[i]);
    } else {
      SpectralField sa(grid_), sb(grid_), sc(grid_);
      auto a = sa.coeffs();
      auto n1c = n1.coeffs();
      for (std::size_t i = 0; i < m; ++i)
        a[i] = ehalf[i] * (th[i] - 0.5 * dt * n1c[i]);
      const SpectralField n2 = rhs_nonlinear(sa);
      auto n2c = n2.coeffs();
      auto b = sb.coeffs();
      for (std::size_t i = 0; i < m; ++i)
        b[i] = ehalf[i] * th[i] - 0.5 * dt * n2c[i];
      const SpectralField n3 = rhs_nonlinear(sb);
      auto n3c = n3.coeffs();
      auto cc = sc.coeffs();
      for (std::size_t i = 0; i < m; ++i)
        cc[i] = efull[i] * th[i] - dt * ehalf[i] * n3c[i];
      const SpectralField n4 = rhs_nonlinear(sc);
      auto n4c = n4.coeffs();
      for (std::size_t i = 0; i < m; ++i) {
        out[i] = efull[i] * th[i] -
                 (dt / 6.0) * (efull[i] * n1c[i] +
                               2.0 * ehalf[i] * (n2c[i] + n3c[i]) + n4c[i]);
      }
    }

    if (!finite(next.theta)) {
      BlowupDiagnostic d;
      d.t = state.t + dt;
      d.step_count = state.step_count;
      d.last_l2 = l2_norm(state.theta);
      d.last_linf = lebesgue_norm(state.theta, infinite_p);
      throw BlowupError(d);
    }

    SpectralField n_end = rhs_nonlinear(next.theta);

    double i1a, i2a, di1a, di2a, i1b, i2b, di1b, di2b;
    integrands(state.theta, n1, i1a, i2a, di1a, di2a);
    integrands(next.theta, n_end, i1b, i2b, di1b, di2b);
    next.diss1_integral = state.diss1_integral + 0.5 * dt * (i1a + i1b) -
                          dt * dt / 12.0 * (di1b - di1a);
    next.diss2_integral = state.diss2_integral + 0.5 * dt * (i2a + i2b) -
                          dt * dt / 12.0 * (di2b - di2a);

    next.t = state.t + dt;
    next.step_count = state.step_count + 1;
    nl_cache_ = std::move(n_end);
    return next;
  }

  GridSpec grid_;
  AqgParams params_;
  TimeStepper stepper_;
  double cutoff_n_;
  std::vector<double> symbol_;
  std::vector<double> w1_;
  std::vector<double> w2_;
  double exp_dt_ = -1.0;
  std::vector<double> efull_;
  std::vector<double> ehalf_;
  std::optional<SpectralField> nl_cache_;
};

void record_sample(NormSeries& series, const SimState& state, const AqgParams& params,
                   const std::vector<double>& s_list) {
  const SpectralField& theta = state.theta;
  const double cell = theta.grid().cell_area();
  const std::vector<double> phys = inverse_transform(theta);
  series.times.push_back(state.t);
  series.l2.push_back(detail::lp_quadrature(phys, 2.0, cell));
  series.l4.push_back(detail::lp_quadrature(phys, 4.0, cell));
  series.linf.push_back(detail::lp_quadrature(phys, infinite_p, cell));
  series.h1.push_back(sobolev_norm(theta, 1.0));
  const FracWeight wa{Axis::x1, params.alpha};
  const FracWeight wb{Axis::x2, params.beta};
  series.d1a_h1.push_back(sobolev_norm(theta, 1.0, SobolevFlavor::inhomogeneous, wa));
  series.d2b_h1.push_back(sobolev_norm(theta, 1.0, SobolevFlavor::inhomogeneous, wb));
  for (std::size_t j = 0; j < s_list.size(); ++j) {
    const double s = s_list[j];
    series.hs[j].push_back(sobolev_norm(theta, s));
    series.d1a_hs[j].push_back(sobolev_norm(theta, s, SobolevFlavor::inhomogeneous, wa));
    series.d2b_hs[j].push_back(sobolev_norm(theta, s, SobolevFlavor::inhomogeneous, wb));
  }
  series.diss1_int.push_back(state.diss1_integral);
  series.diss2_int.push_back(state.diss2_integral);
}

NormSeries make_series(const AqgParams& params, const std::vector<double>& s_list) {
  NormSeries series;
  series.params = params;
  series.s_list = s_list;
  series.hs.resize(s_list.size());
  series.d1a_hs.resize(s_list.size());
  series.d2b_hs.resize(s_list.size());
  return series;
}

}  // namespace

std::vector<double> sample_times(double horizon, double sample_every) {
  if (!(horizon > 0.0))
    throw std::invalid_argument("simulate: horizon must be positive");
  if (!(sample_every > 0.0))
    throw std::invalid_argument("simulate: sample interval must be positive");
  std::vector<double> times{0.0};
  const double eps = 1e-9 * std::max(1.0, horizon);
  for (long j = 1;; ++j) {
    const double t = j * sample_every;
    if (t > horizon + eps) break;
    times.push_back(std::min(t, horizon));
    if (std::abs(t - horizon) <= eps) return times;
  }
  times.push_back(horizon);
  return times;
}

class StepDriver::Impl {
 public:
  Impl(const GridSpec& grid, const AqgParams& params, const TimeStepper& stepper,
       double cutoff_n)
      : prop(grid, params, stepper, cutoff_n) {}
  Propagator prop;
};

StepDriver::StepDriver(const GridSpec& grid, const AqgParams& params,
                       const TimeStepper& stepper, double cutoff_n)
    : impl_(std::make_unique<Impl>(grid, params, stepper, cutoff_n)) {}

StepDriver::~StepDriver() = default;
StepDriver::StepDriver(StepDriver&&) noexcept = default;
StepDriver& StepDriver::operator=(StepDriver&&) noexcept = default;

void StepDriver::advance_to(SimState& state, double t_target) {
  if (t_target < state.t)
    throw std::invalid_argument("StepDriver: target time lies in the past");
  impl_->prop.advance_to(state, t_target);
}

BlowupError::BlowupError(const BlowupDiagnostic& d)
    : std::runtime_error(blowup_message(d)), diagnostic(d) {}

std::vector<double> dissipation_symbol(const AqgParams& params, const GridSpec& grid) {
  params.validate();
  std::vector<double> symbol(grid.size());
  for (int i1 = 0; i1 < grid.n1; ++i1) {
    const double k1 = std::abs(grid.kappa1(grid.mode1(i1)));
    const double d1 = k1 == 0.0 ? 0.0 : std::pow(k1, 2.0 * params.alpha);
    for (int i2 = 0; i2 < grid.n2; ++i2) {
      const double k2 = std::abs(grid.kappa2(grid.mode2(i2)));
      const double d2 = k2 == 0.0 ? 0.0 : std::pow(k2, 2.0 * params.beta);
      symbol[grid.index(i1, i2)] = params.mu * d1 + params.nu * d2;
    }
  }
  return symbol;
}

namespace {

// Largest integer mode the dealias mask can retain along an axis.
int mask_band(double radius, int n) {
  return std::max(0, std::min(static_cast<int>(radius), n / 2 - 1));
}

// Smallest even 5-smooth size exceeding three times the mask band. Products
// of mask-limited modes reach 2*band; wrapping by such a size pushes every
// alias image past the band, so the retained modes come out exact.
int product_transform_size(int band) {
  int m = 3 * band + 1;
  m += m % 2;
  m = std::max(m, 4);
  for (;; m += 2) {
    int r = m;
    for (int p : {2, 3, 5})
      while (r % p == 0) r /= p;
    if (r == 1) return m;
  }
}

}  // namespace

SpectralField nonlinear_term(const SpectralField& theta) {
  const GridSpec& g = theta.grid();
  const int b1 = mask_band(g.dealias_radius1(), g.n1);
  const int b2 = mask_band(g.dealias_radius2(), g.n2);
  const int m1 = product_transform_size(b1);
  const int m2 = product_transform_size(b2);
  const std::size_t msize = static_cast<std::size_t>(m1) * m2;

  thread_local std::vector<std::complex<double>> pu1, pu2, pd1, pd2;
  thread_local std::vector<std::complex<double>> zu1, zu2, zd1, zd2;
  pu1.assign(msize, 0.0);
  pu2.assign(msize, 0.0);
  pd1.assign(msize, 0.0);
  pd2.assign(msize, 0.0);
  if (zu1.size() != msize) {
    zu1.resize(msize);
    zu2.resize(msize);
    zd1.resize(msize);
    zd2.resize(msize);
  }

  // Velocity and gradient are diagonal multipliers, so they can be fused into
  // the scatter that lays the masked modes out on the quadrature grid.
  const auto tc = theta.coeffs();
  for (int k1 = -b1; k1 <= b1; ++k1) {
    const double kappa1 = g.kappa1(k1);
    const std::size_t row =
        static_cast<std::size_t>(GridSpec::index_of(k1, g.n1)) * g.n2;
    const std::size_t prow =
        static_cast<std::size_t>(GridSpec::index_of(k1, m1)) * m2;
    for (int k2 = -b2; k2 <= b2; ++k2) {
      if (!g.in_dealias_mask(k1, k2)) continue;
      const std::complex<double> c = tc[row + GridSpec::index_of(k2, g.n2)];
      const std::size_t p = prow + GridSpec::index_of(k2, m2);
      const double kappa2 = g.kappa2(k2);
      const double norm = std::hypot(kappa1, kappa2);
      if (norm != 0.0) {
        pu1[p] = c * std::complex<double>(0.0, -kappa2 / norm);
        pu2[p] = c * std::complex<double>(0.0, kappa1 / norm);
      }
      pd1[p] = c * std::complex<double>(0.0, kappa1);
      pd2[p] = c * std::complex<double>(0.0, kappa2);
    }
  }

  fft::inverse(m1, m2, pu1.data(), zu1.data());
  fft::inverse(m1, m2, pu2.data(), zu2.data());
  fft::inverse(m1, m2, pd1.data(), zd1.data());
  fft::inverse(m1, m2, pd2.data(), zd2.data());
  for (std::size_t i = 0; i < msize; ++i)
    pu1[i] = zu1[i].real() * zd1[i].real() + zu2[i].real() * zd2[i].real();
  fft::forward(m1, m2, pu1.data(), zu1.data());

  SpectralField out(g);
  auto oc = out.coeffs();
  const double scale = 1.0 / static_cast<double>(msize);
  for (int k1 = -b1; k1 <= b1; ++k1) {
    const std::size_t row =
        static_cast<std::size_t>(GridSpec::index_of(k1, g.n1)) * g.n2;
    const std::size_t prow =
        static_cast<std::size_t>(GridSpec::index_of(k1, m1)) * m2;
    for (int k2 = -b2; k2 <= b2; ++k2) {
      if (!g.in_dealias_mask(k1, k2)) continue;
      oc[row + GridSpec::index_of(k2, g.n2)] =
          scale * zu1[prow + GridSpec::index_of(k2, m2)];
    }
  }
  out.enforce_hermitian();
  // grad applied to theta and a divergence-free u make the advection term
  // mean-free; pin the roundoff remnant so the mean mode is conserved exactly.
  out.at_mode(0, 0) = 0.0;
  return out;
}

SimState step(const SimState& state, const AqgParams& params, const TimeStepper& stepper) {
  Propagator prop(state.theta.grid(), params, stepper, 0.0);
  return prop.single_step(state);
}

SimulationResult simulate(const SpectralField& theta0, const AqgParams& params,
                          const TimeStepper& stepper, const SimulateOptions& options) {
  const std::vector<double> times = sample_times(options.horizon, options.sample_every);
  Propagator prop(theta0.grid(), params, stepper, options.cutoff_n);

  SimulationResult result{make_series(params, options.s_list), {},
                          SimState(project(theta0, options.cutoff_n))};
  SimState& state = result.final_state;

  double next_snapshot = 0.0;
  for (double target : times) {
    if (target > 0.0) prop.advance_to(state, target);
    record_sample(result.series, state, params, options.s_list);
    if (options.snapshot_every > 0.0 &&
        state.t >= next_snapshot - 1e-9 * std::max(1.0, options.horizon)) {
      result.snapshots.push_back(Snapshot{state.t, state.theta});
      next_snapshot = state.t + options.snapshot_every;
    }
  }
  return result;
}

GalerkinPairResult galerkin_pair(const SpectralField& theta0, const AqgParams& params,
                                 const TimeStepper& stepper, double horizon,
                                 double sample_every, double n_coarse, double s_diff) {
  const GridSpec& g = theta0.grid();
  // Both truncations must sit fully inside the dealias mask, or the finer
  // system would be clipped and stop being a sharp-cutoff evolution.
  const double mask_radius = std::min(g.dealias_radius1(), g.dealias_radius2());
  if (!(n_coarse > 0.0) || 2.0 * n_coarse > mask_radius)
    throw std::invalid_argument(
        "galerkin_pair: twice the cutoff must fit inside the dealias mask");
  const std::vector<double> times = sample_times(horizon, sample_every);

  Propagator prop_coarse(g, params, stepper, n_coarse);
  Propagator prop_fine(g, params, stepper, 2.0 * n_coarse);

  GalerkinPairResult result;
  result.cutoff_n = n_coarse;
  result.coarse = make_series(params, {});
  result.fine = make_series(params, {});

  SimState coarse(project(theta0, n_coarse));
  SimState fine(project(theta0, 2.0 * n_coarse));

  for (double target : times) {
    if (target > 0.0) {
      prop_coarse.advance_to(coarse, target);
      prop_fine.advance_to(fine, target);
    }
    record_sample(result.coarse, coarse, params, {});
    record_sample(result.fine, fine, params, {});
    result.times.push_back(target);
    result.difference.push_back(sobolev_norm(coarse.theta - fine.theta, s_diff));
  }
  return result;
}

}  // namespace aqg
