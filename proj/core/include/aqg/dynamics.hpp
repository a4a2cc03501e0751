#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aqg/params.hpp"
#include "aqg/series.hpp"
#include "aqg/spectral_field.hpp"

namespace aqg {

enum class Scheme { ifrk4, ifeuler };

struct TimeStepper {
  Scheme scheme = Scheme::ifrk4;
  std::optional<double> dt;  // fixed step; nullopt resolves from the CFL number
  double cfl_number = 0.5;
  bool advection = true;  // false drops the nonlinear term (diagnostic runs)
};

struct SimState {
  double t = 0.0;
  SpectralField theta;
  double diss1_integral = 0.0;  // int_0^t ||d_1|^alpha theta|_{L^2}^2
  double diss2_integral = 0.0;  // int_0^t ||d_2|^beta theta|_{L^2}^2
  long step_count = 0;

  explicit SimState(SpectralField theta0) : theta(std::move(theta0)) {}
};

struct BlowupDiagnostic {
  double t = 0.0;
  long step_count = 0;
  double last_l2 = 0.0;
  double last_linf = 0.0;
};

class BlowupError : public std::runtime_error {
 public:
  explicit BlowupError(const BlowupDiagnostic& d);
  BlowupDiagnostic diagnostic;
};

/// Fourier symbol of mu |d_1|^{2 alpha} + nu |d_2|^{2 beta} in grid index
/// order.
std::vector<double> dissipation_symbol(const AqgParams& params, const GridSpec& grid);

/// u.grad theta with u = riesz_perp(theta), restricted to the dealias mask on
/// both sides: modes outside the mask are dropped from the input, and the
/// product is evaluated alias-free for every retained mode. The mean mode is
/// exactly zero.
SpectralField nonlinear_term(const SpectralField& theta);

/// One time step. The dissipation is integrated exactly (integrating factor);
/// the advection term advances with the chosen scheme. Dissipation integrals
/// accumulate by endpoint-corrected trapezoid, which matches the scheme's
/// fourth-order accuracy. Non-finite coefficients raise BlowupError carrying
/// the pre-step diagnostics.
SimState step(const SimState& state, const AqgParams& params, const TimeStepper& stepper);

struct SimulateOptions {
  double horizon = 1.0;
  double sample_every = 0.01;
  std::vector<double> s_list = {1.5};
  double cutoff_n = 0.0;      // > 0: evolve the cutoff system (modes in B(0, n))
  double snapshot_every = 0.0;  // > 0: retain fields at that cadence
};

struct Snapshot {
  double t = 0.0;
  SpectralField field;
};

struct SimulationResult {
  NormSeries series;
  std::vector<Snapshot> snapshots;
  SimState final_state;
};

/// Advance from theta0 (projected through the dealias mask, and the cutoff if
/// one is set) to the horizon, sampling norms on the uniform sample grid. The
/// last step of each interval is clipped so samples land exactly.
SimulationResult simulate(const SpectralField& theta0, const AqgParams& params,
                          const TimeStepper& stepper, const SimulateOptions& options);

struct GalerkinPairResult {
  double cutoff_n = 0.0;
  std::vector<double> times;
  std::vector<double> difference;  // |theta_n - theta_2n|_{H^{s_diff}}
  NormSeries coarse;
  NormSeries fine;
};

/// Evolve the cutoff systems at radii n and 2n side by side, each from its own
/// truncation of theta0, and record the norm of their difference at the sample
/// times.
GalerkinPairResult galerkin_pair(const SpectralField& theta0, const AqgParams& params,
                                 const TimeStepper& stepper, double horizon,
                                 double sample_every, double n_coarse,
                                 double s_diff = 0.0);

/// The uniform sample grid used by simulate: multiples of sample_every from 0
/// through the horizon, with the horizon always included.
std::vector<double> sample_times(double horizon, double sample_every);

/// Incremental form of simulate's inner loop for callers that interleave
/// several trajectories: advances a state to successive targets with clipped
/// steps, reusing the cached end-of-step stage evaluation between calls.
class StepDriver {
 public:
  StepDriver(const GridSpec& grid, const AqgParams& params, const TimeStepper& stepper,
             double cutoff_n = 0.0);
  ~StepDriver();
  StepDriver(StepDriver&&) noexcept;
  StepDriver& operator=(StepDriver&&) noexcept;

  /// Requires t_target >= state.t and a state previously advanced by this
  /// driver (or fresh at its initial time).
  void advance_to(SimState& state, double t_target);

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace aqg
