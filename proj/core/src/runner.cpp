#include "aqg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "aqg/io.hpp"
#include "aqg/lemma_suite.hpp"
#include "aqg/monitors.hpp"
#include "aqg/norms.hpp"
#include "aqg/random_field.hpp"

namespace aqg {
namespace {

SpectralField initial_condition(const RunConfig& cfg, const GridSpec& grid) {
  if (cfg.ic == "zero") return SpectralField(grid);
  if (cfg.ic == "cosx1") {
    // cos of the first coordinate: the two coefficients are exact.
    SpectralField f(grid);
    f.at_mode(1, 0) = 0.5;
    f.at_mode(-1, 0) = 0.5;
    return f;
  }
  if (cfg.ic == "random") {
    RandomFieldSpec spec;
    spec.seed = cfg.ic_seed;
    spec.band_limit = cfg.ic_band;
    spec.norm_space = cfg.ic_norm_space == "l2" ? RandomFieldSpec::NormSpace::l2
                                                : RandomFieldSpec::NormSpace::hs;
    spec.s = cfg.s_list.empty() ? 1.5 : cfg.s_list[0];
    spec.target_norm = cfg.ic_norm;
    return random_field(grid, spec);
  }
  if (cfg.ic == "file") {
    const io::SnapshotData snap = io::snapshot_read(cfg.ic_path);
    const GridSpec& g = snap.field.grid();
    if (g.n1 != grid.n1 || g.n2 != grid.n2 || g.box_size != grid.box_size)
      throw std::invalid_argument("initial snapshot grid does not match the configured grid");
    // Re-key the coefficients to the configured dealias policy.
    SpectralField f(grid);
    std::copy(snap.field.coeffs().begin(), snap.field.coeffs().end(),
              f.coeffs().begin());
    return f;
  }
  throw std::invalid_argument("unknown initial condition '" + cfg.ic + "'");
}

std::string blowup_json(const BlowupDiagnostic& d) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"t\": " << io::format_double(d.t) << ",\n";
  out << "  \"step_count\": " << d.step_count << ",\n";
  out << "  \"last_l2\": " << io::format_double(d.last_l2) << ",\n";
  out << "  \"last_linf\": " << io::format_double(d.last_linf) << "\n";
  out << "}\n";
  return out.str();
}

std::string verdicts_csv(const std::vector<MonitorVerdict>& verdicts) {
  std::ostringstream out;
  out << "monitor,status,worst_violation,t_at,empirical_constant\n";
  for (const MonitorVerdict& v : verdicts) {
    out << v.monitor << ',' << monitor_status_name(v.status) << ','
        << io::format_double(v.worst_violation) << ',' << io::format_double(v.t_at)
        << ',' << io::format_double(v.empirical_constant) << '\n';
  }
  return out.str();
}

void print_verdict(const MonitorVerdict& v) {
  std::printf("monitor %-18s %-15s worst=%.3g t=%.4g", v.monitor.c_str(),
              monitor_status_name(v.status), v.worst_violation, v.t_at);
  if (std::isfinite(v.empirical_constant))
    std::printf(" constant=%.6g", v.empirical_constant);
  std::printf("\n");
}

std::vector<MonitorVerdict> evaluate_monitors(const RunConfig& cfg,
                                              const NormSeries& series) {
  std::vector<MonitorVerdict> verdicts;
  const double plist[] = {2.0, 4.0, infinite_p};
  for (const std::string& name : cfg.monitors) {
    if (name == "energy_ledger") verdicts.push_back(energy_ledger(series));
    else if (name == "maximum_principle") verdicts.push_back(maximum_principle(series, plist));
    else if (name == "h1_bound") verdicts.push_back(h1_bound(series, cfg.params()));
    else if (name == "hs_envelope") verdicts.push_back(hs_envelope(series, cfg.s_list[0]));
  }
  return verdicts;
}

}  // namespace

std::filesystem::path resolve_output_dir(const RunConfig& cfg) {
  const char* root = std::getenv("AQG_OUTPUT_ROOT");
  std::filesystem::path dir =
      root && *root ? std::filesystem::path(root) / cfg.output_dir
                    : std::filesystem::path(cfg.output_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

int run_experiment(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const SpectralField theta0 = initial_condition(cfg, grid);
  const std::filesystem::path out = resolve_output_dir(cfg);
  io::write_text_file(out / "manifest.ini", render_config(cfg));

  SimulateOptions options = cfg.sim_options();
  try {
    const SimulationResult result = simulate(theta0, cfg.params(), cfg.stepper(), options);
    io::write_text_file(out / "norms.csv", io::norms_csv(result.series));
    io::snapshot_write(out / "final.aqgf", result.final_state.theta, result.final_state.t);
    if (!result.snapshots.empty()) {
      std::filesystem::create_directories(out / "snapshots");
      for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "snap_%05zu.aqgf", i);
        io::snapshot_write(out / "snapshots" / name, result.snapshots[i].field,
                           result.snapshots[i].t);
      }
    }
    if (cfg.charts) {
      const NormSeries& s = result.series;
      io::write_text_file(out / "chart_l2.svg", io::svg_line_chart("l2", s.times, s.l2));
      io::write_text_file(out / "chart_linf.svg", io::svg_line_chart("linf", s.times, s.linf));
      io::write_text_file(out / "chart_h1.svg", io::svg_line_chart("h1", s.times, s.h1));
      if (!s.hs.empty())
        io::write_text_file(out / "chart_hs.svg", io::svg_line_chart("hs", s.times, s.hs[0]));
    }

    const std::vector<MonitorVerdict> verdicts = evaluate_monitors(cfg, result.series);
    io::write_text_file(out / "verdicts.csv", verdicts_csv(verdicts));
    bool all_pass = true;
    for (const MonitorVerdict& v : verdicts) {
      print_verdict(v);
      all_pass = all_pass && v.passed();
    }
    return all_pass ? 0 : 1;
  } catch (const BlowupError& e) {
    io::write_text_file(out / "blowup.json", blowup_json(e.diagnostic));
    std::printf("blow-up at t=%.6g (step %ld, last l2=%.6g, last linf=%.6g)\n",
                e.diagnostic.t, e.diagnostic.step_count, e.diagnostic.last_l2,
                e.diagnostic.last_linf);
    return 2;
  }
}

int run_sweep(const RunConfig& cfg) {
  if (cfg.alpha_list.empty() || cfg.beta_list.empty())
    throw std::invalid_argument("sweep requires alpha_list and beta_list");
  const GridSpec grid = cfg.grid();
  const SpectralField theta0 = initial_condition(cfg, grid);
  const std::filesystem::path out = resolve_output_dir(cfg);
  io::write_text_file(out / "manifest.ini", render_config(cfg));

  const std::vector<SweepCell> cells = regime_sweep(
      theta0, cfg.alpha_list, cfg.beta_list, cfg.mu, cfg.nu, cfg.stepper(), cfg.sim_options());

  std::ostringstream csv;
  csv << "alpha,beta,regime,status,blowup_t,max_hs_growth,energy_ledger,"
         "maximum_principle,h1_bound,hs_envelope\n";
  for (const SweepCell& cell : cells) {
    csv << io::format_double(cell.alpha) << ',' << io::format_double(cell.beta) << ','
        << regime_name(cell.regime) << ',' << (cell.blew_up ? "blowup" : "ok") << ','
        << io::format_double(cell.blew_up ? cell.blowup_t : 0.0) << ','
        << io::format_double(cell.max_hs_growth);
    const char* names[] = {"energy_ledger", "maximum_principle", "h1_bound", "hs_envelope"};
    for (const char* name : names) {
      const MonitorVerdict* found = nullptr;
      for (const MonitorVerdict& v : cell.verdicts)
        if (v.monitor == name) found = &v;
      csv << ',' << (found ? monitor_status_name(found->status) : "none");
    }
    csv << '\n';
    std::printf("cell alpha=%.4g beta=%.4g regime=%s %s\n", cell.alpha, cell.beta,
                regime_name(cell.regime), cell.blew_up ? "blowup" : "ok");
  }
  io::write_text_file(out / "sweep.csv", csv.str());
  return 0;
}

int run_lemma_checks(const RunConfig& cfg) {
  const std::filesystem::path out = resolve_output_dir(cfg);
  io::write_text_file(out / "manifest.ini", render_config(cfg));
  LemmaSuiteOptions options;
  options.corpus = cfg.lemma_corpus;
  options.seed = cfg.lemma_seed;
  options.grid_n = cfg.lemma_grid;
  options.band = cfg.lemma_band;
  const LemmaSuiteResult result = run_lemma_suite(options);
  io::write_text_file(out / "lemmas.csv", lemmas_csv(result.rows));
  std::printf("interpolation: %d cases, constant one %s\n", result.interpolation_count,
              result.interpolation_all_hold ? "holds" : "VIOLATED");
  std::printf("commutator kernel: %s\n", result.kernel_all_hold ? "holds" : "VIOLATED");
  std::printf("riesz p=2: %s\n", result.riesz_p2_all_hold ? "holds" : "VIOLATED");
  std::printf("product max ratio: %.6g (refined %.6g)\n", result.product_max_ratio[0],
              result.product_max_ratio[1]);
  std::printf("embedding max ratio: %.6g (refined %.6g)\n",
              result.embedding_max_ratio[0], result.embedding_max_ratio[1]);
  std::printf("commutator max ratio: %.6g (refined %.6g)\n",
              result.commutator_max_ratio[0], result.commutator_max_ratio[1]);
  std::printf("riesz p=4 max ratio: %.6g (refined %.6g)\n",
              result.riesz_p4_max_ratio[0], result.riesz_p4_max_ratio[1]);
  return result.constant_one_hold() ? 0 : 1;
}

int run_twin(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const SpectralField theta0 = initial_condition(cfg, grid);
  const std::filesystem::path out = resolve_output_dir(cfg);
  io::write_text_file(out / "manifest.ini", render_config(cfg));

  TwinOptions options;
  options.horizon = cfg.horizon;
  options.sample_every = cfg.sample_every;
  options.s = cfg.s_list.empty() ? 1.5 : cfg.s_list[0];
  options.perturbation_seed = cfg.twin_seed;
  options.perturbation_band = cfg.twin_band;

  if (cfg.twin_delta == 0.0) {
    const ContractionReport report =
        twin_experiment(theta0, 0.0, cfg.params(), cfg.stepper(), options);
    std::printf("delta=0: trajectories %s\n",
                report.identical ? "identical" : "DIVERGED");
    return report.identical ? 0 : 1;
  }

  const ContractionReport big =
      twin_experiment(theta0, cfg.twin_delta, cfg.params(), cfg.stepper(), options);
  const ContractionReport small =
      twin_experiment(theta0, cfg.twin_delta / 10.0, cfg.params(), cfg.stepper(), options);

  std::ostringstream csv;
  csv << "t,omega_l2_delta,omega_l2_delta10\n";
  for (std::size_t i = 0; i < big.times.size(); ++i) {
    csv << io::format_double(big.times[i]) << ',' << io::format_double(big.omega_l2[i])
        << ',' << io::format_double(small.omega_l2[i]) << '\n';
  }
  io::write_text_file(out / "twin.csv", csv.str());

  const double terminal_big = big.omega_l2.back();
  const double terminal_small = small.omega_l2.back();
  const double ratio = terminal_small > 0.0 ? terminal_big / terminal_small : 0.0;
  std::printf("terminal separation %.6g vs %.6g, ratio %.4f\n", terminal_big,
              terminal_small, ratio);
  std::printf("gronwall constant %.6g, envelope %s\n", big.gronwall_constant,
              big.envelope_ok ? "holds" : "VIOLATED");
  const bool linear = ratio >= 9.0 && ratio <= 11.0;
  return (linear && big.envelope_ok && small.envelope_ok) ? 0 : 1;
}

int run_galerkin(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const SpectralField theta0 = initial_condition(cfg, grid);
  const std::filesystem::path out = resolve_output_dir(cfg);
  io::write_text_file(out / "manifest.ini", render_config(cfg));

  std::ostringstream summary;
  summary << "n,final_diff\n";
  std::vector<double> finals;
  for (double n : cfg.galerkin_n_list) {
    const GalerkinPairResult pair =
        galerkin_pair(theta0, cfg.params(), cfg.stepper(), cfg.horizon,
                      cfg.sample_every, n, cfg.galerkin_s_diff);
    std::ostringstream csv;
    csv << "t,diff\n";
    for (std::size_t i = 0; i < pair.times.size(); ++i)
      csv << io::format_double(pair.times[i]) << ','
          << io::format_double(pair.difference[i]) << '\n';
    char name[48];
    std::snprintf(name, sizeof name, "galerkin_n%g.csv", n);
    io::write_text_file(out / name, csv.str());
    finals.push_back(pair.difference.back());
    summary << io::format_double(n) << ',' << io::format_double(pair.difference.back())
            << '\n';
    std::printf("cutoff n=%g: terminal difference %.6g\n", n, pair.difference.back());
  }
  io::write_text_file(out / "galerkin.csv", summary.str());

  bool decreasing = true;
  for (std::size_t i = 1; i < finals.size(); ++i)
    decreasing = decreasing && finals[i] < finals[i - 1];
  if (finals.size() >= 2)
    std::printf("terminal differences %s\n",
                decreasing ? "strictly decreasing" : "NOT decreasing");
  return decreasing ? 0 : 1;
}

}  // namespace aqg
