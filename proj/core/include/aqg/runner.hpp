#pragma once

#include <filesystem>

#include "aqg/config.hpp"

namespace aqg {

/// Output directory for a config: $AQG_OUTPUT_ROOT (or the working directory)
/// joined with the config's output_dir. Created on demand.
std::filesystem::path resolve_output_dir(const RunConfig& cfg);

/// One monitored simulation. Writes manifest.ini, norms.csv, verdicts.csv,
/// final.aqgf, optional snapshots and charts. Returns 0 when every enabled
/// monitor passes, 1 on a monitor failure, 2 on blow-up (then blowup.json
/// holds the diagnostics instead of the series files).
int run_experiment(const RunConfig& cfg);

/// alpha_list x beta_list sweep of run configurations into sweep.csv; cell
/// blow-ups are recorded in their row and do not stop the sweep.
int run_sweep(const RunConfig& cfg);

/// Inequality corpus into lemmas.csv. Exit 0 iff the constant-one families
/// hold everywhere.
int run_lemma_checks(const RunConfig& cfg);

/// Perturbation-growth study at twin_delta and twin_delta/10 into twin.csv.
/// Exit 0 iff the terminal separation scales linearly in delta (ratio within
/// [9,11]); with twin_delta = 0, iff the trajectories are identical.
int run_twin(const RunConfig& cfg);

/// Cutoff-pair convergence study into galerkin.csv (plus one series file per
/// cutoff). Exit 0 iff the terminal differences strictly decrease along
/// galerkin_n_list.
int run_galerkin(const RunConfig& cfg);

}  // namespace aqg
