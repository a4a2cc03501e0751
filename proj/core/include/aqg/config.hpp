#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aqg/dynamics.hpp"
#include "aqg/grid.hpp"
#include "aqg/params.hpp"

namespace aqg {

/// Fully resolved experiment description. Defaults are usable as-is except for
/// alpha and beta, which a config must always supply.
struct RunConfig {
  // [grid]
  int n1 = 64;
  int n2 = 64;
  double box_size = 2.0 * std::numbers::pi;
  double dealias_fraction = 2.0 / 3.0;
  CutoffShape cutoff_shape = CutoffShape::ball;

  // [params]
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 1.0;
  double nu = 1.0;

  // [stepper]
  Scheme scheme = Scheme::ifrk4;
  std::optional<double> dt;  // nullopt: resolved from the CFL number
  double cfl = 0.5;
  bool advection = true;

  // [run]
  double horizon = 1.0;
  double sample_every = 0.01;
  std::vector<double> s_list = {1.5};
  std::string output_dir = "out";
  std::vector<std::string> monitors = {"energy_ledger", "maximum_principle",
                                       "h1_bound", "hs_envelope"};
  double snapshot_every = 0.0;
  bool charts = false;

  // [initial]
  std::string ic = "cosx1";  // zero | cosx1 | random | file
  std::uint64_t ic_seed = 1;
  int ic_band = 4;
  double ic_norm = 1.0;
  std::string ic_norm_space = "hs";  // hs | l2
  std::string ic_path;

  // [sweep]
  std::vector<double> alpha_list;
  std::vector<double> beta_list;

  // [twin]
  double twin_delta = 1e-6;
  std::uint64_t twin_seed = 77;
  int twin_band = 4;

  // [galerkin]
  std::vector<double> galerkin_n_list = {8.0, 16.0};
  double galerkin_s_diff = 0.0;

  // [lemmas]
  int lemma_corpus = 200;
  std::uint64_t lemma_seed = 2026;
  int lemma_grid = 32;
  int lemma_band = 8;

  GridSpec grid() const;
  AqgParams params() const;
  TimeStepper stepper() const;
  SimulateOptions sim_options() const;
};

/// Result of parsing: either a config or the full list of violations (the
/// parser does not stop at the first one). Section headers are validated but
/// group only; key names are globally unique, so placement does not change
/// meaning.
struct ConfigParse {
  std::optional<RunConfig> config;
  std::vector<std::string> errors;
  bool ok() const { return config.has_value(); }
};

ConfigParse parse_config(std::string_view text);
ConfigParse parse_config_file(const std::filesystem::path& path);

/// Round-trippable rendering of a resolved config (what run writes into the
/// output manifest).
std::string render_config(const RunConfig& cfg);

}  // namespace aqg
