#include "aqg/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace aqg {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string_view item =
        trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  const std::string buf(s);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE) return false;
  out = v;
  return true;
}

bool parse_int(std::string_view s, long& out) {
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return false;
  out = v;
  return true;
}

bool parse_bool(std::string_view s, bool& out) {
  if (s == "true" || s == "on" || s == "1") { out = true; return true; }
  if (s == "false" || s == "off" || s == "0") { out = false; return true; }
  return false;
}

const std::set<std::string, std::less<>> known_sections = {
    "grid", "params", "stepper", "run", "initial", "sweep", "twin", "galerkin", "lemmas"};

const std::set<std::string, std::less<>> known_monitors = {
    "energy_ledger", "maximum_principle", "h1_bound", "hs_envelope"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

GridSpec RunConfig::grid() const {
  return GridSpec(n1, n2, box_size, dealias_fraction, cutoff_shape);
}

AqgParams RunConfig::params() const { return AqgParams{alpha, beta, mu, nu}; }

TimeStepper RunConfig::stepper() const {
  TimeStepper st;
  st.scheme = scheme;
  st.dt = dt;
  st.cfl_number = cfl;
  st.advection = advection;
  return st;
}

SimulateOptions RunConfig::sim_options() const {
  SimulateOptions opt;
  opt.horizon = horizon;
  opt.sample_every = sample_every;
  opt.s_list = s_list;
  opt.snapshot_every = snapshot_every;
  return opt;
}

ConfigParse parse_config(std::string_view text) {
  RunConfig cfg;
  std::vector<std::string> errors;
  std::set<std::string> seen;
  bool have_alpha = false;
  bool have_beta = false;

  auto error_at = [&errors](int line, const std::string& msg) {
    errors.push_back("line " + std::to_string(line) + ": " + msg);
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::size_t comment = line.find_first_of("#;");
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        error_at(line_no, "malformed section header");
        continue;
      }
      const std::string_view section = trim(line.substr(1, line.size() - 2));
      if (!known_sections.count(section))
        error_at(line_no, "unknown section '" + std::string(section) + "'");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      error_at(line_no, "expected key = value");
      continue;
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      error_at(line_no, "empty key");
      continue;
    }
    if (!seen.insert(key).second) {
      error_at(line_no, "duplicate key '" + key + "'");
      continue;
    }

    auto bad_value = [&] {
      error_at(line_no, "invalid value for '" + key + "'");
    };

    long iv = 0;
    double dv = 0.0;
    bool bv = false;
    if (key == "n1") { if (parse_int(value, iv)) cfg.n1 = static_cast<int>(iv); else bad_value(); }
    else if (key == "n2") { if (parse_int(value, iv)) cfg.n2 = static_cast<int>(iv); else bad_value(); }
    else if (key == "box_size") { if (parse_double(value, dv)) cfg.box_size = dv; else bad_value(); }
    else if (key == "dealias_fraction") { if (parse_double(value, dv)) cfg.dealias_fraction = dv; else bad_value(); }
    else if (key == "cutoff_shape") {
      if (value == "ball") cfg.cutoff_shape = CutoffShape::ball;
      else if (value == "square") cfg.cutoff_shape = CutoffShape::square;
      else bad_value();
    }
    else if (key == "alpha") { if (parse_double(value, dv)) { cfg.alpha = dv; have_alpha = true; } else bad_value(); }
    else if (key == "beta") { if (parse_double(value, dv)) { cfg.beta = dv; have_beta = true; } else bad_value(); }
    else if (key == "mu") { if (parse_double(value, dv)) cfg.mu = dv; else bad_value(); }
    else if (key == "nu") { if (parse_double(value, dv)) cfg.nu = dv; else bad_value(); }
    else if (key == "scheme") {
      if (value == "ifrk4") cfg.scheme = Scheme::ifrk4;
      else if (value == "ifeuler") cfg.scheme = Scheme::ifeuler;
      else bad_value();
    }
    else if (key == "dt") {
      if (value == "auto") cfg.dt.reset();
      else if (parse_double(value, dv)) cfg.dt = dv;
      else bad_value();
    }
    else if (key == "cfl") { if (parse_double(value, dv)) cfg.cfl = dv; else bad_value(); }
    else if (key == "advection") { if (parse_bool(value, bv)) cfg.advection = bv; else bad_value(); }
    else if (key == "T") { if (parse_double(value, dv)) cfg.horizon = dv; else bad_value(); }
    else if (key == "sample_every") { if (parse_double(value, dv)) cfg.sample_every = dv; else bad_value(); }
    else if (key == "s_list") {
      std::vector<double> list;
      bool good = true;
      for (const std::string& item : split_list(value)) {
        if (parse_double(item, dv)) list.push_back(dv);
        else good = false;
      }
      if (good && !list.empty()) cfg.s_list = list;
      else bad_value();
    }
    else if (key == "output_dir") { cfg.output_dir = std::string(value); }
    else if (key == "monitors") {
      if (value == "all") cfg.monitors.assign(known_monitors.begin(), known_monitors.end());
      else if (value == "none") cfg.monitors.clear();
      else {
        std::vector<std::string> list = split_list(value);
        bool good = !list.empty();
        for (const std::string& m : list)
          if (!known_monitors.count(m)) good = false;
        if (good) cfg.monitors = list;
        else bad_value();
      }
    }
    else if (key == "snapshot_every") { if (parse_double(value, dv)) cfg.snapshot_every = dv; else bad_value(); }
    else if (key == "charts") { if (parse_bool(value, bv)) cfg.charts = bv; else bad_value(); }
    else if (key == "ic") {
      if (value == "zero" || value == "cosx1" || value == "random" || value == "file")
        cfg.ic = std::string(value);
      else bad_value();
    }
    else if (key == "ic_seed") { if (parse_int(value, iv) && iv >= 0) cfg.ic_seed = static_cast<std::uint64_t>(iv); else bad_value(); }
    else if (key == "ic_band") { if (parse_int(value, iv)) cfg.ic_band = static_cast<int>(iv); else bad_value(); }
    else if (key == "ic_norm") { if (parse_double(value, dv)) cfg.ic_norm = dv; else bad_value(); }
    else if (key == "ic_norm_space") {
      if (value == "hs" || value == "l2") cfg.ic_norm_space = std::string(value);
      else bad_value();
    }
    else if (key == "ic_path") { cfg.ic_path = std::string(value); }
    else if (key == "alpha_list" || key == "beta_list") {
      std::vector<double> list;
      bool good = true;
      for (const std::string& item : split_list(value)) {
        if (parse_double(item, dv)) list.push_back(dv);
        else good = false;
      }
      if (good && !list.empty()) (key == "alpha_list" ? cfg.alpha_list : cfg.beta_list) = list;
      else bad_value();
    }
    else if (key == "twin_delta") { if (parse_double(value, dv)) cfg.twin_delta = dv; else bad_value(); }
    else if (key == "twin_seed") { if (parse_int(value, iv) && iv >= 0) cfg.twin_seed = static_cast<std::uint64_t>(iv); else bad_value(); }
    else if (key == "twin_band") { if (parse_int(value, iv)) cfg.twin_band = static_cast<int>(iv); else bad_value(); }
    else if (key == "galerkin_n_list") {
      std::vector<double> list;
      bool good = true;
      for (const std::string& item : split_list(value)) {
        if (parse_double(item, dv)) list.push_back(dv);
        else good = false;
      }
      if (good && !list.empty()) cfg.galerkin_n_list = list;
      else bad_value();
    }
    else if (key == "galerkin_s_diff") { if (parse_double(value, dv)) cfg.galerkin_s_diff = dv; else bad_value(); }
    else if (key == "lemma_corpus") { if (parse_int(value, iv)) cfg.lemma_corpus = static_cast<int>(iv); else bad_value(); }
    else if (key == "lemma_seed") { if (parse_int(value, iv) && iv >= 0) cfg.lemma_seed = static_cast<std::uint64_t>(iv); else bad_value(); }
    else if (key == "lemma_grid") { if (parse_int(value, iv)) cfg.lemma_grid = static_cast<int>(iv); else bad_value(); }
    else if (key == "lemma_band") { if (parse_int(value, iv)) cfg.lemma_band = static_cast<int>(iv); else bad_value(); }
    else {
      error_at(line_no, "unknown key '" + key + "'");
    }
  }

  // Range and cross-field validation; every violation is reported.
  auto check = [&errors](bool ok, const std::string& msg) {
    if (!ok) errors.push_back(msg);
  };
  check(cfg.n1 >= 4 && cfg.n1 % 2 == 0, "n1 must be an even integer >= 4");
  check(cfg.n2 >= 4 && cfg.n2 % 2 == 0, "n2 must be an even integer >= 4");
  check(cfg.box_size > 0.0, "box_size must be positive");
  check(cfg.dealias_fraction > 0.0 && cfg.dealias_fraction <= 1.0,
        "dealias_fraction outside (0,1]");
  check(have_alpha, "missing required key 'alpha'");
  check(have_beta, "missing required key 'beta'");
  if (have_alpha) check(cfg.alpha > 0.0 && cfg.alpha <= 1.0, "alpha outside (0,1]");
  if (have_beta) check(cfg.beta > 0.0 && cfg.beta <= 1.0, "beta outside (0,1]");
  check(cfg.mu >= 0.0, "mu must be nonnegative");
  check(cfg.nu >= 0.0, "nu must be nonnegative");
  check(!cfg.dt || *cfg.dt > 0.0, "dt must be positive or auto");
  check(cfg.cfl > 0.0 && cfg.cfl <= 1.0, "cfl outside (0,1]");
  check(cfg.horizon > 0.0, "T must be positive");
  check(cfg.sample_every > 0.0 && cfg.sample_every <= cfg.horizon,
        "sample_every must lie in (0, T]");
  for (double s : cfg.s_list)
    check(std::isfinite(s), "s_list entries must be finite");
  check(cfg.snapshot_every >= 0.0, "snapshot_every must be nonnegative");
  check(cfg.ic_band >= 1, "ic_band must be a positive integer");
  if (cfg.ic == "random")
    check(cfg.ic_band < std::min(cfg.n1, cfg.n2) / 2,
          "ic_band must fit inside the grid");
  check(cfg.ic_norm >= 0.0 && std::isfinite(cfg.ic_norm), "ic_norm must be finite and nonnegative");
  check(cfg.ic != "file" || !cfg.ic_path.empty(), "ic = file requires ic_path");
  if (std::find(cfg.monitors.begin(), cfg.monitors.end(), "hs_envelope") != cfg.monitors.end())
    check(!cfg.s_list.empty() && cfg.s_list[0] > 1.0,
          "hs_envelope monitor requires the leading s_list entry to exceed 1");
  check(cfg.twin_delta >= 0.0, "twin_delta must be nonnegative");
  check(cfg.twin_band >= 1, "twin_band must be a positive integer");
  for (double n : cfg.galerkin_n_list)
    check(n > 0.0, "galerkin_n_list entries must be positive");
  check(cfg.lemma_corpus >= 1, "lemma_corpus must be a positive integer");
  check(cfg.lemma_grid >= 8 && cfg.lemma_grid % 2 == 0, "lemma_grid must be an even integer >= 8");
  check(cfg.lemma_band >= 1 && cfg.lemma_band < cfg.lemma_grid / 2,
        "lemma_band must fit inside the lemma grid");

  ConfigParse result;
  result.errors = std::move(errors);
  if (result.errors.empty()) result.config = std::move(cfg);
  return result;
}

ConfigParse parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ConfigParse result;
    result.errors.push_back("cannot read config file '" + path.string() + "'");
    return result;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const RunConfig& c) {
  std::ostringstream out;
  out << "[grid]\n";
  out << "n1 = " << c.n1 << "\n";
  out << "n2 = " << c.n2 << "\n";
  out << "box_size = " << fmt(c.box_size) << "\n";
  out << "dealias_fraction = " << fmt(c.dealias_fraction) << "\n";
  out << "cutoff_shape = " << (c.cutoff_shape == CutoffShape::ball ? "ball" : "square") << "\n";
  out << "\n[params]\n";
  out << "alpha = " << fmt(c.alpha) << "\n";
  out << "beta = " << fmt(c.beta) << "\n";
  out << "mu = " << fmt(c.mu) << "\n";
  out << "nu = " << fmt(c.nu) << "\n";
  out << "\n[stepper]\n";
  out << "scheme = " << (c.scheme == Scheme::ifrk4 ? "ifrk4" : "ifeuler") << "\n";
  out << "dt = " << (c.dt ? fmt(*c.dt) : std::string("auto")) << "\n";
  out << "cfl = " << fmt(c.cfl) << "\n";
  out << "advection = " << (c.advection ? "true" : "false") << "\n";
  out << "\n[run]\n";
  out << "T = " << fmt(c.horizon) << "\n";
  out << "sample_every = " << fmt(c.sample_every) << "\n";
  out << "s_list = ";
  for (std::size_t i = 0; i < c.s_list.size(); ++i)
    out << (i ? "," : "") << fmt(c.s_list[i]);
  out << "\n";
  out << "output_dir = " << c.output_dir << "\n";
  out << "monitors = ";
  if (c.monitors.empty()) {
    out << "none";
  } else {
    for (std::size_t i = 0; i < c.monitors.size(); ++i)
      out << (i ? "," : "") << c.monitors[i];
  }
  out << "\n";
  out << "snapshot_every = " << fmt(c.snapshot_every) << "\n";
  out << "charts = " << (c.charts ? "true" : "false") << "\n";
  out << "\n[initial]\n";
  out << "ic = " << c.ic << "\n";
  out << "ic_seed = " << c.ic_seed << "\n";
  out << "ic_band = " << c.ic_band << "\n";
  out << "ic_norm = " << fmt(c.ic_norm) << "\n";
  out << "ic_norm_space = " << c.ic_norm_space << "\n";
  if (!c.ic_path.empty()) out << "ic_path = " << c.ic_path << "\n";
  if (!c.alpha_list.empty() || !c.beta_list.empty()) {
    out << "\n[sweep]\n";
    if (!c.alpha_list.empty()) {
      out << "alpha_list = ";
      for (std::size_t i = 0; i < c.alpha_list.size(); ++i)
        out << (i ? "," : "") << fmt(c.alpha_list[i]);
      out << "\n";
    }
    if (!c.beta_list.empty()) {
      out << "beta_list = ";
      for (std::size_t i = 0; i < c.beta_list.size(); ++i)
        out << (i ? "," : "") << fmt(c.beta_list[i]);
      out << "\n";
    }
  }
  out << "\n[twin]\n";
  out << "twin_delta = " << fmt(c.twin_delta) << "\n";
  out << "twin_seed = " << c.twin_seed << "\n";
  out << "twin_band = " << c.twin_band << "\n";
  out << "\n[galerkin]\n";
  out << "galerkin_n_list = ";
  for (std::size_t i = 0; i < c.galerkin_n_list.size(); ++i)
    out << (i ? "," : "") << fmt(c.galerkin_n_list[i]);
  out << "\n";
  out << "galerkin_s_diff = " << fmt(c.galerkin_s_diff) << "\n";
  out << "\n[lemmas]\n";
  out << "lemma_corpus = " << c.lemma_corpus << "\n";
  out << "lemma_seed = " << c.lemma_seed << "\n";
  out << "lemma_grid = " << c.lemma_grid << "\n";
  out << "lemma_band = " << c.lemma_band << "\n";
  return out.str();
}

}  // namespace aqg
