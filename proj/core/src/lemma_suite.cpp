#include "aqg/lemma_suite.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "aqg/io.hpp"
#include "aqg/random_field.hpp"

namespace aqg {
namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

SpectralField corpus_field(const GridSpec& grid, std::uint64_t seed, int band) {
  RandomFieldSpec spec;
  spec.seed = seed;
  spec.band_limit = band;
  spec.norm_space = RandomFieldSpec::NormSpace::l2;
  spec.target_norm = 1.0;
  return random_field(grid, spec);
}

}  // namespace

LemmaSuiteResult run_lemma_suite(const LemmaSuiteOptions& options) {
  LemmaSuiteResult result;
  const int corpus = std::max(1, options.corpus);
  const int pair_count = std::max(10, corpus / 4);
  const int half_count = std::max(10, corpus / 2);
  const GridSpec coarse(options.grid_n, options.grid_n);
  const GridSpec fine(2 * options.grid_n, 2 * options.grid_n);
  const std::uint64_t seed = options.seed;

  // Directional interpolation: constant-one family.
  {
    const double z_list[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < corpus; ++i) {
      const SpectralField f = corpus_field(coarse, seed + i, options.band);
      for (Axis axis : {Axis::x1, Axis::x2}) {
        for (double z : z_list) {
          const NormReport r = check_interpolation(f, axis, 1.0, 0.5, 1.5, z);
          ++result.interpolation_count;
          result.interpolation_all_hold =
              result.interpolation_all_hold && r.holds_with_constant_one;
          result.rows.push_back(LemmaCase{
              "interpolation",
              fmt("axis=%g z=%g field=%g", axis == Axis::x1 ? 1.0 : 2.0, z,
                  static_cast<double>(i)),
              r});
        }
      }
    }
  }

  // Product estimate: empirical constant, refinement stability.
  for (int level = 0; level < 2; ++level) {
    const GridSpec& grid = level == 0 ? coarse : fine;
    for (int i = 0; i < pair_count; ++i) {
      const SpectralField f = corpus_field(grid, seed + 1000 + 2 * i, options.band);
      const SpectralField g = corpus_field(grid, seed + 1000 + 2 * i + 1, options.band);
      const NormReport r = check_product(f, g, 0.5, 0.5);
      result.product_max_ratio[level] = std::max(result.product_max_ratio[level], r.ratio);
      if (level == 0)
        result.rows.push_back(
            LemmaCase{"product", fmt("s1=0.5 s2=0.5 pair=%g", i), r});
    }
  }

  // Sobolev embedding on the scaling line.
  for (int level = 0; level < 2; ++level) {
    const GridSpec& grid = level == 0 ? coarse : fine;
    const double sigmas[] = {0.25, 0.5};
    for (int i = 0; i < half_count; ++i) {
      const SpectralField f = corpus_field(grid, seed + 2000 + i, options.band);
      for (double sigma : sigmas) {
        const NormReport r = check_embedding(f, sigma, 2.0 / (1.0 - sigma));
        result.embedding_max_ratio[level] =
            std::max(result.embedding_max_ratio[level], r.ratio);
        if (level == 0)
          result.rows.push_back(
              LemmaCase{"embedding", fmt("sigma=%g field=%g", sigma, i), r});
      }
    }
  }

  // Commutator: exhaustive kernel scans plus a field corpus.
  for (double s : {1.25, 1.5, 2.0}) {
    const NormReport r = check_commutator_kernel(s, 8);
    result.kernel_all_hold = result.kernel_all_hold && r.holds_with_constant_one;
    result.rows.push_back(LemmaCase{"commutator_kernel", fmt("s=%g radius=8", s), r});
  }
  for (int level = 0; level < 2; ++level) {
    const GridSpec& grid = level == 0 ? coarse : fine;
    for (int i = 0; i < pair_count; ++i) {
      const SpectralField f = corpus_field(grid, seed + 3000 + 2 * i, options.band);
      const SpectralField g = corpus_field(grid, seed + 3000 + 2 * i + 1, options.band);
      const NormReport r = check_commutator(f, g, 1.5, 0.5);
      result.commutator_max_ratio[level] =
          std::max(result.commutator_max_ratio[level], r.ratio);
      if (level == 0)
        result.rows.push_back(
            LemmaCase{"commutator", fmt("s=1.5 alpha=0.5 pair=%g", i), r});
    }
  }

  // Riesz transforms: p = 2 is a constant-one family, p = 4 calibrates.
  for (int level = 0; level < 2; ++level) {
    const GridSpec& grid = level == 0 ? coarse : fine;
    for (int i = 0; i < half_count; ++i) {
      const SpectralField f = corpus_field(grid, seed + 4000 + i, options.band);
      const NormReport r2 = check_riesz_bound(f, 2.0);
      const NormReport r4 = check_riesz_bound(f, 4.0);
      if (level == 0) {
        result.riesz_p2_all_hold = result.riesz_p2_all_hold && r2.holds_with_constant_one;
        result.rows.push_back(LemmaCase{"riesz", fmt("p=2 field=%g", i), r2});
        result.rows.push_back(LemmaCase{"riesz", fmt("p=4 field=%g", i), r4});
      }
      result.riesz_p4_max_ratio[level] = std::max(result.riesz_p4_max_ratio[level], r4.ratio);
    }
  }

  return result;
}

std::string lemmas_csv(const std::vector<LemmaCase>& rows) {
  std::ostringstream out;
  out << "check,params,lhs,rhs,ratio,holds_with_constant_one\n";
  for (const LemmaCase& row : rows) {
    out << row.name << ',' << row.params << ',' << io::format_double(row.report.lhs)
        << ',' << io::format_double(row.report.rhs) << ','
        << io::format_double(row.report.ratio) << ','
        << (row.report.holds_with_constant_one ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace aqg
