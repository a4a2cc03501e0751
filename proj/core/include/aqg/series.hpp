#pragma once

#include <vector>

#include "aqg/params.hpp"

namespace aqg {

/// Time series of scalar diagnostics sampled along one simulation, plus the
/// coefficients the run used (monitors need mu/nu/alpha/beta to weigh the
/// dissipation terms). Per-index vectors line up with times; hs-type entries
/// line up with s_list.
struct NormSeries {
  AqgParams params{0.5, 0.5, 1.0, 1.0};
  std::vector<double> s_list;

  std::vector<double> times;
  std::vector<double> l2;
  std::vector<double> l4;
  std::vector<double> linf;
  std::vector<double> h1;
  std::vector<std::vector<double>> hs;       // |theta|_{H^s} per s in s_list
  std::vector<std::vector<double>> d1a_hs;   // ||d_1|^alpha theta|_{H^s}
  std::vector<std::vector<double>> d2b_hs;   // ||d_2|^beta theta|_{H^s}
  std::vector<double> d1a_h1;                // ||d_1|^alpha theta|_{H^1}
  std::vector<double> d2b_h1;                // ||d_2|^beta theta|_{H^1}
  std::vector<double> diss1_int;  // int_0^t ||d_1|^alpha theta|_{L^2}^2
  std::vector<double> diss2_int;  // int_0^t ||d_2|^beta theta|_{L^2}^2

  std::size_t samples() const { return times.size(); }
};

}  // namespace aqg
