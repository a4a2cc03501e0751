#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqg/series.hpp"
#include "aqg/spectral_field.hpp"

namespace aqg::io {

/// Shortest round-trip decimal rendering used by every CSV writer, so that
/// identical runs produce byte-identical files.
std::string format_double(double v);

/// norms.csv layout: t,l2,l4,linf,h1, one hs_<s> column per tracked s, then
/// d1a_hs,d2b_hs (for the leading s), d1a_h1,d2b_h1,diss1_int,diss2_int.
std::string norms_csv(const NormSeries& series);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field snapshot: "AQGF", u32 version, u32 n1, u32 n2, f64 box size, f64 t,
/// then n1*n2 f64 physical samples, row-major, all little-endian.
void snapshot_write(const std::filesystem::path& path, const SpectralField& field, double t);

struct SnapshotData {
  SpectralField field;
  double t;
};

/// Throws SnapshotError on bad magic, version, truncation, or invalid
/// dimensions.
SnapshotData snapshot_read(const std::filesystem::path& path);

/// Minimal self-contained line chart.
std::string svg_line_chart(const std::string& title, const std::vector<double>& x,
                           const std::vector<double>& y);

}  // namespace aqg::io
