#include "aqg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace aqg::io {
namespace {

constexpr char snapshot_magic[4] = {'A', 'Q', 'G', 'F'};
constexpr std::uint32_t snapshot_version = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = b[0] | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
      (std::uint32_t(b[3]) << 24);
  return true;
}

bool get_f64(std::istream& in, double& v) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(b[i]) << (8 * i);
  std::memcpy(&v, &bits, 8);
  return true;
}

std::string column_label(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", s);
  return buf;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string norms_csv(const NormSeries& series) {
  std::ostringstream out;
  out << "t,l2,l4,linf,h1";
  for (double s : series.s_list) out << ",hs_" << column_label(s);
  out << ",d1a_hs,d2b_hs,d1a_h1,d2b_h1,diss1_int,diss2_int\n";
  for (std::size_t i = 0; i < series.samples(); ++i) {
    out << format_double(series.times[i]) << ',' << format_double(series.l2[i]) << ','
        << format_double(series.l4[i]) << ',' << format_double(series.linf[i]) << ','
        << format_double(series.h1[i]);
    for (std::size_t j = 0; j < series.s_list.size(); ++j)
      out << ',' << format_double(series.hs[j][i]);
    const double d1a = series.d1a_hs.empty() ? 0.0 : series.d1a_hs[0][i];
    const double d2b = series.d2b_hs.empty() ? 0.0 : series.d2b_hs[0][i];
    out << ',' << format_double(d1a) << ',' << format_double(d2b) << ','
        << format_double(series.d1a_h1[i]) << ',' << format_double(series.d2b_h1[i])
        << ',' << format_double(series.diss1_int[i]) << ','
        << format_double(series.diss2_int[i]) << '\n';
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("short write to '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void snapshot_write(const std::filesystem::path& path, const SpectralField& field,
                    double t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SnapshotError("cannot open '" + path.string() + "' for writing");
  out.write(snapshot_magic, 4);
  put_u32(out, snapshot_version);
  put_u32(out, static_cast<std::uint32_t>(field.grid().n1));
  put_u32(out, static_cast<std::uint32_t>(field.grid().n2));
  put_f64(out, field.grid().box_size);
  put_f64(out, t);
  for (double v : inverse_transform(field)) put_f64(out, v);
  if (!out) throw SnapshotError("short write to '" + path.string() + "'");
}

SnapshotData snapshot_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot read '" + path.string() + "'");
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, snapshot_magic, 4) != 0)
    throw SnapshotError("'" + path.string() + "' is not a field snapshot");
  std::uint32_t version = 0, n1 = 0, n2 = 0;
  double box = 0.0, t = 0.0;
  if (!get_u32(in, version) || !get_u32(in, n1) || !get_u32(in, n2) ||
      !get_f64(in, box) || !get_f64(in, t))
    throw SnapshotError("'" + path.string() + "' is truncated");
  if (version != snapshot_version)
    throw SnapshotError("unsupported snapshot version " + std::to_string(version));
  if (n1 < 4 || n2 < 4 || n1 % 2 != 0 || n2 % 2 != 0 || n1 > (1u << 16) ||
      n2 > (1u << 16) || !(box > 0.0))
    throw SnapshotError("'" + path.string() + "' has invalid dimensions");
  const GridSpec grid(static_cast<int>(n1), static_cast<int>(n2), box);
  std::vector<double> phys(grid.size());
  for (double& v : phys) {
    if (!get_f64(in, v)) throw SnapshotError("'" + path.string() + "' is truncated");
  }
  return SnapshotData{forward_transform(grid, phys), t};
}

std::string svg_line_chart(const std::string& title, const std::vector<double>& x,
                           const std::vector<double>& y) {
  const int width = 640, height = 400;
  const int ml = 60, mr = 20, mt = 40, mb = 40;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"monospace\" font-size=\"14\">"
      << title << "</text>\n";
  if (!x.empty() && x.size() == y.size()) {
    double x0 = x.front(), x1 = x.front(), y0 = y.front(), y1 = y.front();
    for (std::size_t i = 0; i < x.size(); ++i) {
      x0 = std::min(x0, x[i]); x1 = std::max(x1, x[i]);
      y0 = std::min(y0, y[i]); y1 = std::max(y1, y[i]);
    }
    if (x1 == x0) x1 = x0 + 1.0;
    if (y1 == y0) y1 = y0 + 1.0;
    const double pw = width - ml - mr, ph = height - mt - mb;
    out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double px = ml + (x[i] - x0) / (x1 - x0) * pw;
      const double py = mt + ph - (y[i] - y0) / (y1 - y0) * ph;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px, py);
      out << buf;
    }
    out << "\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"11\">"
                  "x: %g .. %g   y: %g .. %g</text>\n",
                  ml, height - 12, x0, x1, y0, y1);
    out << buf;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace aqg::io
