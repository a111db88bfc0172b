#include "swwave/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace swwave::io {

std::string format_full(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::string format_label(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string format_pixel(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

}  // namespace

std::string trace_csv(std::span<const TraceSample> samples) {
  std::string out = "t,x,z,x_prime,z_prime\n";
  for (const TraceSample& s : samples) {
    out += format_full(s.t);
    out += ',';
    out += format_full(s.x);
    out += ',';
    out += format_full(s.z);
    out += ',';
    out += format_full(s.dx);
    out += ',';
    out += format_full(s.dz);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "c0,regime,degenerate,drift_dx,loop_count\n";
  for (const SweepRow& row : rows) {
    out += format_full(row.c0);
    out += ',';
    out += to_string(row.regime.kind);
    out += ',';
    out += row.regime.degenerate ? '1' : '0';
    out += ',';
    if (row.has_drift) out += format_full(row.drift_dx);
    out += ',';
    out += std::to_string(row.loop_count);
    out += '\n';
  }
  return out;
}

std::string trace_svg(std::span<const TraceSample> samples, const std::string& title) {
  constexpr double width = 840.0, height = 560.0, margin = 64.0;
  double xlo = samples.empty() ? 0.0 : samples[0].x;
  double xhi = xlo, zlo = samples.empty() ? 0.0 : samples[0].z, zhi = zlo;
  for (const TraceSample& s : samples) {
    xlo = std::min(xlo, s.x);
    xhi = std::max(xhi, s.x);
    zlo = std::min(zlo, s.z);
    zhi = std::max(zhi, s.z);
  }
  if (xhi == xlo) xhi = xlo + 1.0;
  if (zhi == zlo) zhi = zlo + 1.0;
  const double sx = (width - 2.0 * margin) / (xhi - xlo);
  const double sz = (height - 2.0 * margin) / (zhi - zlo);
  const auto px = [&](double x) { return margin + (x - xlo) * sx; };
  const auto pz = [&](double z) { return height - margin - (z - zlo) * sz; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"840\" "
         "height=\"560\" viewBox=\"0 0 840 560\">\n";
  out += "  <rect width=\"840\" height=\"560\" fill=\"white\"/>\n";
  out += "  <text x=\"420\" y=\"28\" font-family=\"monospace\" font-size=\"15\" "
         "text-anchor=\"middle\">" + title + "</text>\n";
  // axes
  out += "  <line x1=\"" + format_pixel(margin) + "\" y1=\"" + format_pixel(height - margin) +
         "\" x2=\"" + format_pixel(width - margin) + "\" y2=\"" + format_pixel(height - margin) +
         "\" stroke=\"black\"/>\n";
  out += "  <line x1=\"" + format_pixel(margin) + "\" y1=\"" + format_pixel(margin) +
         "\" x2=\"" + format_pixel(margin) + "\" y2=\"" + format_pixel(height - margin) +
         "\" stroke=\"black\"/>\n";
  out += "  <text x=\"" + format_pixel(margin) + "\" y=\"" + format_pixel(height - margin + 20) +
         "\" font-family=\"monospace\" font-size=\"12\">" + format_label(xlo) + "</text>\n";
  out += "  <text x=\"" + format_pixel(width - margin) + "\" y=\"" +
         format_pixel(height - margin + 20) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" + format_label(xhi) +
         "</text>\n";
  out += "  <text x=\"" + format_pixel(margin - 6) + "\" y=\"" + format_pixel(height - margin) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" + format_label(zlo) +
         "</text>\n";
  out += "  <text x=\"" + format_pixel(margin - 6) + "\" y=\"" + format_pixel(margin + 4) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" + format_label(zhi) +
         "</text>\n";
  out += "  <text x=\"" + format_pixel(width - margin) + "\" y=\"" +
         format_pixel(height - margin + 36) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">x</text>\n";
  out += "  <text x=\"" + format_pixel(margin - 30) + "\" y=\"" + format_pixel(margin - 12) +
         "\" font-family=\"monospace\" font-size=\"12\">z</text>\n";

  out += "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.25\" points=\"";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i) out += ' ';
    out += format_pixel(px(samples[i].x));
    out += ',';
    out += format_pixel(pz(samples[i].z));
  }
  out += "\"/>\n</svg>\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  const std::filesystem::path temp = target.string() + ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!stream) throw std::runtime_error("short write to " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

}  // namespace swwave::io
