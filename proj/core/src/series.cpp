#include "vtx/series.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "vtx/snapshot.hpp"

namespace vtx {
namespace {

double parse_field(std::string_view s, int line) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("series line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

const std::vector<std::string>& series_columns() {
  static const std::vector<std::string> cols = {
      "step",         "time",         "peak_value",      "peak_x",
      "peak_y",       "peak_value_at_y1", "mass",        "p_tilde",
      "energy_zk",    "momentum_I_x", "momentum_I_y",    "boundary_flux_M",
      "p_tilde_drift_term", "ce_periodic"};
  return cols;
}

std::string format_float(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

SeriesWriter::SeriesWriter(std::ostream& out) : out_(out) {
  const auto& cols = series_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) out_ << (k ? "," : "") << cols[k];
  out_ << '\n';
  if (!out_) throw IoError("failed writing series header");
}

void SeriesWriter::append(const DiagnosticsRecord& r) {
  out_ << r.step;
  for (double v : {r.time, r.peak_value, r.peak_x, r.peak_y, r.peak_value_at_y1, r.mass, r.p_tilde, r.energy_zk,
                   r.momentum_I[0], r.momentum_I[1], r.boundary_flux_M, r.p_tilde_drift_term, r.ce_periodic}) {
    out_ << ',' << format_float(v);
  }
  out_ << '\n';
  if (!out_) throw IoError("failed writing series row " + std::to_string(rows_ + 1));
  ++rows_;
}

std::vector<DiagnosticsRecord> read_series(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw std::runtime_error("series is empty");
  std::string expected;
  for (const auto& c : series_columns()) expected += (expected.empty() ? "" : ",") + c;
  if (line != expected) throw std::runtime_error("series line 1: unexpected header");

  std::vector<DiagnosticsRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      cells.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (cells.size() != series_columns().size()) {
      throw std::runtime_error("series line " + std::to_string(line_no) + ": expected " +
                               std::to_string(series_columns().size()) + " columns");
    }
    DiagnosticsRecord r;
    const auto res = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), r.step);
    if (res.ec != std::errc() || res.ptr != cells[0].data() + cells[0].size()) {
      throw std::runtime_error("series line " + std::to_string(line_no) + ": bad step");
    }
    double* slots[] = {&r.time,          &r.peak_value,      &r.peak_x,        &r.peak_y,
                       &r.peak_value_at_y1, &r.mass,         &r.p_tilde,       &r.energy_zk,
                       &r.momentum_I[0], &r.momentum_I[1],   &r.boundary_flux_M, &r.p_tilde_drift_term,
                       &r.ce_periodic};
    for (std::size_t k = 0; k < std::size(slots); ++k) *slots[k] = parse_field(cells[k + 1], line_no);
    out.push_back(r);
  }
  return out;
}

void write_ce_csv(std::ostream& out, const std::vector<CeRow>& rows) {
  out << "f1,T,ce\n";
  for (const auto& r : rows) out << format_float(r.f1) << ',' << format_float(r.time) << ',' << format_float(r.ce) << '\n';
  if (!out) throw IoError("failed writing CE table");
}

}  // namespace vtx
