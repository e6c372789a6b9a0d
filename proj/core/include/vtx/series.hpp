#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vtx/diagnostics.hpp"

namespace vtx {

/// Column names in DiagnosticsRecord order; momentum_I spans two columns.
const std::vector<std::string>& series_columns();

/// 17 significant digits; "nan" / "inf" / "-inf" for non-finite values.
std::string format_float(double v);

/// Writes the header on construction and one CSV row per append().
class SeriesWriter {
 public:
  explicit SeriesWriter(std::ostream& out);

  /// Throws IoError when the stream fails.
  void append(const DiagnosticsRecord& record);
  long rows() const { return rows_; }

 private:
  std::ostream& out_;
  long rows_ = 0;
};

/// Throws std::runtime_error naming the offending line.
std::vector<DiagnosticsRecord> read_series(std::istream& in);

struct CeRow {
  double f1 = 0.0;
  double time = 0.0;
  double ce = 0.0;
};

/// Columns f1, T, ce.
void write_ce_csv(std::ostream& out, const std::vector<CeRow>& rows);

}  // namespace vtx
