#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace fraclap::csvio {

/// Scientific notation with 17 significant digits; locale-independent.
inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

inline std::string fmt(int x) { return std::to_string(x); }

/// Minimal RFC-4180-style writer: one leading # comment line with the full
/// run configuration, a header row, then data rows.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::string& comment,
            const std::vector<std::string>& header)
      : os_(os) {
    os_ << "# " << comment << "\n";
    write_cells(header);
  }

  void row(const std::vector<std::string>& cells) { write_cells(cells); }

 private:
  void write_cells(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ",";
      os_ << cells[i];
    }
    os_ << "\n";
  }

  std::ostream& os_;
};

}  // namespace fraclap::csvio
