#include "qwalk/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qwalk {

void emit_csv(const std::vector<std::string>& headers,
              const std::vector<std::vector<double>>& rows,
              const std::string& path) {
  if (headers.empty()) throw std::invalid_argument("csv needs a header row");
  for (const auto& row : rows)
    if (row.size() != headers.size())
      throw std::invalid_argument("csv row width does not match header");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);

  for (size_t i = 0; i < headers.size(); ++i) {
    if (i) out << ',';
    out << headers[i];
  }
  out << '\n';

  char buf[40];
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out << buf;
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qwalk
