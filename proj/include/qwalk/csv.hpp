#pragma once

#include <string>
#include <vector>

namespace qwalk {

// Writes a comma-separated file: header row, then one line per row with
// every value printed to 17 significant digits (round-trip exact for
// doubles), LF line endings. Rows must all match the header width.
// I/O failures throw std::runtime_error naming the path.
void emit_csv(const std::vector<std::string>& headers,
              const std::vector<std::vector<double>>& rows,
              const std::string& path);

}  // namespace qwalk
