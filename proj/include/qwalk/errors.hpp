#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Walker support reached the edge of a truncated lattice.
struct boundary_error : std::runtime_error {
  explicit boundary_error(const std::string& what) : std::runtime_error(what) {}
};

// Quantity requested at a degenerate point where it is ill-defined.
struct degeneracy_error : std::runtime_error {
  explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qwalk
