#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/entropy.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Invalid or inconsistent run configuration, reported before any
// computation starts.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Inclusive linear range for one sweep axis; count >= 1 points.
struct GridAxis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
};

std::vector<double> axis_values(const GridAxis& axis);

struct RunConfig {
  enum class Mode { walk, spectrum, zitter, entropy, sweep };
  Mode mode = Mode::walk;

  WalkSpec walk;  // walk / entropy / sweep modes
  double theta1 = 0.0;  // spectrum / zitter point values
  double theta2 = 0.0;
  double k = 0.0;
  InitialCondition init{0.0, 0.0, 0};
  int steps = -1;  // -1 picks the mode default (walk/entropy 100, sweep 90)
  int n_max = 0;   // 0 sizes the lattice to the step count
  Boundary boundary = Boundary::truncated;
  std::vector<GridAxis> grid;
  std::string out;
  int jobs = 1;
  UnitsConfig units;
};

// Validates, computes, and writes the CSV for cfg. Throws config_error
// for bad configurations, the numerical-domain errors from the compute
// layers for runs that hit one, and std::runtime_error for I/O failures.
void run(const RunConfig& cfg);

// run() wrapped into process exit conventions: 0 success, 2 config
// error, 3 numerical-domain error, 1 anything else; diagnostics go to
// diag.
int run_cli(const RunConfig& cfg, std::ostream& diag);

}  // namespace qwalk
