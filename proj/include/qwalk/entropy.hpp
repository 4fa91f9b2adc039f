#pragma once

#include <Eigen/Core>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// 2x2 spin density matrix left after tracing out position:
// rho[s, s'] = sum_x psi_s(x) psi_s'(x)^*.
struct ReducedCoinDensity {
  Eigen::Matrix2cd matrix;
};

ReducedCoinDensity reduced_coin_density(const SpinorState& state);

// Base-2 von Neumann entropy of the reduced spin state, in [0, 1].
// Eigenvalues come from the closed form (1 +- sqrt(1 - 4 det)) / 2;
// rounding may push the small one into [-1e-12, 0), which is clipped,
// while anything more negative throws std::domain_error.
double entanglement_entropy(const SpinorState& state);

// Entropy after each step, length n_steps + 1, starting at the (product)
// initial state.
std::vector<double> entropy_time_series(const InitialCondition& init,
                                        const Stepper& stepper, int n_steps,
                                        const LatticeSpec& lattice);

// Grid of end-of-run entropies. axis1/axis2 are either the Bloch angles
// of the initial state (walk fixed) or theta1/theta2 of the split-step
// coins (initial state fixed). Cells are independent; jobs > 1 fans them
// out over threads, and the result layout is row-major in axis1.
struct EntropySweep {
  enum class Kind { initial_state, coin_angles };
  Kind kind = Kind::initial_state;
  std::vector<double> axis1;
  std::vector<double> axis2;
  WalkSpec walk;
  InitialCondition init;
};

std::vector<double> entropy_sweep(const EntropySweep& sweep, int n_steps,
                                  const LatticeSpec& lattice, int jobs = 1);

}  // namespace qwalk
