#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

// Coin rotation C = e^{i xi} e^{-i theta sx} e^{-i phi sy} e^{-i delta sz}.
// Angles are radians; values outside [0, 2pi] are reduced mod 2pi.
struct CoinParams {
  double xi = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double delta = 0.0;
};

Eigen::Matrix2cd coin_matrix(const CoinParams& p);

struct SplitStepParams {
  CoinParams coin1;
  CoinParams coin2;
};

// alpha = hopping weight, beta = flip weight; constructor enforces
// alpha^2 + beta^2 = 1 within 1e-9 (throws std::invalid_argument).
struct DcaParams {
  double alpha;
  double beta;
  DcaParams(double alpha_, double beta_);
};

// One step: coin on the spin, then the conditional shift (up moves one
// site left, down one site right). In truncated mode the edge sites must
// hold exactly zero amplitude beforehand, else boundary_error.
SpinorState step_conventional(const SpinorState& state, const CoinParams& p);

// One step: coin1, shift up-component left, coin2, shift down-component
// right. Same boundary contract as step_conventional.
SpinorState step_split(const SpinorState& state, const SplitStepParams& p);

// One step of the cellular-automaton update: alpha * conditional shift
// minus i beta * spin flip.
SpinorState step_dca(const SpinorState& state, const DcaParams& p);

using Stepper = std::function<SpinorState(const SpinorState&)>;

// Applies the stepper n_steps times. If snapshots is non-null it receives
// the state after every step (n_steps entries, initial state excluded).
SpinorState evolve(SpinorState state, const Stepper& stepper, int n_steps,
                   std::vector<SpinorState>* snapshots = nullptr);

// Max entry-wise modulus of the difference between the assembled
// split-step operator (theta1, theta2, other angles zero) and the
// cellular-automaton operator with alpha = cos(theta2), beta = sin(theta2),
// as explicit matrices on the given lattice. theta1 defaults to the value
// that makes the two coincide; pass a nonzero theta1 to probe how far a
// mismatched coin strays from the automaton form.
double dca_equivalence_residual(double theta2, const LatticeSpec& lattice,
                                double theta1 = 0.0);

// Tagged union of the three walk kinds, carrying its parameters.
struct WalkSpec {
  enum class Kind { conventional, splitstep, dca };
  Kind kind = Kind::conventional;
  CoinParams coin;
  SplitStepParams split;
  DcaParams dca{1.0, 0.0};

  Stepper stepper() const;
};

}  // namespace qwalk
