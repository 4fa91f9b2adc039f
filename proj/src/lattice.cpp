#include "qwalk/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

void validate(const UnitsConfig& units) {
  if (units.a <= 0 || units.tau <= 0 || units.hbar <= 0 || units.c <= 0)
    throw std::invalid_argument("units must be strictly positive");
}

void validate(const LatticeSpec& lattice) {
  if (lattice.n_max <= 0)
    throw std::invalid_argument("lattice half-width must be positive");
}

SpinorState make_initial_state(const InitialCondition& init,
                               const LatticeSpec& lattice) {
  validate(lattice);
  if (init.x0 < -lattice.n_max || init.x0 > lattice.n_max)
    throw std::out_of_range("initial site " + std::to_string(init.x0) +
                            " outside lattice of half-width " +
                            std::to_string(lattice.n_max));
  SpinorState state{lattice, std::vector<cmplx>(2 * lattice.sites(), 0.0)};
  state.at(init.x0, 0) = std::cos(init.omega_p / 2.0);
  state.at(init.x0, 1) =
      std::exp(cmplx(0.0, init.omega_a)) * std::sin(init.omega_p / 2.0);
  return state;
}

std::vector<double> position_distribution(const SpinorState& state) {
  std::vector<double> p(state.lattice.sites());
  for (int i = 0; i < state.lattice.sites(); ++i)
    p[i] = std::norm(state.amp[2 * i]) + std::norm(state.amp[2 * i + 1]);
  return p;
}

double state_norm(const SpinorState& state) {
  double total = 0.0;
  for (const cmplx& a : state.amp) total += std::norm(a);
  return std::sqrt(total);
}

}  // namespace qwalk
