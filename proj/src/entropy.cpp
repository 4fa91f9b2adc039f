#include "qwalk/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwalk/parallel.hpp"

namespace qwalk {

ReducedCoinDensity reduced_coin_density(const SpinorState& state) {
  double r00 = 0.0, r11 = 0.0;
  cmplx r01 = 0.0;
  const int n = state.lattice.sites();
  for (int i = 0; i < n; ++i) {
    const cmplx u = state.amp[2 * i], d = state.amp[2 * i + 1];
    r00 += std::norm(u);
    r11 += std::norm(d);
    r01 += u * std::conj(d);
  }
  ReducedCoinDensity rho;
  rho.matrix << r00, r01, std::conj(r01), r11;
  return rho;
}

double entanglement_entropy(const SpinorState& state) {
  const ReducedCoinDensity rho = reduced_coin_density(state);
  const double det = rho.matrix(0, 0).real() * rho.matrix(1, 1).real() -
                     std::norm(rho.matrix(0, 1));
  const double disc = std::max(0.0, 1.0 - 4.0 * det);
  const double root = std::sqrt(disc);
  const double lam[2] = {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
  double entropy = 0.0;
  for (double l : lam) {
    if (l < -1e-12)
      throw std::domain_error("reduced density matrix not positive");
    if (l > 0.0) entropy -= l * std::log2(l);
  }
  return std::clamp(entropy, 0.0, 1.0);
}

std::vector<double> entropy_time_series(const InitialCondition& init,
                                        const Stepper& stepper, int n_steps,
                                        const LatticeSpec& lattice) {
  if (n_steps < 0) throw std::invalid_argument("negative step count");
  SpinorState state = make_initial_state(init, lattice);
  std::vector<double> out;
  out.reserve(n_steps + 1);
  out.push_back(entanglement_entropy(state));
  for (int t = 0; t < n_steps; ++t) {
    state = stepper(state);
    out.push_back(entanglement_entropy(state));
  }
  return out;
}

std::vector<double> entropy_sweep(const EntropySweep& sweep, int n_steps,
                                  const LatticeSpec& lattice, int jobs) {
  if (sweep.axis1.empty() || sweep.axis2.empty())
    throw std::invalid_argument("sweep axes must be non-empty");
  if (sweep.kind == EntropySweep::Kind::coin_angles &&
      sweep.walk.kind != WalkSpec::Kind::splitstep)
    throw std::invalid_argument("angle sweeps need a split-step walk");

  const int n2 = static_cast<int>(sweep.axis2.size());
  const int cells = static_cast<int>(sweep.axis1.size()) * n2;
  std::vector<double> out(cells);
  parallel_for(cells, jobs, [&](int cell) {
    const double v1 = sweep.axis1[cell / n2];
    const double v2 = sweep.axis2[cell % n2];
    InitialCondition init = sweep.init;
    WalkSpec walk = sweep.walk;
    if (sweep.kind == EntropySweep::Kind::initial_state) {
      init.omega_p = v1;
      init.omega_a = v2;
    } else {
      walk.split.coin1.theta = v1;
      walk.split.coin2.theta = v2;
    }
    SpinorState state =
        evolve(make_initial_state(init, lattice), walk.stepper(), n_steps);
    out[cell] = entanglement_entropy(state);
  });
  return out;
}

}  // namespace qwalk
