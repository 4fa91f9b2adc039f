#include "qwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

double reduce_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

// Neighbor read with the lattice's closure: zero fill past a truncated
// edge, wraparound when periodic.
cmplx fetch(const SpinorState& s, int i, int spin) {
  const int n = s.lattice.sites();
  if (i < 0 || i >= n) {
    if (s.lattice.boundary == Boundary::truncated) return 0.0;
    i = (i % n + n) % n;
  }
  return s.amp[2 * i + spin];
}

void require_empty_edges(const SpinorState& s, const char* who) {
  if (s.lattice.boundary != Boundary::truncated) return;
  const int n = s.lattice.sites();
  if (s.amp[0] != 0.0 || s.amp[1] != 0.0 || s.amp[2 * n - 2] != 0.0 ||
      s.amp[2 * n - 1] != 0.0)
    throw boundary_error(std::string(who) +
                         ": walker support reached the truncated edge");
}

// The three raw stencils, no edge precheck. Assembling explicit operator
// matrices reuses these directly so that edge columns stay defined.

SpinorState raw_step_conventional(const SpinorState& in,
                                  const Eigen::Matrix2cd& c) {
  SpinorState out{in.lattice, std::vector<cmplx>(in.amp.size(), 0.0)};
  const int n = in.lattice.sites();
  for (int i = 0; i < n; ++i) {
    out.amp[2 * i] = c(0, 0) * fetch(in, i + 1, 0) + c(0, 1) * fetch(in, i + 1, 1);
    out.amp[2 * i + 1] =
        c(1, 0) * fetch(in, i - 1, 0) + c(1, 1) * fetch(in, i - 1, 1);
  }
  return out;
}

SpinorState raw_step_split(const SpinorState& in, const Eigen::Matrix2cd& c1,
                           const Eigen::Matrix2cd& c2) {
  const int n = in.lattice.sites();
  SpinorState mid{in.lattice, std::vector<cmplx>(in.amp.size(), 0.0)};
  // first coin, then shift the up component left
  for (int i = 0; i < n; ++i) {
    mid.amp[2 * i + 1] = c1(1, 0) * in.amp[2 * i] + c1(1, 1) * in.amp[2 * i + 1];
  }
  for (int i = 0; i < n; ++i) {
    mid.amp[2 * i] =
        c1(0, 0) * fetch(in, i + 1, 0) + c1(0, 1) * fetch(in, i + 1, 1);
  }
  // second coin, then shift the down component right
  SpinorState out{in.lattice, std::vector<cmplx>(in.amp.size(), 0.0)};
  for (int i = 0; i < n; ++i) {
    out.amp[2 * i] = c2(0, 0) * mid.amp[2 * i] + c2(0, 1) * mid.amp[2 * i + 1];
  }
  for (int i = 0; i < n; ++i) {
    out.amp[2 * i + 1] =
        c2(1, 0) * fetch(mid, i - 1, 0) + c2(1, 1) * fetch(mid, i - 1, 1);
  }
  return out;
}

SpinorState raw_step_dca(const SpinorState& in, double alpha, double beta) {
  SpinorState out{in.lattice, std::vector<cmplx>(in.amp.size(), 0.0)};
  const int n = in.lattice.sites();
  const cmplx mib(0.0, -beta);
  for (int i = 0; i < n; ++i) {
    out.amp[2 * i] = alpha * fetch(in, i + 1, 0) + mib * in.amp[2 * i + 1];
    out.amp[2 * i + 1] = mib * in.amp[2 * i] + alpha * fetch(in, i - 1, 1);
  }
  return out;
}

}  // namespace

Eigen::Matrix2cd coin_matrix(const CoinParams& p) {
  const double theta = reduce_angle(p.theta);
  const double phi = reduce_angle(p.phi);
  const double delta = reduce_angle(p.delta);
  const cmplx f = std::exp(cmplx(0.0, -delta)) *
                  cmplx(std::cos(theta) * std::cos(phi),
                        -std::sin(theta) * std::sin(phi));
  const cmplx g = -std::exp(cmplx(0.0, delta)) *
                  cmplx(std::cos(theta) * std::sin(phi),
                        std::sin(theta) * std::cos(phi));
  Eigen::Matrix2cd c;
  c << f, g, -std::conj(g), std::conj(f);
  return std::exp(cmplx(0.0, reduce_angle(p.xi))) * c;
}

DcaParams::DcaParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
  if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-9)
    throw std::invalid_argument("dca weights need alpha^2 + beta^2 = 1");
}

SpinorState step_conventional(const SpinorState& state, const CoinParams& p) {
  require_empty_edges(state, "step_conventional");
  return raw_step_conventional(state, coin_matrix(p));
}

SpinorState step_split(const SpinorState& state, const SplitStepParams& p) {
  require_empty_edges(state, "step_split");
  return raw_step_split(state, coin_matrix(p.coin1), coin_matrix(p.coin2));
}

SpinorState step_dca(const SpinorState& state, const DcaParams& p) {
  require_empty_edges(state, "step_dca");
  return raw_step_dca(state, p.alpha, p.beta);
}

SpinorState evolve(SpinorState state, const Stepper& stepper, int n_steps,
                   std::vector<SpinorState>* snapshots) {
  if (n_steps < 0) throw std::invalid_argument("negative step count");
  for (int t = 0; t < n_steps; ++t) {
    state = stepper(state);
    if (snapshots) snapshots->push_back(state);
  }
  return state;
}

double dca_equivalence_residual(double theta2, const LatticeSpec& lattice,
                                double theta1) {
  validate(lattice);
  const Eigen::Matrix2cd c1 = coin_matrix({0.0, theta1, 0.0, 0.0});
  const Eigen::Matrix2cd c2 = coin_matrix({0.0, theta2, 0.0, 0.0});
  const double alpha = std::cos(theta2), beta = std::sin(theta2);
  const int dim = 2 * lattice.sites();
  double worst = 0.0;
  SpinorState basis{lattice, std::vector<cmplx>(dim, 0.0)};
  for (int j = 0; j < dim; ++j) {
    basis.amp.assign(dim, 0.0);
    basis.amp[j] = 1.0;
    const SpinorState a = raw_step_split(basis, c1, c2);
    const SpinorState b = raw_step_dca(basis, alpha, beta);
    for (int i = 0; i < dim; ++i)
      worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
  }
  return worst;
}

Stepper WalkSpec::stepper() const {
  switch (kind) {
    case Kind::conventional:
      return [p = coin](const SpinorState& s) { return step_conventional(s, p); };
    case Kind::splitstep:
      return [p = split](const SpinorState& s) { return step_split(s, p); };
    case Kind::dca:
      return [p = dca](const SpinorState& s) { return step_dca(s, p); };
  }
  throw std::logic_error("unreachable walk kind");
}

}  // namespace qwalk
