#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

constexpr double kDegenerateDisc = 1e-12;

// Shared scalars of the momentum block
//   U(k) = [[B + iD, -iC], [-i conj(C), B - iD]]
// written with B = c1 c2 cos(ka) - s1 s2, C = c1 s2 + s1 c2 e^{i ka},
// D = c1 c2 sin(ka); 1 - B^2 = |C|^2 + D^2.
struct Scalars {
  double B;     // clamped into [-1, 1]
  double disc;  // 1 - B^2
  double s;     // sqrt(disc) = sin(omega tau)
  cmplx C;
  double D;
};

Scalars scalars(double theta1, double theta2, double k,
                const UnitsConfig& units) {
  const double ka = k * units.a / units.hbar;
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  Scalars v;
  v.B = std::clamp(c1 * c2 * std::cos(ka) - s1 * s2, -1.0, 1.0);
  v.disc = std::max(0.0, 1.0 - v.B * v.B);
  v.s = std::sqrt(v.disc);
  v.C = c1 * s2 + s1 * c2 * std::exp(cmplx(0.0, ka));
  v.D = c1 * c2 * std::sin(ka);
  return v;
}

// First component of modulus above 1e-12 made real positive.
Eigen::Vector2cd phase_fixed(Eigen::Vector2cd v) {
  const cmplx lead = std::abs(v(0)) > 1e-12 ? v(0) : v(1);
  const double mag = std::abs(lead);
  if (mag > 0.0) v *= std::conj(lead) / mag;
  return v;
}

double reduce_to_half_turn(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(std::abs(x), two_pi);
  if (r > std::numbers::pi) r = two_pi - r;
  return r;
}

}  // namespace

MomentumUnitary momentum_unitary(double theta1, double theta2, double k,
                                 const UnitsConfig& units) {
  validate(units);
  const double ka = k * units.a / units.hbar;
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  const cmplx up = std::exp(cmplx(0.0, ka)), dn = std::conj(up);
  MomentumUnitary mu{k, theta1, theta2, {}};
  mu.matrix << c1 * c2 * up - s1 * s2, cmplx(0.0, -1.0) * (c1 * s2 + s1 * c2 * up),
      cmplx(0.0, -1.0) * (c1 * s2 + s1 * c2 * dn), c1 * c2 * dn - s1 * s2;
  return mu;
}

EigenSystem eigensystem(double theta1, double theta2, double k,
                        const UnitsConfig& units) {
  validate(units);
  const Scalars v = scalars(theta1, theta2, k, units);
  EigenSystem es;
  es.lambda_plus = cmplx(v.B, v.s);
  es.lambda_minus = cmplx(v.B, -v.s);

  if (v.disc < kDegenerateDisc) {
    es.degenerate = true;
    es.vec_plus = Eigen::Vector2cd(1.0, 0.0);
    es.vec_minus = Eigen::Vector2cd(0.0, 1.0);
    return es;
  }

  // Adjugate columns give two parallel forms for each eigenvector,
  //   plus:  (C, D - s)           or (D + s, -conj(C))
  //   minus: (C, D + s)           or (D - s, -conj(C))
  // with squared norms 2 disc -+ 2 D s respectively for the first forms
  // and the opposite bracket for the second. Picking by the sign of D
  // always evaluates the bracket without cancellation.
  const double bracket_plus = 2.0 * v.disc - 2.0 * v.D * v.s;
  const double bracket_minus = 2.0 * v.disc + 2.0 * v.D * v.s;
  es.norm_plus = bracket_plus > 0.0 ? 1.0 / std::sqrt(bracket_plus) : 0.0;
  es.norm_minus = bracket_minus > 0.0 ? 1.0 / std::sqrt(bracket_minus) : 0.0;

  Eigen::Vector2cd raw_plus, raw_minus;
  if (v.D <= 0.0) {
    raw_plus = Eigen::Vector2cd(v.C, cmplx(v.D - v.s, 0.0));
    raw_plus /= std::sqrt(bracket_plus);
  } else {
    raw_plus = Eigen::Vector2cd(cmplx(v.D + v.s, 0.0), -std::conj(v.C));
    raw_plus /= std::sqrt(bracket_minus);
  }
  if (v.D >= 0.0) {
    raw_minus = Eigen::Vector2cd(v.C, cmplx(v.D + v.s, 0.0));
    raw_minus /= std::sqrt(bracket_minus);
  } else {
    raw_minus = Eigen::Vector2cd(cmplx(v.D - v.s, 0.0), -std::conj(v.C));
    raw_minus /= std::sqrt(bracket_plus);
  }
  es.vec_plus = phase_fixed(raw_plus);
  es.vec_minus = phase_fixed(raw_minus);
  return es;
}

EffectiveHamiltonian effective_hamiltonian(double theta1, double theta2,
                                           double k,
                                           const UnitsConfig& units) {
  validate(units);
  const Scalars v = scalars(theta1, theta2, k, units);
  EffectiveHamiltonian h;
  h.k = k;
  h.omega_k = std::acos(v.B) / units.tau;
  if (v.disc < kDegenerateDisc) {
    // Spectral-projector limit on the (up, down) basis: the up branch
    // carries -hbar omega like vec_plus does away from the degeneracy.
    h.degenerate = true;
    h.matrix << -units.hbar * h.omega_k, 0.0, 0.0, units.hbar * h.omega_k;
    return h;
  }
  const double scale = units.hbar * h.omega_k / v.s;
  h.matrix << -scale * v.D, scale * v.C, scale * std::conj(v.C), scale * v.D;
  return h;
}

double dirac_limit_residual(double theta2, double k, const UnitsConfig& units) {
  validate(units);
  const Eigen::Matrix2cd hs = effective_hamiltonian(0.0, theta2, k, units).matrix;
  Eigen::Matrix2cd hd;
  const double pz = units.a / units.tau * k;
  const double px = units.hbar / units.tau * theta2;
  hd << -pz, px, px, pz;

  const auto spectral_norm = [](const Eigen::Matrix2cd& m) {
    // Hermitian 2x2: largest |eigenvalue|.
    const double p = m(0, 0).real(), r = m(1, 1).real();
    const double mid = 0.5 * (p + r);
    const double rad = std::hypot(0.5 * (p - r), std::abs(m(0, 1)));
    return std::max(std::abs(mid + rad), std::abs(mid - rad));
  };

  const double ref = spectral_norm(hd);
  const double diff = spectral_norm(hs - hd);
  return ref > 0.0 ? diff / ref : diff;
}

MassResult mass_from_angles(double theta1, double theta2,
                            const UnitsConfig& units) {
  validate(units);
  MassResult out;
  out.angle = reduce_to_half_turn(theta1 + theta2);
  out.m = units.hbar * out.angle * units.tau / (units.a * units.a);
  return out;
}

}  // namespace qwalk
