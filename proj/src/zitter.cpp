#include "qwalk/zitter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

EnergySuperposition::EnergySuperposition(std::complex<double> c1_,
                                         std::complex<double> c2_, double k_,
                                         double theta1_, double theta2_)
    : c1(c1_), c2(c2_), k(k_), theta1(theta1_), theta2(theta2_) {
  if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-12)
    throw std::invalid_argument("superposition weights must satisfy "
                                "|c1|^2 + |c2|^2 = 1");
}

CoinObservable::CoinObservable(const Eigen::Matrix2cd& m) : matrix(m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("observable must be Hermitian");
}

CoinObservable pauli_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, 1.0, 0.0;
  return CoinObservable(m);
}

CoinObservable pauli_y() {
  Eigen::Matrix2cd m;
  m << 0.0, cmplx(0.0, -1.0), cmplx(0.0, 1.0), 0.0;
  return CoinObservable(m);
}

CoinObservable pauli_z() {
  Eigen::Matrix2cd m;
  m << 1.0, 0.0, 0.0, -1.0;
  return CoinObservable(m);
}

double zb_frequency(double theta1, double theta2, double k,
                    const UnitsConfig& units) {
  validate(units);
  const double ka = k * units.a / units.hbar;
  const double b = std::clamp(std::cos(theta1) * std::cos(theta2) * std::cos(ka) -
                                  std::sin(theta1) * std::sin(theta2),
                              -1.0, 1.0);
  return std::acos(b) / (units.tau * std::numbers::pi);
}

std::complex<double> zb_matrix_element(double theta1, double theta2, double k,
                                       const CoinObservable& a,
                                       const UnitsConfig& units) {
  validate(units);
  const double ka = k * units.a / units.hbar;
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  const double b = std::clamp(c1 * c2 * std::cos(ka) - s1 * s2, -1.0, 1.0);
  const double disc = std::max(0.0, 1.0 - b * b);
  if (disc < 1e-12)
    throw degeneracy_error("cross element undefined at a degenerate point");
  const double s = std::sqrt(disc);  // sin(pi tau Z)
  const cmplx c = c1 * s2 + s1 * c2 * std::exp(cmplx(0.0, ka));
  const double d = c1 * c2 * std::sin(ka);
  const auto& m = a.matrix;
  const double ac = std::abs(c);
  if (ac == 0.0) {
    // Eigenvectors collapse onto the bare spin basis; which basis vector
    // goes with which branch follows the sign of d.
    return d > 0.0 ? m(0, 1) : m(1, 0);
  }
  const double nn = 1.0 / (2.0 * s * ac);  // product of the two norms
  return nn * (ac * ac * (m(0, 0) - m(1, 1)) + std::conj(c) * (d + s) * m(0, 1) +
               c * (d - s) * m(1, 0));
}

double zb_amplitude(const EnergySuperposition& s, const CoinObservable& a,
                    const UnitsConfig& units) {
  return 2.0 * std::abs(std::conj(s.c1) * s.c2 *
                        zb_matrix_element(s.theta1, s.theta2, s.k, a, units));
}

std::vector<double> expectation_series(const EnergySuperposition& s,
                                       const CoinObservable& a, int n_steps,
                                       const UnitsConfig& units) {
  if (n_steps < 1) throw std::invalid_argument("need at least one step");
  const EigenSystem es = eigensystem(s.theta1, s.theta2, s.k, units);
  const double omega_tau = std::acos(std::clamp(es.lambda_plus.real(), -1.0, 1.0));
  const double e_plus = (es.vec_plus.adjoint() * a.matrix * es.vec_plus)(0).real();
  const double e_minus =
      (es.vec_minus.adjoint() * a.matrix * es.vec_minus)(0).real();
  const cmplx cross = (es.vec_plus.adjoint() * a.matrix * es.vec_minus)(0);
  const double constant =
      std::norm(s.c1) * e_plus + std::norm(s.c2) * e_minus;
  const cmplx weight = std::conj(s.c1) * s.c2 * cross;
  std::vector<double> out(n_steps + 1);
  for (int t = 0; t <= n_steps; ++t) {
    out[t] = constant +
             2.0 * (weight * std::exp(cmplx(0.0, -2.0 * omega_tau * t))).real();
  }
  return out;
}

FrequencyEstimate extract_frequency(const std::vector<double>& series,
                                    const UnitsConfig& units) {
  validate(units);
  const int n = static_cast<int>(series.size());
  if (n < 4) throw std::invalid_argument("series too short");

  double mean = 0.0, amax = 0.0;
  for (double v : series) {
    mean += v;
    amax = std::max(amax, std::abs(v));
  }
  mean /= n;

  std::vector<double> y(n);
  for (int t = 0; t < n; ++t) {
    const double hann =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * t / (n - 1));
    y[t] = (series[t] - mean) * hann;
  }

  // Plain DFT magnitudes up to Nyquist; series are a few hundred samples,
  // so O(n^2) is irrelevant here.
  const int half = n / 2;
  std::vector<double> mag(half + 1, 0.0);
  for (int j = 0; j <= half; ++j) {
    double re = 0.0, im = 0.0;
    for (int t = 0; t < n; ++t) {
      const double arg = 2.0 * std::numbers::pi * j * t / n;
      re += y[t] * std::cos(arg);
      im -= y[t] * std::sin(arg);
    }
    mag[j] = std::hypot(re, im);
  }

  int peak = 1;
  for (int j = 2; j <= half; ++j)
    if (mag[j] > mag[peak]) peak = j;
  if (mag[peak] < 1e-12 * n * std::max(1.0, amax)) return {0.0, false};

  double shift = 0.0;
  if (peak > 1 && peak < half) {
    const double lm = std::log(mag[peak - 1] + 1e-300);
    const double l0 = std::log(mag[peak] + 1e-300);
    const double lp = std::log(mag[peak + 1] + 1e-300);
    const double den = lm - 2.0 * l0 + lp;
    if (den != 0.0) shift = std::clamp(0.5 * (lm - lp) / den, -0.5, 0.5);
  }
  return {(peak + shift) / (n * units.tau), true};
}

}  // namespace qwalk
