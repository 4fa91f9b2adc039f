#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

// c1 * vec_plus + c2 * vec_minus at momentum k; |c1|^2 + |c2|^2 = 1
// within 1e-12 is enforced on construction.
struct EnergySuperposition {
  std::complex<double> c1;
  std::complex<double> c2;
  double k = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  EnergySuperposition(std::complex<double> c1_, std::complex<double> c2_,
                      double k_, double theta1_, double theta2_);
};

// Spin-space observable; Hermiticity within 1e-12 enforced.
struct CoinObservable {
  Eigen::Matrix2cd matrix;
  explicit CoinObservable(const Eigen::Matrix2cd& m);
};

CoinObservable pauli_x();
CoinObservable pauli_y();
CoinObservable pauli_z();

// Oscillation frequency (cycles per unit time) of observables mixing the
// two energy branches: acos(B) / (tau pi) with
// B = cos(theta1) cos(theta2) cos(k a / hbar) - sin(theta1) sin(theta2).
double zb_frequency(double theta1, double theta2, double k,
                    const UnitsConfig& units = {});

// Cross matrix element <vec_plus| A |vec_minus> in closed form. Throws
// degeneracy_error at a degenerate point.
std::complex<double> zb_matrix_element(double theta1, double theta2, double k,
                                       const CoinObservable& a,
                                       const UnitsConfig& units = {});

// Amplitude 2 |c1* c2 <vec_plus| A |vec_minus>| of the oscillating part.
double zb_amplitude(const EnergySuperposition& s, const CoinObservable& a,
                    const UnitsConfig& units = {});

// <A>_t for t = 0, tau, ..., n_steps * tau: the branch-diagonal constant
// plus the cross term rotating as e^{-2 i omega tau t}.
std::vector<double> expectation_series(const EnergySuperposition& s,
                                       const CoinObservable& a, int n_steps,
                                       const UnitsConfig& units = {});

struct FrequencyEstimate {
  double frequency = 0.0;
  bool oscillating = false;
};

// Dominant nonzero frequency of a real series sampled at interval tau:
// mean removal, Hann window, discrete Fourier magnitude peak with
// log-parabolic interpolation. A flat series yields {0, false}.
FrequencyEstimate extract_frequency(const std::vector<double>& series,
                                    const UnitsConfig& units = {});

}  // namespace qwalk
