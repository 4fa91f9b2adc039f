#pragma once

#include <Eigen/Core>
#include <complex>

#include "qwalk/lattice.hpp"

namespace qwalk {

// 2x2 momentum block of the split-step operator at momentum k: the shift
// parts become phases e^{+-i k a / hbar} on the spin components.
struct MomentumUnitary {
  double k = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  Eigen::Matrix2cd matrix;
};

MomentumUnitary momentum_unitary(double theta1, double theta2, double k,
                                 const UnitsConfig& units = {});

// Eigenpairs of the momentum block. lambda_plus is the eigenvalue with
// non-negative imaginary part; eigenvectors carry the phase convention
// "first component of modulus > 1e-12 is real positive". norm_plus and
// norm_minus are the closed-form normalization constants
// 1 / sqrt(2(1 - B^2) -+ 2 D s); they are set to zero when that closed
// form degenerates even though the eigenvector itself is still valid.
// At a degenerate point (lambda_plus == lambda_minus == +-1) the flag is
// set and the basis falls back to (up, down).
struct EigenSystem {
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
  Eigen::Vector2cd vec_plus;
  Eigen::Vector2cd vec_minus;
  double norm_plus = 0.0;
  double norm_minus = 0.0;
  bool degenerate = false;
};

EigenSystem eigensystem(double theta1, double theta2, double k,
                        const UnitsConfig& units = {});

// Hermitian generator H with exp(-i H tau / hbar) equal to the momentum
// block, principal branch: omega_k in [0, pi/tau] and spectrum -+ hbar
// omega_k (vec_plus belongs to -hbar omega_k). At a degenerate point the
// closed form blows up; the returned matrix is the spectral-projector
// limit built on the (up, down) basis, and the flag is set.
struct EffectiveHamiltonian {
  double k = 0.0;
  Eigen::Matrix2cd matrix;
  double omega_k = 0.0;
  bool degenerate = false;
};

EffectiveHamiltonian effective_hamiltonian(double theta1, double theta2,
                                           double k,
                                           const UnitsConfig& units = {});

// Relative spectral-norm distance between the theta1 = 0 generator and
// the free spin-1/2 form -(a/tau) k sz + (hbar/tau) theta2 sx. Falls back
// to the absolute norm when the reference vanishes (k = theta2 = 0).
double dirac_limit_residual(double theta2, double k,
                            const UnitsConfig& units = {});

// Mass angle tau * omega at k = 0, i.e. |theta1 + theta2| reduced into
// [0, pi], and the dimensional mass hbar * angle * tau / a^2.
struct MassResult {
  double angle = 0.0;
  double m = 0.0;
};

MassResult mass_from_angles(double theta1, double theta2,
                            const UnitsConfig& units = {});

}  // namespace qwalk
