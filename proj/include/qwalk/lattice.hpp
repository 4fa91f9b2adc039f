#pragma once

#include <complex>
#include <vector>

namespace qwalk {

using cmplx = std::complex<double>;

// Lattice spacing a, time step tau, hbar and c. Natural units by default.
struct UnitsConfig {
  double a = 1.0;
  double tau = 1.0;
  double hbar = 1.0;
  double c = 1.0;
};

// Throws std::invalid_argument unless all constants are strictly positive.
void validate(const UnitsConfig& units);

enum class Boundary { truncated, periodic };

// Sites x = -n_max .. +n_max (in units of a), so 2*n_max + 1 in total.
// Truncated mode has no wraparound: a walker must never touch the edge.
struct LatticeSpec {
  int n_max = 0;
  Boundary boundary = Boundary::truncated;

  int sites() const { return 2 * n_max + 1; }
};

void validate(const LatticeSpec& lattice);

// Bloch angles of the initial spin state and the starting site.
// The ket is (cos(omega_p/2), e^{i omega_a} sin(omega_p/2)) at x0.
struct InitialCondition {
  double omega_p = 0.0;
  double omega_a = 0.0;
  int x0 = 0;
};

// Two-component wavefunction over lattice sites.
// Site-major storage: amp[2*i + s] where i = x + n_max and s = 0 for up,
// 1 for down. The stencil steppers stream through this contiguously.
struct SpinorState {
  LatticeSpec lattice;
  std::vector<cmplx> amp;

  int site_index(int x) const { return x + lattice.n_max; }

  cmplx& at(int x, int spin) { return amp[2 * site_index(x) + spin]; }
  const cmplx& at(int x, int spin) const {
    return amp[2 * site_index(x) + spin];
  }
};

// Localized product state at x0; throws std::out_of_range if x0 is not
// on the lattice.
SpinorState make_initial_state(const InitialCondition& init,
                               const LatticeSpec& lattice);

// p(x) = |psi_up(x)|^2 + |psi_down(x)|^2, indexed like the sites.
std::vector<double> position_distribution(const SpinorState& state);

double state_norm(const SpinorState& state);

}  // namespace qwalk
