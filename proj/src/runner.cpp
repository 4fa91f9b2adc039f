#include "qwalk/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include "qwalk/csv.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/zitter.hpp"

namespace qwalk {

std::vector<double> axis_values(const GridAxis& axis) {
  if (axis.count < 1)
    throw config_error("grid axis '" + axis.name + "' needs count >= 1");
  std::vector<double> v(axis.count);
  if (axis.count == 1) {
    v[0] = axis.start;
    return v;
  }
  for (int i = 0; i < axis.count; ++i)
    v[i] = axis.start + (axis.stop - axis.start) * i / (axis.count - 1);
  return v;
}

namespace {

const GridAxis* find_axis(const std::vector<GridAxis>& grid,
                          const std::string& name) {
  for (const auto& a : grid)
    if (a.name == name) return &a;
  return nullptr;
}

void check_axes(const std::vector<GridAxis>& grid,
                std::initializer_list<const char*> allowed) {
  for (const auto& a : grid) {
    bool ok = false;
    for (const char* name : allowed) ok = ok || a.name == name;
    if (!ok) throw config_error("grid axis '" + a.name + "' not valid here");
    int seen = 0;
    for (const auto& b : grid) seen += b.name == a.name;
    if (seen > 1) throw config_error("grid axis '" + a.name + "' repeated");
  }
}

// Sizes the lattice to the run and rejects configurations whose walker
// would hit a truncated edge, before any stepping happens.
LatticeSpec make_lattice(const RunConfig& cfg, int steps) {
  const int reach = std::abs(cfg.init.x0);
  LatticeSpec lattice{cfg.n_max > 0 ? cfg.n_max : std::max(1, steps + reach),
                      cfg.boundary};
  if (cfg.boundary == Boundary::truncated && steps > lattice.n_max - reach)
    throw config_error("truncated lattice of half-width " +
                       std::to_string(lattice.n_max) + " cannot hold " +
                       std::to_string(steps) + " steps");
  return lattice;
}

void run_walk(const RunConfig& cfg) {
  const int steps = cfg.steps < 0 ? 100 : cfg.steps;
  const LatticeSpec lattice = make_lattice(cfg, steps);
  const SpinorState final_state = evolve(make_initial_state(cfg.init, lattice),
                                         cfg.walk.stepper(), steps);
  std::vector<std::vector<double>> rows;
  rows.reserve(lattice.sites());
  for (int x = -lattice.n_max; x <= lattice.n_max; ++x) {
    const double pu = std::norm(final_state.at(x, 0));
    const double pd = std::norm(final_state.at(x, 1));
    rows.push_back({static_cast<double>(x), pu, pd, pu + pd});
  }
  emit_csv({"x", "p_up", "p_down", "p_total"}, rows, cfg.out);
}

void run_spectrum(const RunConfig& cfg) {
  check_axes(cfg.grid, {"k"});
  const GridAxis* kaxis = find_axis(cfg.grid, "k");
  const double k_edge = std::numbers::pi * cfg.units.hbar / cfg.units.a;
  const std::vector<double> ks =
      axis_values(kaxis ? *kaxis : GridAxis{"k", -k_edge, k_edge, 201});
  std::vector<std::vector<double>> rows(ks.size());
  parallel_for(static_cast<int>(ks.size()), cfg.jobs, [&](int i) {
    const auto h = effective_hamiltonian(cfg.theta1, cfg.theta2, ks[i], cfg.units);
    const double energy = cfg.units.hbar * h.omega_k;
    rows[i] = {ks[i], h.omega_k, -energy, energy};
  });
  emit_csv({"k", "omega", "energy_plus", "energy_minus"}, rows, cfg.out);
}

void run_zitter(const RunConfig& cfg) {
  check_axes(cfg.grid, {"theta1", "theta2", "k"});
  const auto values = [&](const char* name, double fixed) {
    const GridAxis* axis = find_axis(cfg.grid, name);
    return axis ? axis_values(*axis) : std::vector<double>{fixed};
  };
  const std::vector<double> t1 = values("theta1", cfg.theta1);
  const std::vector<double> t2 = values("theta2", cfg.theta2);
  const std::vector<double> ks = values("k", cfg.k);
  const int n2 = static_cast<int>(t2.size()), nk = static_cast<int>(ks.size());
  const int cells = static_cast<int>(t1.size()) * n2 * nk;
  std::vector<std::vector<double>> rows(cells);
  parallel_for(cells, cfg.jobs, [&](int cell) {
    const double a = t1[cell / (n2 * nk)];
    const double b = t2[(cell / nk) % n2];
    const double k = ks[cell % nk];
    rows[cell] = {a, b, k, zb_frequency(a, b, k, cfg.units)};
  });
  emit_csv({"theta1", "theta2", "k", "Z"}, rows, cfg.out);
}

void run_entropy(const RunConfig& cfg) {
  const int steps = cfg.steps < 0 ? 100 : cfg.steps;
  const LatticeSpec lattice = make_lattice(cfg, steps);
  const std::vector<double> series =
      entropy_time_series(cfg.init, cfg.walk.stepper(), steps, lattice);
  std::vector<std::vector<double>> rows;
  rows.reserve(series.size());
  for (size_t t = 0; t < series.size(); ++t)
    rows.push_back({static_cast<double>(t), series[t]});
  emit_csv({"step", "S"}, rows, cfg.out);
}

void run_sweep(const RunConfig& cfg) {
  if (cfg.grid.size() != 2)
    throw config_error("sweep needs a two-axis grid");
  EntropySweep sweep;
  const GridAxis *a1 = nullptr, *a2 = nullptr;
  if ((a1 = find_axis(cfg.grid, "omega_p")) &&
      (a2 = find_axis(cfg.grid, "omega_a"))) {
    sweep.kind = EntropySweep::Kind::initial_state;
  } else if ((a1 = find_axis(cfg.grid, "theta1")) &&
             (a2 = find_axis(cfg.grid, "theta2"))) {
    sweep.kind = EntropySweep::Kind::coin_angles;
    if (cfg.walk.kind != WalkSpec::Kind::splitstep)
      throw config_error("theta1 x theta2 sweeps need a split-step walk");
  } else {
    throw config_error(
        "sweep grid must be omega_p x omega_a or theta1 x theta2");
  }
  const int steps = cfg.steps < 0 ? 90 : cfg.steps;
  const LatticeSpec lattice = make_lattice(cfg, steps);
  sweep.axis1 = axis_values(*a1);
  sweep.axis2 = axis_values(*a2);
  sweep.walk = cfg.walk;
  sweep.init = cfg.init;
  const std::vector<double> cells =
      entropy_sweep(sweep, steps, lattice, cfg.jobs);
  std::vector<std::vector<double>> rows;
  rows.reserve(cells.size());
  const size_t n2 = sweep.axis2.size();
  for (size_t i = 0; i < cells.size(); ++i)
    rows.push_back({sweep.axis1[i / n2], sweep.axis2[i % n2], cells[i]});
  emit_csv({a1->name, a2->name, "S"}, rows, cfg.out);
}

}  // namespace

void run(const RunConfig& cfg) {
  validate(cfg.units);
  if (cfg.out.empty()) throw config_error("an output path is required");
  if (cfg.jobs < 1) throw config_error("jobs must be >= 1");
  if (cfg.steps < -1) throw config_error("negative step count");
  switch (cfg.mode) {
    case RunConfig::Mode::walk: return run_walk(cfg);
    case RunConfig::Mode::spectrum: return run_spectrum(cfg);
    case RunConfig::Mode::zitter: return run_zitter(cfg);
    case RunConfig::Mode::entropy: return run_entropy(cfg);
    case RunConfig::Mode::sweep: return run_sweep(cfg);
  }
  throw config_error("unknown mode");
}

int run_cli(const RunConfig& cfg, std::ostream& diag) {
  try {
    run(cfg);
    return 0;
  } catch (const config_error& e) {
    diag << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    diag << "config error: " << e.what() << '\n';
    return 2;
  } catch (const boundary_error& e) {
    diag << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const degeneracy_error& e) {
    diag << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    diag << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::out_of_range& e) {
    diag << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qwalk
