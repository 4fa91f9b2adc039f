#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/runner.hpp"

namespace {

double number_all(const std::string& s) {
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: '" + s + "'");
  return v;
}

// Plain decimal, or a multiple of pi via suffix: "0.25pi", "pi", "-pi".
double parse_angle(const std::string& s) {
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    const std::string head = s.substr(0, s.size() - 2);
    if (head.empty() || head == "+") return std::numbers::pi;
    if (head == "-") return -std::numbers::pi;
    return number_all(head) * std::numbers::pi;
  }
  return number_all(s);
}

std::string canonical_axis(std::string name) {
  for (char& c : name)
    if (c == '-') c = '_';
  if (name != "theta1" && name != "theta2" && name != "k" &&
      name != "omega_p" && name != "omega_a")
    throw std::invalid_argument("unknown grid axis: '" + name + "'");
  return name;
}

// "name=start:stop:count[,name=start:stop:count...]"
std::vector<qwalk::GridAxis> parse_grid(const std::string& spec) {
  std::vector<qwalk::GridAxis> grid;
  if (spec.empty()) return grid;
  size_t begin = 0;
  while (begin <= spec.size()) {
    size_t end = spec.find(',', begin);
    if (end == std::string::npos) end = spec.size();
    const std::string part = spec.substr(begin, end - begin);
    const size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid axis needs name=start:stop:count: '" +
                                  part + "'");
    const std::string body = part.substr(eq + 1);
    const size_t c1 = body.find(':');
    const size_t c2 = c1 == std::string::npos ? c1 : body.find(':', c1 + 1);
    if (c2 == std::string::npos || body.find(':', c2 + 1) != std::string::npos)
      throw std::invalid_argument("grid axis needs start:stop:count: '" + part +
                                  "'");
    qwalk::GridAxis axis;
    axis.name = canonical_axis(part.substr(0, eq));
    axis.start = parse_angle(body.substr(0, c1));
    axis.stop = parse_angle(body.substr(c1 + 1, c2 - c1 - 1));
    axis.count = static_cast<int>(number_all(body.substr(c2 + 1)));
    grid.push_back(axis);
    begin = end + 1;
    if (end == spec.size()) break;
  }
  return grid;
}

struct Raw {
  std::string theta = "0", xi = "0";
  std::string theta1 = "0", theta2 = "0";
  std::string phi1 = "0", phi2 = "0", delta1 = "0", delta2 = "0";
  double alpha = 1.0, beta = 0.0;
  std::string omega_p = "0.5pi", omega_a = "0", k = "0";
  int steps = -1, lattice = 0, jobs = 1;
  std::string boundary = "truncated", grid, out;
};

int option_count(const CLI::App* sub, std::initializer_list<const char*> names) {
  int hits = 0;
  for (const char* name : names) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    if (opt) hits += static_cast<int>(opt->count());
  }
  return hits;
}

qwalk::WalkSpec resolve_walk(const CLI::App* sub, const Raw& raw,
                             const std::vector<qwalk::GridAxis>& grid) {
  const int conv = option_count(sub, {"--theta", "--xi"});
  const int split = option_count(sub, {"--theta1", "--theta2", "--phi1",
                                       "--phi2", "--delta1", "--delta2"});
  const int dca = option_count(sub, {"--alpha", "--beta"});
  const auto has_axis = [&grid](const char* name) {
    for (const auto& a : grid)
      if (a.name == name) return true;
    return false;
  };
  const bool theta_grid = has_axis("theta1") && has_axis("theta2");

  qwalk::WalkSpec walk;
  if ((conv > 0) + (split > 0) + (dca > 0) > 1)
    throw std::invalid_argument(
        "mixing conventional (--theta/--xi), split-step (--theta1...) and "
        "automaton (--alpha/--beta) coin flags");
  if (conv > 0) {
    walk.kind = qwalk::WalkSpec::Kind::conventional;
    walk.coin = {parse_angle(raw.xi), parse_angle(raw.theta), 0.0, 0.0};
  } else if (split > 0 || theta_grid) {
    walk.kind = qwalk::WalkSpec::Kind::splitstep;
    walk.split.coin1 = {0.0, parse_angle(raw.theta1), parse_angle(raw.phi1),
                        parse_angle(raw.delta1)};
    walk.split.coin2 = {0.0, parse_angle(raw.theta2), parse_angle(raw.phi2),
                        parse_angle(raw.delta2)};
  } else if (dca > 0) {
    walk.kind = qwalk::WalkSpec::Kind::dca;
    walk.dca = qwalk::DcaParams(raw.alpha, raw.beta);
  } else {
    throw std::invalid_argument(
        "pick a coin: --theta (conventional), --theta1/--theta2 (split-step) "
        "or --alpha/--beta (automaton)");
  }
  return walk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-dimensional discrete-time quantum walks: evolution, "
               "spectra, oscillation analysis and entanglement"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file, [section] per subcommand");

  Raw raw;
  const std::string pi_note = " (accepts a pi suffix, e.g. 0.25pi)";

  CLI::App* walk = app.add_subcommand(
      "walk", "evolve a walker, write the final position distribution");
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "band frequencies of the split-step momentum block over k");
  CLI::App* zitter = app.add_subcommand(
      "zitter", "oscillation frequency over theta1 / theta2 / k");
  CLI::App* entropy = app.add_subcommand(
      "entropy", "spin-position entanglement entropy after each step");
  CLI::App* sweep = app.add_subcommand(
      "sweep", "grid of end-of-run entanglement entropies");

  for (CLI::App* sub : {walk, entropy, sweep}) {
    sub->add_option("--theta", raw.theta, "conventional coin angle" + pi_note);
    sub->add_option("--xi", raw.xi, "conventional global phase" + pi_note);
    sub->add_option("--theta1", raw.theta1, "first split-step coin angle" + pi_note);
    sub->add_option("--theta2", raw.theta2, "second split-step coin angle" + pi_note);
    sub->add_option("--phi1", raw.phi1, "first coin phi angle" + pi_note);
    sub->add_option("--phi2", raw.phi2, "second coin phi angle" + pi_note);
    sub->add_option("--delta1", raw.delta1, "first coin delta angle" + pi_note);
    sub->add_option("--delta2", raw.delta2, "second coin delta angle" + pi_note);
    sub->add_option("--alpha", raw.alpha, "automaton hopping weight");
    sub->add_option("--beta", raw.beta, "automaton flip weight");
    sub->add_option("--omega-p", raw.omega_p,
                    "initial Bloch polar angle" + pi_note);
    sub->add_option("--omega-a", raw.omega_a,
                    "initial Bloch azimuthal angle" + pi_note);
    sub->add_option("--steps", raw.steps, "number of steps");
    sub->add_option("--lattice", raw.lattice,
                    "lattice half-width (default: fits the step count)");
    sub->add_option("--boundary", raw.boundary, "truncated or periodic");
  }
  for (CLI::App* sub : {spectrum, zitter}) {
    sub->add_option("--theta1", raw.theta1, "first coin angle" + pi_note);
    sub->add_option("--theta2", raw.theta2, "second coin angle" + pi_note);
  }
  zitter->add_option("--k", raw.k, "momentum" + pi_note);
  for (CLI::App* sub : {spectrum, zitter, sweep}) {
    sub->add_option("--grid", raw.grid,
                    "axes as name=start:stop:count, comma separated; names: "
                    "k (spectrum/zitter), theta1, theta2 (zitter/sweep), "
                    "omega-p, omega-a (sweep)");
  }
  for (CLI::App* sub : {walk, spectrum, zitter, entropy, sweep}) {
    sub->add_option("--out", raw.out, "output CSV path")->required();
    sub->add_option("--jobs", raw.jobs, "worker threads for grid modes");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  qwalk::RunConfig cfg;
  try {
    const CLI::App* sub = app.get_subcommands().front();
    cfg.grid = parse_grid(raw.grid);
    if (sub == walk) cfg.mode = qwalk::RunConfig::Mode::walk;
    if (sub == spectrum) cfg.mode = qwalk::RunConfig::Mode::spectrum;
    if (sub == zitter) cfg.mode = qwalk::RunConfig::Mode::zitter;
    if (sub == entropy) cfg.mode = qwalk::RunConfig::Mode::entropy;
    if (sub == sweep) cfg.mode = qwalk::RunConfig::Mode::sweep;
    if (sub == walk || sub == entropy || sub == sweep) {
      cfg.walk = resolve_walk(sub, raw, cfg.grid);
      cfg.init = {parse_angle(raw.omega_p), parse_angle(raw.omega_a), 0};
    } else {
      cfg.theta1 = parse_angle(raw.theta1);
      cfg.theta2 = parse_angle(raw.theta2);
      cfg.k = parse_angle(raw.k);
    }
    cfg.steps = raw.steps;
    cfg.n_max = raw.lattice;
    if (raw.boundary == "truncated")
      cfg.boundary = qwalk::Boundary::truncated;
    else if (raw.boundary == "periodic")
      cfg.boundary = qwalk::Boundary::periodic;
    else
      throw std::invalid_argument("boundary must be truncated or periodic");
    cfg.out = raw.out;
    cfg.jobs = raw.jobs;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  return qwalk::run_cli(cfg, std::cerr);
}
