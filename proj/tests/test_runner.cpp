#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/csv.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/runner.hpp"
#include "qwalk/walk.hpp"
#include "qwalk/zitter.hpp"

using namespace qwalk;

namespace {

constexpr double pi = std::numbers::pi;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  REQUIRE(std::getline(in, line));
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

// unique scratch file that cleans up after itself
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& tag)
      : path("runner_test_" + tag + ".csv") {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("csv emission") {
  SUBCASE("no rows still writes the header") {
    TempFile f("empty");
    emit_csv({"a", "b", "c"}, {}, f.path);
    CHECK(slurp(f.path) == "a,b,c\n");
  }

  SUBCASE("three values take exactly two commas") {
    TempFile f("commas");
    emit_csv({"x", "y", "z"}, {{1.5, -2.0, 3.25}}, f.path);
    const std::string text = slurp(f.path);
    const std::string data = text.substr(text.find('\n') + 1);
    CHECK(std::count(data.begin(), data.end(), ',') == 2);
    CHECK(data.back() == '\n');
  }

  SUBCASE("17 significant digits round-trip bit-exactly") {
    TempFile f("roundtrip");
    const std::vector<double> values = {1.0 / 3.0,  pi,           0.1 + 0.2,
                                        1e-17,      -2.5e300,     7.0,
                                        123456.789, 5.551115e-17};
    std::vector<std::vector<double>> rows;
    for (double v : values) rows.push_back({v});
    emit_csv({"v"}, rows, f.path);
    const auto back = parse_csv(slurp(f.path));
    REQUIRE(back.size() == values.size());
    for (size_t i = 0; i < values.size(); ++i) CHECK(back[i][0] == values[i]);
  }

  SUBCASE("ragged rows are rejected") {
    TempFile f("ragged");
    CHECK_THROWS_AS(emit_csv({"a", "b"}, {{1.0, 2.0}, {3.0}}, f.path),
                    std::invalid_argument);
  }

  SUBCASE("unwritable path names itself in the error") {
    try {
      emit_csv({"a"}, {}, "no_such_dir_here/out.csv");
      FAIL("expected a write failure");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("no_such_dir_here/out.csv") !=
            std::string::npos);
    }
  }
}

TEST_CASE("grid axis expansion") {
  SUBCASE("single point") {
    auto v = axis_values({"k", 2.0, 9.0, 1});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == 2.0);
  }

  SUBCASE("inclusive evenly spaced range") {
    auto v = axis_values({"k", 0.0, 1.0, 5});
    REQUIRE(v.size() == 5);
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 0.25);
    CHECK(v[2] == 0.5);
    CHECK(v[3] == 0.75);
    CHECK(v[4] == 1.0);
  }

  SUBCASE("empty axes are config errors") {
    CHECK_THROWS_AS(axis_values({"k", 0.0, 1.0, 0}), config_error);
  }
}

TEST_CASE("runner modes") {
  SUBCASE("walk output matches a direct computation") {
    TempFile f("walk");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::walk;
    cfg.walk.kind = WalkSpec::Kind::conventional;
    cfg.walk.coin = {0.0, pi / 4, 0.0, 0.0};
    cfg.init = {pi / 2, pi / 2, 0};
    cfg.steps = 12;
    cfg.out = f.path;
    run(cfg);

    std::string header;
    const auto rows = parse_csv(slurp(f.path), &header);
    CHECK(header == "x,p_up,p_down,p_total");
    REQUIRE(rows.size() == 25);  // lattice sized to the step count

    LatticeSpec lat{12, Boundary::truncated};
    auto state = evolve(make_initial_state(cfg.init, lat),
                        cfg.walk.stepper(), 12);
    auto p = position_distribution(state);
    for (size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i][0] == double(int(i) - 12));
      CHECK(rows[i][3] == doctest::Approx(p[i]).epsilon(1e-15));
      CHECK(rows[i][1] + rows[i][2] == doctest::Approx(rows[i][3]).epsilon(1e-12));
    }
  }

  SUBCASE("zitter grid enumerates cells in axis order") {
    TempFile f("zitter");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::zitter;
    cfg.k = 0.7;
    cfg.grid = {{"theta1", 0.0, pi / 2, 3}, {"theta2", 0.0, pi / 2, 4}};
    cfg.out = f.path;
    run(cfg);

    std::string header;
    const auto rows = parse_csv(slurp(f.path), &header);
    CHECK(header == "theta1,theta2,k,Z");
    REQUIRE(rows.size() == 12);
    const auto t1 = axis_values(cfg.grid[0]);
    const auto t2 = axis_values(cfg.grid[1]);
    for (size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i][0] == t1[i / 4]);
      CHECK(rows[i][1] == t2[i % 4]);
      CHECK(rows[i][2] == 0.7);
      CHECK(rows[i][3] == zb_frequency(rows[i][0], rows[i][1], 0.7));
    }
  }

  SUBCASE("entropy series has one row per step") {
    TempFile f("entropy");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::entropy;
    cfg.walk.kind = WalkSpec::Kind::splitstep;
    cfg.walk.split = {{0, 0, 0, 0}, {0, pi / 4, 0, 0}};
    cfg.init = {pi / 2, 0.0, 0};
    cfg.steps = 10;
    cfg.out = f.path;
    run(cfg);

    std::string header;
    const auto rows = parse_csv(slurp(f.path), &header);
    CHECK(header == "step,S");
    REQUIRE(rows.size() == 11);
    CHECK(rows[0][1] == 0.0);
    LatticeSpec lat{10, Boundary::truncated};
    auto series = entropy_time_series(cfg.init, cfg.walk.stepper(), 10, lat);
    for (size_t t = 0; t < rows.size(); ++t) {
      CHECK(rows[t][0] == double(t));
      CHECK(rows[t][1] == doctest::Approx(series[t]).epsilon(1e-15));
    }
  }

  SUBCASE("spectrum columns are consistent") {
    TempFile f("spectrum");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::spectrum;
    cfg.theta1 = 0.0;
    cfg.theta2 = pi / 4;
    cfg.grid = {{"k", -pi, pi, 41}};
    cfg.out = f.path;
    run(cfg);

    const auto rows = parse_csv(slurp(f.path));
    REQUIRE(rows.size() == 41);
    for (const auto& row : rows) {
      CHECK(row[1] >= 0.0);
      CHECK(row[1] <= pi + 1e-12);
      CHECK(row[2] == -row[1]);  // natural units: energy = omega
      CHECK(row[3] == row[1]);
    }
    // dispersion symmetric in k
    for (size_t i = 0; i < rows.size(); ++i)
      CHECK(rows[i][1] ==
            doctest::Approx(rows[rows.size() - 1 - i][1]).epsilon(1e-12));
  }

  SUBCASE("sweep rows cover the grid exactly once, any worker count") {
    TempFile f1("sweep1"), f4("sweep4");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::sweep;
    cfg.walk.kind = WalkSpec::Kind::splitstep;
    cfg.walk.split = {{0, 0, 0, 0}, {0, pi / 4, 0, 0}};
    cfg.grid = {{"omega_p", 0.0, pi, 4}, {"omega_a", 0.0, 2 * pi, 5}};
    cfg.steps = 25;
    cfg.out = f1.path;
    run(cfg);
    cfg.out = f4.path;
    cfg.jobs = 4;
    run(cfg);

    CHECK(slurp(f1.path) == slurp(f4.path));

    std::string header;
    const auto rows = parse_csv(slurp(f1.path), &header);
    CHECK(header == "omega_p,omega_a,S");
    REQUIRE(rows.size() == 20);
    const auto v1 = axis_values(cfg.grid[0]);
    const auto v2 = axis_values(cfg.grid[1]);
    for (size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i][0] == v1[i / 5]);
      CHECK(rows[i][1] == v2[i % 5]);
    }
  }

  SUBCASE("identical configs write identical bytes") {
    TempFile a("det_a"), b("det_b");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::walk;
    cfg.walk.kind = WalkSpec::Kind::dca;
    cfg.walk.dca = {std::cos(0.6), std::sin(0.6)};
    cfg.init = {pi / 2, pi / 2, 0};
    cfg.steps = 40;
    cfg.out = a.path;
    run(cfg);
    cfg.out = b.path;
    run(cfg);
    CHECK(slurp(a.path) == slurp(b.path));
  }
}

TEST_CASE("exit codes") {
  std::ostringstream diag;

  SUBCASE("clean run returns 0") {
    TempFile f("ok");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::walk;
    cfg.walk.coin = {0.0, pi / 4, 0.0, 0.0};
    cfg.init = {pi / 2, 0.0, 0};
    cfg.steps = 5;
    cfg.out = f.path;
    CHECK(run_cli(cfg, diag) == 0);
    CHECK(diag.str().empty());
  }

  SUBCASE("config mistakes return 2") {
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::sweep;
    cfg.grid = {{"omega_p", 0.0, pi, 4}};  // one axis only
    cfg.out = "unused.csv";
    CHECK(run_cli(cfg, diag) == 2);
    CHECK(diag.str().find("config error") != std::string::npos);

    diag.str("");
    RunConfig bad;
    bad.mode = RunConfig::Mode::walk;
    bad.steps = 50;
    bad.n_max = 10;  // too small for 50 truncated steps
    bad.out = "unused.csv";
    CHECK(run_cli(bad, diag) == 2);

    diag.str("");
    RunConfig axis;
    axis.mode = RunConfig::Mode::zitter;
    axis.grid = {{"theta3", 0.0, 1.0, 3}};
    axis.out = "unused.csv";
    CHECK(run_cli(axis, diag) == 2);

    diag.str("");
    RunConfig jobs;
    jobs.mode = RunConfig::Mode::walk;
    jobs.jobs = 0;
    jobs.out = "unused.csv";
    CHECK(run_cli(jobs, diag) == 2);
  }

  SUBCASE("numerical domain problems return 3") {
    TempFile f("dom");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::walk;
    cfg.boundary = Boundary::periodic;
    cfg.n_max = 3;
    cfg.steps = 2;
    cfg.init = {0.0, 0.0, 7};  // off the explicit lattice
    cfg.out = f.path;
    CHECK(run_cli(cfg, diag) == 3);
    CHECK(diag.str().find("domain error") != std::string::npos);
  }
}
