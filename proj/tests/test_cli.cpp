#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "spinbath/config.hpp"
#include "spinbath/sweep.hpp"

using namespace spinbath;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/spinbath_test_" + name + ".ini";
  std::ofstream out(path);
  out << body;
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kBasicConfig = R"(# crossover scan
[run]
model = heisenberg
scheme = global
picture = effh

[chain]
n = 4
delta = 0.1
jx = 1
jy = 0.9
jz = 0.8

[bath]
type = brownian
omega = 10
gamma = 0.01

[grid]
coupling = 0:3:4
temperature = 0.2,0.1
)";

}  // namespace

TEST_CASE("config round trip with defaults") {
  const std::string path = write_temp("basic", kBasicConfig);
  const ExperimentConfig cfg = parse_config(path);
  CHECK(cfg.model == Model::Heisenberg);
  CHECK(cfg.scheme == SchemeKind::Global);
  CHECK(cfg.picture == PictureMode::Effh);
  CHECK(cfg.observables == std::vector<std::string>{"S_x", "S_y", "S_z"});
  CHECK(cfg.rc_levels == 8);
  REQUIRE(cfg.coupling.size() == 4);
  CHECK(cfg.coupling[1] == doctest::Approx(1.0));
  CHECK(cfg.coupling[3] == doctest::Approx(3.0));

  // The dump parses back to the same configuration.
  const std::string dumped = dump_config(cfg);
  const std::string path2 = write_temp("basic_dump", dumped);
  const ExperimentConfig cfg2 = parse_config(path2);
  CHECK(dump_config(cfg2) == dumped);
}

TEST_CASE("config schema errors carry line numbers") {
  using doctest::Contains;
  const std::string bad_key = write_temp("bad_key",
                                         "[run]\nmodel = ising\njz_typo = 1\n");
  CHECK_THROWS_WITH_AS(parse_config(bad_key), Contains("jz_typo"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_config(bad_key), Contains(":3:"),
                       std::runtime_error);

  CHECK_THROWS_WITH_AS(parse_config(write_temp("bad_sec", "[rnu]\n")),
                       Contains("unknown section"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_config(write_temp("no_sec", "model = ising\n")),
                       Contains("outside any section"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_config("/nonexistent/config.ini"),
                       Contains("cannot open"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_config(write_temp("dup", "[run]\nmodel = ising\nmodel = ising\n")),
      Contains("duplicate"), std::runtime_error);
}

TEST_CASE("config semantic validation") {
  using doctest::Contains;
  std::string body = kBasicConfig;

  // Odd N with pairwise fails before any computation.
  std::string odd = body;
  odd.replace(odd.find("scheme = global"), 15, "scheme = pairwise");
  odd.replace(odd.find("n = 4"), 5, "n = 5");
  CHECK_THROWS_AS(parse_config(write_temp("odd", odd)), std::domain_error);

  // Polaron needs super-Ohmic baths.
  std::string pol = body;
  pol.replace(pol.find("picture = effh"), 14, "picture = polaron");
  CHECK_THROWS_WITH_AS(parse_config(write_temp("pol", pol)),
                       Contains("super_ohmic"), std::runtime_error);

  // Empty coupling grids are rejected.
  std::string empty = body;
  empty.replace(empty.find("coupling = 0:3:4"), 16, "coupling = 0:3:0");
  CHECK_THROWS_AS(parse_config(write_temp("empty", empty)), std::runtime_error);
}

TEST_CASE("sweep rows are deterministically ordered") {
  const std::string path = write_temp("sweep", kBasicConfig);
  const ExperimentConfig cfg = parse_config(path);
  const auto rows = run_sweep(cfg, 1);
  REQUIRE(rows.size() == 1 * 2 * 4 * 3);
  // n ascending, T descending, coupling ascending, observable lexicographic.
  CHECK(rows[0].temperature == 0.2);
  CHECK(rows[0].coupling == 0.0);
  CHECK(rows[0].observable == "S_x");
  CHECK(rows[1].observable == "S_y");
  CHECK(rows[2].observable == "S_z");
  CHECK(rows[3].coupling == doctest::Approx(1.0));
  CHECK(rows[12].temperature == 0.1);

  const auto rows3 = run_sweep(cfg, 3);
  REQUIRE(rows3.size() == rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows3[k].observable == rows[k].observable);
    CHECK(rows3[k].value == rows[k].value);
  }

  write_sweep_csv(rows, "/tmp/spinbath_test_sweep_a.csv");
  write_sweep_csv(rows3, "/tmp/spinbath_test_sweep_b.csv");
  CHECK(read_file("/tmp/spinbath_test_sweep_a.csv") ==
        read_file("/tmp/spinbath_test_sweep_b.csv"));
  CHECK(read_file("/tmp/spinbath_test_sweep_a.csv")
            .rfind("n,temperature,coupling,observable,value\n", 0) == 0);
}

TEST_CASE("corr-map emits one block per point and axis") {
  std::string body = kBasicConfig;
  body.replace(body.find("picture = effh"), 14,
               "picture = effh\nobservables = corr_x,S_x");
  const ExperimentConfig cfg = parse_config(write_temp("corr", body));
  const auto blocks = run_corr_map(cfg, 2);
  REQUIRE(blocks.size() == 2 * 4);  // two temperatures, four couplings
  CHECK(blocks[0].values.rows() == 4);
  CHECK(blocks[0].values(0, 0) == 1.0);
  const auto paths = write_corr_files(blocks, cfg, "/tmp");
  REQUIRE(paths.size() == blocks.size());
  const std::string first = read_file(paths[0]);
  CHECK(first.find("i,j,value") != std::string::npos);
  CHECK(first.find("# coupling = 0") != std::string::npos);

  ExperimentConfig no_corr = cfg;
  no_corr.observables = {"S_x"};
  CHECK_THROWS_AS(run_corr_map(no_corr, 1), std::runtime_error);
  CHECK_THROWS_AS(run_sweep(ExperimentConfig{[&] {
                    ExperimentConfig c = cfg;
                    c.observables = {"corr_x"};
                    return c;
                  }()}, 1),
                  std::runtime_error);
}

TEST_CASE("qpt locates the critical coupling on a coarse grid") {
  std::string body = R"(
[run]
model = fully_connected
scheme = global
picture = effh

[chain]
n = 4,6
delta = 0.1
j = 3

[bath]
type = brownian
omega = 10
gamma = 0.01

[grid]
coupling = 0:1.2:13
temperature = 0.1
)";
  const ExperimentConfig cfg = parse_config(write_temp("qpt", body));
  CHECK(analytic_critical_coupling(cfg) ==
        doctest::Approx(std::sqrt(0.375)).epsilon(1e-12));
  const QptResult result = run_qpt(cfg, 2);
  REQUIRE(result.crossings.size() == 2);
  for (const auto& c : result.crossings) {
    CHECK(c.bracketed);
    CHECK(std::abs(c.crossing - c.analytic) <= 0.1);
  }
  write_qpt_files(result, "/tmp");
  const std::string report = read_file("/tmp/qpt_report.csv");
  CHECK(report.rfind("n,temperature,analytic,crossing\n", 0) == 0);

  // A grid that stops short of the transition reports not_bracketed.
  ExperimentConfig short_grid = cfg;
  short_grid.coupling = {0.0, 0.1, 0.2};
  const QptResult miss = run_qpt(short_grid, 1);
  for (const auto& c : miss.crossings) CHECK(!c.bracketed);
}

TEST_CASE("command line driver end to end") {
  // ctest runs from the build directory where the binary lives.
  const std::string cfg_path = write_temp("cli", kBasicConfig);
  std::string cmd = "./spinbath print-config --config " + cfg_path +
                    " > /tmp/spinbath_test_print.out 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const std::string printed = read_file("/tmp/spinbath_test_print.out");
  CHECK(printed.find("model = heisenberg") != std::string::npos);
  CHECK(printed.find("levels = 8") != std::string::npos);

  cmd = "./spinbath sweep --config " + cfg_path +
        " --out /tmp --threads 2 > /tmp/spinbath_test_cli.out 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(read_file("/tmp/sweep.csv").rfind("n,temperature,coupling", 0) == 0);

  // Failures exit nonzero with a machine-readable error line.
  cmd = "./spinbath sweep --config /nonexistent.ini > /tmp/spinbath_err.out 2>&1";
  CHECK(std::system(cmd.c_str()) != 0);
  CHECK(read_file("/tmp/spinbath_err.out").rfind("error:", 0) == 0);
}
