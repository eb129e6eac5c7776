#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QUADMAP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("constants subcommand") {
  const RunResult r = run_cli("constants --a 1,0 --b 1.5,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("delta=0.5") != std::string::npos);
  CHECK(r.output.find("epsilon=0.3") != std::string::npos);
  CHECK(r.output.find("alpha=0.2777") != std::string::npos);
  CHECK(r.output.find("r_minus=338701") != std::string::npos);
}

TEST_CASE("iterate on the fixed point prints eleven zero rows") {
  const RunResult r = run_cli("iterate --point 0,0 0,0 0,0 --n 10");
  CHECK(r.exit_code == 0);
  std::size_t rows = 0;
  std::istringstream in(r.output);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (line.rfind("n,", 0) == 0) {
      header_seen = true;
      continue;
    }
    if (!line.empty()) ++rows;
  }
  CHECK(header_seen);
  CHECK(rows == 11);
}

TEST_CASE("iterate emits finite log magnitudes for a growing orbit") {
  const RunResult r = run_cli("iterate --point 2,0 2,0 1,0 --n 3");
  CHECK(r.exit_code == 0);
  // final row: ln|997|, ln|1055|, ln|32|
  CHECK(r.output.find("6.9047507699") != std::string::npos);
  CHECK(r.output.find("3.4657359027") != std::string::npos);
}

TEST_CASE("verdict subcommand") {
  const RunResult r = run_cli("verdict --point 2,0 2,0 1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("InUPlus") != std::string::npos);
  const RunResult k = run_cli("verdict --point 0,0 0,0 0,0 --direction backward");
  CHECK(k.output.find("KMinusUpToHorizon") != std::string::npos);
}

TEST_CASE("green subcommand") {
  const RunResult r = run_cli("green --point 10000,0 10000,0 1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("9.2103") != std::string::npos);
  const RunResult b =
      run_cli("green --point 1,0 4,0 100,0 --b 1.5,0 --direction backward");
  CHECK(b.output.find("4.402") != std::string::npos);
}

TEST_CASE("classify subcommand") {
  const RunResult r = run_cli("classify --point 10000,0 10000,0 1,0 --horizon 45");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("SuperExponential") != std::string::npos);
}

TEST_CASE("model2d subcommands") {
  const RunResult rate = run_cli("model2d sharp-rate --b 1,0 --x0 2,0 --n 4");
  CHECK(rate.exit_code == 0);
  CHECK(rate.output.find("0.70") != std::string::npos);
  const RunResult lines = run_cli("model2d lines --b 1,0");
  CHECK(lines.exit_code == 0);
  CHECK(lines.output.find("1i") != std::string::npos);
  const RunResult none = run_cli("model2d lines --b 2,0");
  CHECK(none.output.find("no invariant lines") != std::string::npos);
}

TEST_CASE("verify subcommand emits a JSON report") {
  const RunResult r = run_cli("verify --samples 20 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"config\"") != std::string::npos);
  CHECK(r.output.find("\"reports\"") != std::string::npos);
  CHECK(r.output.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("render subcommand writes the artifact set") {
  const auto prefix =
      (std::filesystem::temp_directory_path() / "quadmap_cli_render").string();
  const RunResult r = run_cli("render --mode class --base 0,0 0,0 0,0 --width 4 "
                              "--height 4 --pixels 9 9 --horizon 40 --csv --out " +
                              prefix);
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(prefix + ".pgm"));
  CHECK(std::filesystem::exists(prefix + ".json"));
  CHECK(std::filesystem::exists(prefix + ".csv"));
}

TEST_CASE("sweep subcommand prints a CSV grid") {
  const RunResult r = run_cli(
      "sweep --b-from 1.2,0 --b-to 2,0 --b-steps 3 --samples 5 --horizon 30 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("a_re,a_im,b_re,b_im,feasible") != std::string::npos);
  CHECK(count_lines(r.output) >= 4);
}

TEST_CASE("config file merges under explicit flags") {
  const auto cfg = std::filesystem::temp_directory_path() / "quadmap_cli_cfg.json";
  std::ofstream(cfg) << "{\"b\": \"1.5,0\"}\n";
  const RunResult from_cfg = run_cli("constants --config " + cfg.string());
  CHECK(from_cfg.output.find("epsilon=0.3") != std::string::npos);
  CHECK(from_cfg.output.find("delta=0.5") != std::string::npos);
  const RunResult flag_wins = run_cli("constants --config " + cfg.string() + " --b 2,0");
  CHECK(flag_wins.output.find("delta=1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("iterate --bogus-flag 1").exit_code == 1);
  CHECK(run_cli("constants --b 1.5,0 --r-minus 1").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
