#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "riscap/sweep.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(RISCAP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("riscap_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("help and bad invocations") {
  CHECK(run("--help") == 0);
  CHECK(run("sweep --help") == 0);
  CHECK(run("") == 2);                                     // missing subcommand
  CHECK(run("sweep --vary ps --grid 1,2") == 2);           // missing --out
  CHECK(run("frobnicate") == 2);                           // unknown subcommand
}

TEST_CASE("configuration errors exit with code 2") {
  TempDir tmp;
  const std::string out = (tmp.path / "o.csv").string();
  CHECK(run("sweep --vary rs --grid 5,10 --out " + out) == 2);  // rs needs relay
  CHECK(run("sweep --vary ps --grid 3,2 --out " + out) == 2);   // not increasing
  CHECK(run("sweep --model bogus --vary ps --grid 1,2 --out " + out) == 2);
  CHECK(run("sweep --vary n --grid 1.5,2 --out " + out) == 2);
  CHECK(run("figure fig9 --out " + out) == 2);
  CHECK(run("sweep --vary ps --grid 1,2 --mc-samples 10 --out " + out) == 2);
  CHECK(!fs::exists(out));  // nothing may be emitted on error
}

TEST_CASE("sweep writes a parseable csv") {
  TempDir tmp;
  const fs::path out = tmp.path / "sweep.csv";
  CHECK(run("sweep --model ap --vary ps --grid 1,5,10 --n-cells 2 --out " +
            out.string()) == 0);
  std::ifstream is(out);
  const auto records = riscap::sweep::read_csv(is);
  REQUIRE(records.size() == 3);
  CHECK(records[0].varied_value == 1.0);
  CHECK(records[2].varied_value == 10.0);
  CHECK(records[2].analytic_clamped > records[0].analytic_clamped);
  CHECK(!records[0].mc_mean.has_value());
}

TEST_CASE("json output by extension") {
  TempDir tmp;
  const fs::path out = tmp.path / "sweep.json";
  CHECK(run("sweep --model relay --vary rs --grid 5,10 --n-cells 2 --out " +
            out.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0].contains("analytic_clamped"));
}

TEST_CASE("config file feeds flags and flags win") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "riscap.ini";
  {
    std::ofstream os(cfg);
    os << "[sweep]\n"
          "model=ap\n"
          "vary=ps\n"
          "grid=1,2,4\n"
          "n-cells=2\n";
  }
  const fs::path out1 = tmp.path / "from_config.csv";
  CHECK(run("sweep --config " + cfg.string() + " --out " + out1.string()) == 0);
  std::ifstream is1(out1);
  CHECK(riscap::sweep::read_csv(is1).size() == 3);

  // command line overrides the file
  const fs::path out2 = tmp.path / "override.csv";
  CHECK(run("sweep --config " + cfg.string() + " --grid 1,2 --out " + out2.string()) ==
        0);
  std::ifstream is2(out2);
  CHECK(riscap::sweep::read_csv(is2).size() == 2);
}

TEST_CASE("figure runs are byte-identical across repeats and worker counts") {
  TempDir tmp;
  const fs::path a = tmp.path / "a.csv";
  const fs::path b = tmp.path / "b.csv";
  const fs::path c = tmp.path / "c.csv";
  const std::string common = "figure fig6 --n-cells 2 --mc-samples 10000 --seed 7 ";
  CHECK(run(common + "--threads 1 --out " + a.string()) == 0);
  CHECK(run(common + "--threads 1 --out " + b.string()) == 0);
  CHECK(run(common + "--threads 4 --out " + c.string()) == 0);
  const std::string ref = slurp(a);
  CHECK(!ref.empty());
  CHECK(slurp(b) == ref);
  CHECK(slurp(c) == ref);

  std::ifstream is(a);
  const auto fig = riscap::sweep::read_figure_csv(is);
  REQUIRE(fig.series.size() == 4);
  CHECK(fig.series[0].second.size() == 21);
}

TEST_CASE("validate subcommand passes on a reduced sample budget") {
  CHECK(run("validate --mc-samples 40000 --seed 2") == 0);
}
