#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "config.hpp"

using namespace steklov::cli;
namespace fs = std::filesystem;

namespace {

const char* kEvolveConfig =
    "subcommand=evolve\ngenerator=dilation\nweight=constant:1.0\ndata=monomial:3\nt=0.5\nN=256\n";

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("steklov_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& subcommand, const std::string& config_text, const fs::path& dir) {
  const char* exe = std::getenv("STEKLOV_CLI");
  REQUIRE(exe != nullptr);
  std::ofstream(dir / "run.cfg") << config_text;
  const std::string command = std::string(exe) + " " + subcommand + " --config " +
                              (dir / "run.cfg").string() + " --out " + (dir / "out").string() +
                              " 2>" + (dir / "stderr.txt").string();
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<double>> read_rows(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("parse_config accepts the evolve schema example") {
  const RunConfig c = parse_config(kEvolveConfig);
  CHECK(c.subcommand == Subcommand::evolve);
  CHECK(c.generator.kind == GeneratorSpec::Kind::dilation);
  REQUIRE(c.weight.has_value());
  CHECK(c.weight->coefficients.front() == steklov::Complex{1.0});
  CHECK(c.data.kind == DataSpec::Kind::monomial);
  CHECK(c.data.degree == 3);
  CHECK(c.times == std::vector<double>{0.5});
  CHECK(c.grid_size == 256);
}

TEST_CASE("parse_config reads sections and complex values") {
  const RunConfig c = parse_config(
      "# comment\nsubcommand=flow\ngenerator=bp\nz0=0.1:-0.2\n\n[bp]\nF=series:1,0.5\nb=0.3:0.2\n"
      "[map]\nmax_iter=50\n");
  CHECK(c.generator.kind == GeneratorSpec::Kind::bp);
  CHECK(c.generator.F.coefficients.size() == 2);
  CHECK(c.generator.b == steklov::Complex{0.3, 0.2});
  CHECK(c.z0 == steklov::Complex{0.1, -0.2});
  CHECK(c.domain.max_iter == 50);
}

TEST_CASE("parse_config errors") {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message("generator=dilation\n").find("subcommand") != std::string::npos);
  CHECK(message("subcommand=evolve\nN=100\n").find("'N'") != std::string::npos);
  CHECK(message("subcommand=evolve\ntoll=1e-3\n").find("line 2") != std::string::npos);
  CHECK(message("subcommand=evolve\n[nope]\n").find("line 2") != std::string::npos);
  CHECK(message("subcommand=evolve\ngarbage\n").find("line 2") != std::string::npos);
  CHECK(message("subcommand=evolve\ntol=-1\n").find("'tol'") != std::string::npos);
  CHECK(message("subcommand=evolve\nt=0.5\nt=1\n").find("duplicate") != std::string::npos);
  CHECK(message("subcommand=evolve\n[bp]\nN=8\n").find("line 3") != std::string::npos);
}

TEST_CASE("evolve writes the decaying monomial") {
  const fs::path dir = scratch("evolve");
  REQUIRE(run_cli("evolve", kEvolveConfig, dir) == 0);
  const auto rows = read_rows(dir / "out" / "evolve.csv");
  REQUIRE(rows.size() == 256);
  CHECK(rows[0][0] == 0.5);
  CHECK(rows[0][1] == 0.0);
  CHECK(std::abs(rows[0][2] - std::exp(-1.0)) < 1e-9);
  CHECK(read_file(dir / "out" / "evolve.csv").rfind("t,theta,re_u,im_u\n", 0) == 0);
}

TEST_CASE("flow with the dilation generator ends at 0.25") {
  const fs::path dir = scratch("flow");
  REQUIRE(run_cli("flow", "subcommand=flow\ngenerator=dilation\nz0=0.5\nt=0.6931471805599453\n", dir) == 0);
  const auto rows = read_rows(dir / "out" / "flow.csv");
  REQUIRE(rows.size() >= 2);
  CHECK(rows.front()[0] == 0.0);
  CHECK(std::abs(rows.back()[1] - 0.25) < 1e-10);
  CHECK(std::abs(rows.back()[3] - 0.5) < 1e-10);
}

TEST_CASE("map, cocycle and pairing subcommands") {
  const fs::path dir = scratch("map");
  REQUIRE(run_cli("map", "subcommand=map\ndomain=starlike-cos:0.2\nN=128\n", dir) == 0);
  const auto map_rows = read_rows(dir / "out" / "map.csv");
  REQUIRE(map_rows.size() == 128);
  for (const auto& row : map_rows) CHECK(std::abs(std::hypot(row[4], row[5]) - 1.0) < 1e-9);

  const fs::path cdir = scratch("cocycle");
  REQUIRE(run_cli("cocycle", "subcommand=cocycle\ngenerator=dilation\nweight=constant:-1\nt=1\nN=32\n", cdir) == 0);
  for (const auto& row : read_rows(cdir / "out" / "cocycle.csv")) CHECK(std::abs(row[1] - std::exp(-1.0)) < 1e-10);

  const fs::path pdir = scratch("pairing");
  REQUIRE(run_cli("pairing", "subcommand=pairing\nN=64\n[pairing]\nf=geometric:511\nmax_mode=8\n", pdir) == 0);
  const auto pairs = read_rows(pdir / "out" / "pairing.csv");
  REQUIRE(pairs.size() == 9);
  for (const auto& row : pairs) {
    CHECK(std::abs(row[1] - 1.0) < 1e-6);
    CHECK(row[3] == 1.0);
  }
}

TEST_CASE("verify on defaults passes") {
  const fs::path dir = scratch("verify");
  CHECK(run_cli("verify", "subcommand=verify\n", dir) == 0);
  const auto rows = read_rows(dir / "out" / "verify.csv");
  CHECK(rows.size() > 20);
  for (const auto& row : rows) CHECK(row.back() == 1.0);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("codes");
  CHECK(run_cli("evolve", "subcommand=evolve\nN=100\n", dir) == 1);
  CHECK(run_cli("flow", kEvolveConfig, dir) == 1);
  CHECK(run_cli("flow", "subcommand=flow\ngenerator=series\nz0=0.5\nt=2\n[series]\ncoeffs=0,1\n", dir) == 2);
  CHECK(run_cli("evolve", "subcommand=evolve\nweight=constant:1\ndata=named:cosine\nN=64\n", dir) == 2);
}

TEST_CASE("identical configs give byte-identical CSV") {
  const fs::path a = scratch("det_a");
  const fs::path b = scratch("det_b");
  const std::string config =
      "subcommand=evolve\ndomain=polynomial:0.3\ngenerator=parabolic\ndata=coeffs:1,0.5:0.5,0.25\n"
      "t=0.1,0.7\nN=64\n";
  REQUIRE(run_cli("evolve", config, a) == 0);
  REQUIRE(run_cli("evolve", config, b) == 0);
  CHECK(read_file(a / "out" / "evolve.csv") == read_file(b / "out" / "evolve.csv"));
}
