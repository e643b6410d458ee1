#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using Json = nlohmann::json;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(COMMUTANT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("validate succeeds on builtins", "[cli]") {
  auto r = run_cli("--chain elliott validate");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["validation"]["passed"] == true);
  REQUIRE(j["validation"]["failing_triples"].empty());
}

TEST_CASE("unknown chains exit with the parse code", "[cli]") {
  REQUIRE(run_cli("--chain foo validate").status == 2);
}

TEST_CASE("invariants on surfon reports the degree-2 dimension", "[cli]") {
  auto r = run_cli("--chain surfon invariants --max-degree 2 --indecomposable");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["commutant"]["per_degree"][1]["degree"] == 2);
  REQUIRE(j["commutant"]["per_degree"][1]["dimension"] == 2);
}

TEST_CASE("budget overflow exits with the resource code", "[cli]") {
  auto r = run_cli(
      "--chain supermultiplet --budget 100 invariants --max-degree 3");
  REQUIRE(r.status == 4);
}

TEST_CASE("jacobi-violating chain file exits with the parse code", "[cli]") {
  auto dir = std::filesystem::temp_directory_path();
  auto file = dir / "commutant-cli-bad-chain.txt";
  {
    std::ofstream out(file);
    out << "[generators]\nl1 l2 l3\n[brackets]\nl1 l2 = i*l3 + i*l1\n"
           "l2 l3 = i*l1\nl3 l1 = i*l2\n[subalgebra]\nl3\n";
  }
  auto r = run_cli("--chain " + file.string() + " validate");
  std::filesystem::remove(file);
  REQUIRE(r.status == 2);
}

TEST_CASE("labels command reports counts and commuting pairs", "[cli]") {
  auto r = run_cli("--chain elliott labels --max-degree 4 --rank-trials 2");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["label_counts"]["i0"] == 5);
  REQUIRE(j["label_counts"]["n0"] == 1);
  REQUIRE(j["commuting_pairs"].is_array());
}

TEST_CASE("report writes a stable document and reruns hit the cache", "[cli]") {
  auto dir = std::filesystem::temp_directory_path() /
             ("commutant-cli-cache-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto out1 = dir / "r1.json";
  auto out2 = dir / "r2.json";
  auto base = "--chain surfon --seed 5 --cache-dir " + dir.string() +
              " report --max-degree 4 -o ";
  REQUIRE(run_cli(base + out1.string()).status == 0);
  REQUIRE(run_cli(base + out2.string()).status == 0);

  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  Json a = Json::parse(slurp(out1));
  Json b = Json::parse(slurp(out2));
  // identical modulo the non-deterministic runtime section
  REQUIRE(b["runtime"]["cache_hits"].get<int>() == 4);
  REQUIRE(b["runtime"]["solver_invocations"].get<int>() == 0);
  a.erase("runtime");
  b.erase("runtime");
  REQUIRE(a.dump() == b.dump());
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
}

TEST_CASE("closure command flags non-closing pairs honestly", "[cli]") {
  auto r = run_cli("--chain surfon closure --max-degree 4");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  REQUIRE(!j["closure"]["non_closing_pairs"].empty());
}
