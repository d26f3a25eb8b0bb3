#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  RunResult res;
  std::string cmd = (env.empty() ? "" : "env " + env + " ") + g_binary + " " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("segre listing") {
  RunResult r = run("segre 2 2 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 1);
  CHECK(j["generators"][0] ==
        "+1\xc2\xb7x[1,2]*x[2,1] -1\xc2\xb7x[1,1]*x[2,2]");

  RunResult r3 = run("segre 2 2 2 --format json");
  auto j3 = nlohmann::json::parse(r3.out);
  CHECK(j3["count"] == 12);
  CHECK(j3["degree2_span"] == 9);

  RunResult empty = run("segre 2");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("ideal is zero") != std::string::npos);
}

TEST_CASE("segre-veronese verify") {
  RunResult r = run("segre-veronese -n 2 -d 3 --verify --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["overall"] == "pass");
  CHECK(j["theorem"] == "segre-veronese");

  RunResult zero = run("segre-veronese -n 2 -d 1");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("ideal is zero") != std::string::npos);

  RunResult gb = run("segre-veronese -n 2,2 -d 1,2 --verify --mode groebner --format json");
  CHECK(gb.exit_code == 0);
}

TEST_CASE("budget exhaustion maps to the inconclusive exit code") {
  RunResult r = run("segre-veronese -n 2,2 -d 1,2 --verify --mode groebner --max-pairs 1 "
                    "--format json");
  CHECK(r.exit_code == 2);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["overall"] == "inconclusive");
}

TEST_CASE("project export and verify") {
  RunResult r = run("project -n 2 -d 4 -t 2 -k 0 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["L"].size() == 2);
  CHECK(j["L"][0].size() == 3);
  CHECK(j["F"].size() == 3);
  CHECK(j["relations"].size() == 6);
  CHECK(j["A"]["shape"] == nlohmann::json::array({3, 1, 9}));

  RunResult bad = run("project -n 2 -d 4 -t 3 -k 0");
  CHECK(bad.exit_code == 64);

  RunResult verify = run("project -n 2 -d 4 -t 2 -k 0 --verify --format json");
  REQUIRE(verify.exit_code == 0);
  auto vj = nlohmann::json::parse(verify.out);
  CHECK(vj["overall"] == "pass");
}

TEST_CASE("identical configurations produce byte-identical output") {
  const std::string cmd = "project -n 2 -d 5 -t 3 -k 2 --seed 9 --format json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const std::string vcmd = "segre-veronese -n 2,2 -d 1,2 --verify --format json";
  RunResult va = run(vcmd);
  RunResult vb = run(vcmd);
  CHECK(va.out == vb.out);

  // a different seed changes the pseudorandom matrix
  RunResult c = run("project -n 2 -d 5 -t 3 -k 2 --seed 10 --format json");
  CHECK(c.out != a.out);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 64);
  CHECK(run("segre").exit_code == 64);
  CHECK(run("frobnicate 1").exit_code == 64);
}

TEST_CASE("budget can come from the environment") {
  RunResult r = run("segre-veronese -n 2,2 -d 1,2 --verify --mode groebner",
                    "TIDEALS_MAX_PAIRS=1");
  CHECK(r.exit_code == 2);
  // an explicit flag overrides the environment
  RunResult ok = run("segre-veronese -n 2,2 -d 1,2 --verify --mode groebner --max-pairs 100000",
                     "TIDEALS_MAX_PAIRS=1");
  CHECK(ok.exit_code == 0);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <tideals binary> [doctest args]\n");
    return 1;
  }
  g_binary = argv[argc - 1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  return ctx.run();
}
