#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed binary with stderr dropped; stdout comes back verbatim.
CliResult run_cli(const std::string& args) {
  const std::string command = std::string(WK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("eval prints exact rationals") {
  const CliResult r = run_cli("eval --g 2 --d 2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "29/5760\n");

  const CliResult json = run_cli("eval --g 2 --d 2,3 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output == "{\"num\":\"29\",\"den\":\"5760\"}\n");
}

TEST_CASE("kappa subcommand") {
  const CliResult r = run_cli("kappa --g 2 --a 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/240\n");
}

TEST_CASE("denominator subcommands render canonical factorizations") {
  CHECK(run_cli("denom --g 2 --n 1").output == "2^7*3^2\n");
  CHECK(run_cli("scriptD --g 2").output == "2^7*3^2*5\n");
  CHECK(run_cli("tildeD --g 2").output == "2^7*3^2*5\n");
}

TEST_CASE("verification exit codes distinguish pass, fail and usage errors") {
  CHECK(run_cli("verify conj25 --g 2").exit_code == 0);
  CHECK(run_cli("verify autbound --g 4 --sweep").exit_code == 0);
  // negative control: the 2-point lcm at genus 6 is too small at p=5
  CHECK(run_cli("verify autbound --g 6 --n 2").exit_code == 1);
  CHECK(run_cli("verify counterexample --g 6 --p 5").exit_code == 1);
  CHECK(run_cli("verify counterexample --g 10 --p 5").exit_code == 0);
  CHECK(run_cli("eval --g 1 --d 0,0,0").exit_code == 2);       // dimension-invalid
  CHECK(run_cli("eval --g 2 --d 2,3 --bogus-flag").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("table emits the documented CSV schema") {
  const CliResult r = run_cli("table --g 2 --n 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "g,n,exponents,numerator,denominator\n"
        "2,2,0 5,1,1152\n"
        "2,2,1 4,1,384\n"
        "2,2,2 3,29,5760\n");
}

TEST_CASE("output is byte-identical across worker counts") {
  for (const std::string base :
       {std::string("table --g 3 --n 3"), std::string("denom --g 4 --n 2"),
        std::string("verify monotone --g 3")}) {
    const CliResult serial = run_cli(base + " --jobs 1");
    const CliResult parallel = run_cli(base + " --jobs 8");
    CHECK(serial.exit_code == parallel.exit_code);
    CHECK(serial.output == parallel.output);
    CHECK_FALSE(serial.output.empty());
  }
}

TEST_CASE("cache files persist between invocations") {
  namespace fs = std::filesystem;
  const fs::path cache = fs::temp_directory_path() / "wk_cli_cache.txt";
  fs::remove(cache);

  const std::string quoted = "\"" + cache.string() + "\"";
  const CliResult cold = run_cli("denom --g 3 --n 2 --cache " + quoted);
  CHECK(cold.exit_code == 0);
  REQUIRE(fs::exists(cache));
  const CliResult warm = run_cli("denom --g 3 --n 2 --cache " + quoted);
  CHECK(warm.exit_code == 0);
  CHECK(warm.output == cold.output);

  // a tampered record (numerator doubled, no longer reduced) must abort
  // the run, not feed wrong values
  {
    std::string contents;
    {
      std::ifstream in(cache);
      std::ostringstream buf;
      buf << in.rdbuf();
      contents = buf.str();
    }
    const auto pos = contents.find("1/24");
    REQUIRE(pos != std::string::npos);
    contents.replace(pos, 4, "2/24");
    std::ofstream out(cache, std::ios::trunc);
    out << contents;
  }
  CHECK(run_cli("denom --g 3 --n 2 --cache " + quoted).exit_code == 2);
  fs::remove(cache);
}
