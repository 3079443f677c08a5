#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#ifndef FLAGCERT_CLI_PATH
#define FLAGCERT_CLI_PATH "flagcert"
#endif

namespace {

struct CommandResult {
  int status = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(FLAGCERT_CLI_PATH) + " " + args + " 2>&1";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int raw = pclose(pipe);
  result.status = WEXITSTATUS(raw);
  return result;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("enumerate").status == 2);            // missing -n
  CHECK(run_cli("enumerate -n 6 --bogus").status == 2);
  CHECK(run_cli("enumerate -n 9 --count-only").status == 2);  // capacity
}

TEST_CASE("enumerate counts") {
  CommandResult r = run_cli("enumerate -n 2 --count-only");
  CHECK(r.status == 0);
  CHECK(r.output == "3\n");

  CommandResult fc5 = run_cli("enumerate -n 5 --family FC5 --count-only");
  CHECK(fc5.status == 0);
  CHECK(fc5.output == "114\n");

  CommandResult level6 = run_cli("enumerate -n 6 --family FC5 --count-only");
  CHECK(level6.status == 0);
  CHECK(level6.output == "756\n");
}

TEST_CASE("byte-identical reruns") {
  std::string args = "enumerate -n 5 --family FC5";
  CommandResult a = run_cli(args), b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.output == b.output);

  CommandResult t1 = run_cli("oracle -n 5 -L 3 --threads 1 --json");
  CommandResult t4 = run_cli("oracle -n 5 -L 3 --threads 4 --json");
  CHECK(t1.status == 0);
  CHECK(t1.output == t4.output);
}

TEST_CASE("json outputs parse") {
  for (const std::string& args :
       {std::string("stability --json"), std::string("qp -n 12 --json"),
        std::string("construct --which path-blowup -n 12 --json"),
        std::string("oracle -n 5 -L 3 --json")}) {
    CommandResult r = run_cli(args);
    CHECK(r.status == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(!parsed.is_discarded());
  }
}

TEST_CASE("formulas output") {
  CommandResult r = run_cli("formulas --n-max 8");
  CHECK(r.status == 0);
  CHECK(r.output.find("6 9\n") != std::string::npos);
  CHECK(r.output.find("8 15\n") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  // valid toy certificate: partition of unity at level 3 over FC5
  std::string dir = std::string(FLAGCERT_TEST_TMPDIR);
  std::string good_path = dir + "/toy_good.cert";
  std::string bad_path = dir + "/toy_bad.cert";
  {
    CommandResult graphs = run_cli("enumerate -n 3 --family FC5");
    std::ofstream good(good_path), bad(bad_path);
    good << "problem C5\n";
    bad << "problem C5\n";
    std::istringstream in(graphs.output);
    std::string encoding;
    bool first = true;
    while (std::getline(in, encoding)) {
      if (encoding.empty()) continue;
      good << "c " << encoding << " 1/1\n";
      good << "target " << encoding << " 1/1\n";
      bad << "c " << encoding << " 1/1\n";
      bad << "target " << encoding << (first ? " 2/1\n" : " 1/1\n");
      first = false;
    }
  }
  CHECK(run_cli("verify " + good_path).status == 0);
  CommandResult r = run_cli("verify " + bad_path);
  CHECK(r.status == 1);
  CHECK(r.output.find("residual") != std::string::npos);

  CHECK(run_cli("verify /nonexistent.cert").status == 2);
}

TEST_CASE("csdp solution converter") {
  // synthetic CSDP-style solution: dual vector line, then sparse entries;
  // matno 1 is the dual slack and must be ignored, matno 2 is the primal
  std::string dir = std::string(FLAGCERT_TEST_TMPDIR);
  std::string sol_path = dir + "/toy.sol";
  {
    std::ofstream sol(sol_path);
    sol << "0.0 0.0 0.0\n";
    sol << "1 1 1 1 9.5\n";          // ignored (dual)
    sol << "2 1 1 1 0.25\n";         // lambda (1,1), keeps the block psd
    sol << "2 3 2 2 1.5\n";          // rho (2,2)
    sol << "2 4 3 3 0.125\n";        // third slack scalar
    sol << "2 5 10 10 7.0\n";        // c_H slack, recomputed by round
  }
  std::string script = std::string(FLAGCERT_SOURCE_DIR) + "/tools/csdp_to_raw.py";
  std::string command = "python3 " + script + " --problem C5 --sol " +
                        sol_path + " --flagcert " + FLAGCERT_CLI_PATH +
                        " 2>&1";
  CommandResult converted;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    converted.output.append(buffer.data(), got);
  converted.status = WEXITSTATUS(pclose(pipe));
  REQUIRE(converted.status == 0);

  CHECK(converted.output.find("problem C5") != std::string::npos);
  CHECK(converted.output.find("block lambda 76") != std::string::npos);
  CHECK(converted.output.find("block beta 33") != std::string::npos);
  CHECK(converted.output.find("block rho 43") != std::string::npos);
  CHECK(converted.output.find("0.25") != std::string::npos);
  CHECK(converted.output.find("1.5") != std::string::npos);
  CHECK(converted.output.find("slack 0.125") != std::string::npos);
  CHECK(converted.output.find("9.5") == std::string::npos);  // dual dropped
  CHECK(converted.output.find("7.0") == std::string::npos);  // c_H dropped

  // the converted text parses as a raw solution: feed it through `round`
  // against a nonnegative synthetic target so rounding succeeds
  std::string raw_path = dir + "/toy_raw.txt";
  {
    std::ofstream raw(raw_path);
    raw << converted.output;
    CommandResult graphs = run_cli("enumerate -n 6 --family FC5");
    std::istringstream in(graphs.output);
    std::string encoding;
    while (std::getline(in, encoding))
      if (!encoding.empty()) raw << "target " << encoding << " 3/1\n";
  }
  std::string cert_path = dir + "/toy_from_solver.cert";
  CommandResult rounded =
      run_cli("round --raw " + raw_path + " -o " + cert_path);
  CHECK(rounded.status == 0);
  CHECK(run_cli("verify " + cert_path).status == 0);
}

TEST_CASE("target output carries exact literals") {
  CommandResult r = run_cli("target --problem C5");
  CHECK(r.status == 0);
  CHECK(r.output.find("*r2") != std::string::npos);
}
