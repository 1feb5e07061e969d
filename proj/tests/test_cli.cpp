#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

#include "critlab/cli.hpp"

using namespace critlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "critlab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "critlab_test_cli";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("critical reports records in input order") {
  // C5, K4, K5 and K4 with a subdivided edge.
  const std::string path = write_temp("four.g6", "Dhc\nC~\nD~{\nD^o\n");
  const Run r = run({"critical", path, "--jobs", "2"});
  REQUIRE(r.code == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["critical"]["verdict"] == "true");
  CHECK(lines[1]["critical"]["verdict"] == "false");
  CHECK(lines[2]["critical"]["verdict"] == "false");  // K5 - e is still overfull
  CHECK(lines[3]["critical"]["verdict"] == "true");
  CHECK(lines[0]["id"]["graph6"] == "Dhc");
  CHECK(lines[3]["id"]["line"] == 4);
  CHECK(lines[2]["class"]["verdict"] == "Class2");
}

TEST_CASE("empty input and malformed records") {
  const Run empty = run({"chi", write_temp("empty.g6", "")});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  const Run bad = run({"chi", write_temp("bad.g6", "C~\nC~x\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("bad.g6:2:") != std::string::npos);

  CHECK(run({"chi", "/nonexistent/file.g6"}).code == 2);
  CHECK(run({"chi"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("chi csv") {
  const Run r = run({"chi", write_temp("pet.g6", "IheA@GUAo\n"), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("index,graph6,n,m,delta,class,chromatic_index,budget_spent\n", 0) == 0);
  CHECK(r.out.find("0,IheA@GUAo,10,15,3,Class2,4,") != std::string::npos);
}

TEST_CASE("mis") {
  const Run r = run({"mis", write_temp("c5.g6", "Dhc\n")});
  REQUIRE(r.code == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["alpha"] == 2);
}

TEST_CASE("verify-claims exit codes") {
  CHECK(run({"verify-claims", "--d", "7"}).code == 3);
  CHECK(run({"verify-claims", "--d", "3", "--delta", "0"}).code == 3);
  CHECK(run({"verify-claims", "--d", "3", "--delta", "abc"}).code == 2);
  const Run ok = run({"verify-claims", "--d", "3", "--grid", "100"});
  CHECK(ok.code == 0);
  for (const json& v : json_lines(ok.out)) {
    CHECK(v.contains("interval"));
    CHECK(v["params"]["d"] == 3);
  }
  // A low cap may leave checks undecided but never fails the run.
  CHECK(run({"verify-claims", "--d", "3", "--grid", "50", "--precision-cap", "64"}).code == 0);
  // d = 4 has a refuted table entry.
  const Run four = run({"verify-claims", "--d", "4", "--grid", "50", "--format", "csv"});
  CHECK(four.code == 1);
  CHECK(four.out.find("claim8.m8_4,Refuted") != std::string::npos);
}

TEST_CASE("discharge") {
  const std::string c5 = write_temp("c5d.g6", "Dhc\n");
  CHECK(run({"discharge", c5}).code == 3);  // minimum degree 2 < d = 3
  const Run forced = run({"discharge", c5, "--force", "--x", "0,2", "--format", "csv"});
  REQUIRE(forced.code == 0);
  CHECK(forced.out.find("vertex,M0,M0*,M1,M1*,M2*,M2") != std::string::npos);
  CHECK(forced.out.find("step0_conserved=yes") != std::string::npos);
  CHECK(run({"discharge", c5, "--force", "--x", "0,1"}).code == 3);
  CHECK(run({"discharge", c5, "--force", "--x", "0,q"}).code == 2);

  const Run k5 = run({"discharge", write_temp("k5.g6", "D~{\n"), "--d", "4"});
  REQUIRE(k5.code == 0);
  const auto lines = json_lines(k5.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["X"].size() == 1);
  CHECK(lines[0]["ledger"]["step0_conserved"] == true);
}

TEST_CASE("config file with flag precedence") {
  const std::string graphs = write_temp("cfg.g6", "Dhc\n");
  const std::string cfg = write_temp("run.cfg", "# comment\nformat = csv\ninput = " + graphs + "\n");
  const Run r = run({"chi", "--config", cfg});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("index,", 0) == 0);
  const Run flag = run({"chi", "--config", cfg, "--format", "json"});
  REQUIRE(flag.code == 0);
  CHECK(flag.out.front() == '{');

  CHECK(run({"chi", "--config", write_temp("unknown.cfg", "colour=red\ninput=" + graphs + "\n")}).code == 2);
  CHECK(run({"chi", "--config", write_temp("broken.cfg", "justtext\n")}).code == 2);
}

TEST_CASE("report file gets a metadata sidecar") {
  const std::string report = (fs::temp_directory_path() / "critlab_test_cli" / "report.jsonl").string();
  const Run r = run({"chi", write_temp("k4.g6", "C~\n"), "--report", report});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream meta(report + ".meta.json");
  REQUIRE(meta.good());
  const json m = json::parse(meta);
  CHECK(m["command"] == "chi");
  CHECK(m["exit_code"] == 0);
}

TEST_CASE("installed binary propagates exit codes") {
  const std::string bin = CRITLAB_CLI_PATH;
  const std::string in = write_temp("bin.g6", "Dhc\n");
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status(bin + " chi " + in) == 0);
  CHECK(status(bin + " chi " + write_temp("bin_bad.g6", "Z\n")) == 2);
  CHECK(status(bin + " verify-claims --d 7") == 3);
  CHECK(status("CRITLAB_JOBS=2 " + bin + " critical " + in) == 0);
}
