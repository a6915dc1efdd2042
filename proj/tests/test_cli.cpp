#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qfkg/cli.hpp"
#include "qfkg/json_io.hpp"

using namespace qfkg;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  Json json() const { return parse_json(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string instance(const char* name) { return std::string(QFKG_INSTANCE_DIR) + "/" + name; }

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "qfkg_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

// Restores the previous value on scope exit.
class EnvVar {
 public:
  EnvVar(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~EnvVar() {
    if (old_) {
      ::setenv(name_, old_->c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST_CASE("random q-FKG batch holds") {
  const Run r = run({"qfkg", "--random", "100", "--max-irreducibles", "6", "--seed", "42"});
  REQUIRE(r.code == kExitHolds);
  const Json j = r.json();
  CHECK(j["instances"] == 100);
  REQUIRE(j["results"].size() == 100);
  for (const auto& res : j["results"]) CHECK(res["verdict"] == "HOLDS");
  CHECK(j["failed"].empty());
  CHECK(j["holds"] == true);
}

TEST_CASE("series prints the geometric coefficients") {
  const Run r = run({"series", "--k", "2", "--s", "1", "--t", "2", "--degree", "12"});
  REQUIRE(r.code == kExitHolds);
  const Json j = r.json();
  REQUIRE(j["coefficients"].size() == 13);
  for (const auto& c : j["coefficients"]) CHECK(c == "1/1");

  const Run h = run({"series", "--k", "2", "--s", "1", "--t", "2", "--degree", "12", "--format", "human"});
  CHECK(h.code == kExitHolds);
  CHECK(h.out.find("coefficients: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]") != std::string::npos);

  CHECK(run({"series", "--k", "2", "--t", "3"}).code == kExitUsage);
}

TEST_CASE("selftest passes") {
  const Run r = run({"selftest", "--seed", "3"});
  CHECK(r.code == kExitHolds);
  const Json j = r.json();
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) CHECK_MESSAGE(c["passed"] == true, c.dump());
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> cmds = {
      {"qfkg", "--random", "20", "--max-irreducibles", "5", "--seed", "9"},
      {"psi", "--random", "10", "--max-irreducibles", "5", "--seed", "9"},
      {"fishburn", "--random", "10", "--max-irreducibles", "5", "--seed", "9"},
      {"fvector", "--random", "10", "--vertices", "6", "--seed", "9"},
      {"ad-search", "--samples", "300", "--max-lattice-size", "8", "--seed", "9"},
  };
  for (const auto& cmd : cmds) {
    const Run a = run(cmd);
    const Run b = run(cmd);
    auto threaded = cmd;
    threaded.insert(threaded.end(), {"--jobs", "3"});
    const Run c = run(threaded);
    CHECK_MESSAGE(a.code == kExitHolds, cmd[0]);
    CHECK_MESSAGE(a.out == b.out, cmd[0]);
    CHECK_MESSAGE(a.out == c.out, cmd[0]);
  }
  auto other = run({"qfkg", "--random", "20", "--max-irreducibles", "5", "--seed", "10"});
  CHECK(other.out != run({"qfkg", "--random", "20", "--max-irreducibles", "5", "--seed", "9"}).out);
}

TEST_CASE("instance files") {
  const Run vee = run({"qfkg", "--instance", instance("vee.json")});
  CHECK(vee.code == kExitHolds);
  CHECK(vee.json()["report"]["verdict"] == "HOLDS");

  const Run chain = run({"qfkg", "--instance", instance("fishburn_chain.json")});
  CHECK(chain.code == kExitHolds);
  CHECK(chain.json()["report"]["orientation"] == "countermonotone");

  // Hypotheses fail here and the inequality fails with them.
  const Run bad = run({"qfkg", "--instance", instance("non_lsm.json")});
  CHECK(bad.code == kExitFailed);
  const Json j = bad.json();
  CHECK(j["report"]["hypotheses_met"] == false);
  CHECK(j["report"]["verdict"] == "FAILS");

  const Run psi = run({"psi", "--instance", instance("vee.json"), "--u", "", "--v", "a,b,c"});
  CHECK(psi.code == kExitHolds);

  const Run fv = run({"fvector", "--delta", instance("triangle.json"), "--gamma", instance("path.json")});
  CHECK(fv.code == kExitHolds);
  CHECK(fv.json()["result"]["f_delta"] == Json::array({"1/1", "3/1", "3/1"}));

  const Run ad = run({"ad-search", "--instance", instance("cube_poset.json"), "--samples", "200"});
  CHECK(ad.code == kExitHolds);
  CHECK(ad.json()["result"] == "no counterexample");
}

TEST_CASE("schubert and young subcommands") {
  const Run s = run({"schubert", "--k", "2", "--m", "3"});
  CHECK(s.code == kExitHolds);
  CHECK(run({"schubert", "--k", "2", "--m", "2", "--u", "1", "--v", "2,1"}).code == kExitHolds);
  CHECK(run({"schubert", "--k", "2", "--m", "2", "--u", "3"}).code == kExitUsage);
  CHECK(run({"plancherel", "--theta", "1/2", "--degree", "6"}).code == kExitHolds);
  CHECK(run({"plancherel", "--theta", "0"}).code == kExitUsage);
  CHECK(run({"sample2", "--s", "1", "--t", "-1", "--degree", "6"}).code == kExitHolds);
  CHECK(run({"sample2", "--s", "0"}).code == kExitUsage);
  CHECK(run({"series", "--g", "size", "--h", "first", "--degree", "6"}).code == kExitHolds);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"qfkg"}).code == kExitUsage);
  CHECK(run({"qfkg", "--random", "x"}).code == kExitUsage);
  CHECK(run({"qfkg", "--format", "xml", "--random", "1"}).code == kExitUsage);
  CHECK(run({"schubert", "--m", "3"}).code == kExitUsage);
  CHECK(run({"series", "--mu", "nonsense"}).code == kExitUsage);

  const Run missing = run({"qfkg", "--instance", "/nonexistent/instance.json"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const auto broken = scratch("broken.json");
  std::ofstream(broken) << "{\n  \"poset\": {\"elements\": [\"a\"]},\n  \"g\": rank\n}\n";
  const Run syntax = run({"qfkg", "--instance", broken.string()});
  CHECK(syntax.code == kExitUsage);
  CHECK(syntax.err.find(broken.string() + ":3:") != std::string::npos);

  const auto nofield = scratch("nofield.json");
  std::ofstream(nofield) << R"({"poset": {"elements": ["a"]}, "g": "rank"})";
  const Run field = run({"qfkg", "--instance", nofield.string()});
  CHECK(field.code == kExitUsage);
  CHECK(field.err.find("missing field \"h\"") != std::string::npos);
}

TEST_CASE("caps from flags and environment") {
  CHECK(run({"series", "--degree", "15"}).code == kExitUsage);
  CHECK(run({"series", "--degree", "6", "--max-degree", "5"}).code == kExitUsage);
  {
    EnvVar env("QFKG_MAX_DEGREE", "4");
    CHECK(run({"series", "--degree", "6"}).code == kExitUsage);
    CHECK(run({"series", "--degree", "4"}).code == kExitHolds);
  }
  {
    EnvVar env("QFKG_MAX_DEGREE", "many");
    CHECK(run({"series", "--degree", "4"}).code == kExitUsage);
  }
  {
    EnvVar env("QFKG_MAX_LATTICE", "4");
    CHECK(run({"qfkg", "--instance", instance("vee.json")}).code == kExitUsage);
  }
  CHECK(run({"qfkg", "--instance", instance("vee.json"), "--max-lattice-size", "4"}).code == kExitUsage);
  CHECK(run({"ad-search", "--max-lattice-size", "25", "--samples", "1"}).code == kExitUsage);
}

TEST_CASE("out file and human format") {
  const auto path = scratch("report.json");
  std::filesystem::remove(path);
  const Run r = run({"series", "--degree", "5", "--out", path.string()});
  CHECK(r.code == kExitHolds);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const Json j = parse_json(ss.str());
  CHECK(j["command"] == "series");
  CHECK(ss.str() == run({"series", "--degree", "5"}).out);

  const std::string human = render_human(R"({"a": "3/1", "b": ["1/2", "4/1"], "c": {"d": true}})");
  CHECK(human.find("a: 3\n") != std::string::npos);
  CHECK(human.find("b: [1/2, 4]") != std::string::npos);
  CHECK(human.find("  d: true") != std::string::npos);
}
