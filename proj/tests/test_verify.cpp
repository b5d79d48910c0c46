#include <algorithm>

#include "doctest.h"
#include "zbrx/config.hpp"
#include "zbrx/verify.hpp"

using namespace zbrx;

namespace {

// timing is the only nondeterministic field
std::string strip_times(std::string s) {
  std::string out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t t = s.find("\"time_ms\":", pos);
    if (t == std::string::npos) {
      out += s.substr(pos);
      break;
    }
    size_t end = s.find_first_of(",}\n", t);
    out += s.substr(pos, t - pos);
    pos = end;
  }
  return out;
}

}  // namespace

TEST_CASE("suite registry") {
  auto names = builtin_suite_names();
  CHECK(names.size() >= 25);
  for (const char* required :
       {"ext-bicyclic-assoc", "example-3.7-inversion-discontinuity",
        "example-3.9-joint-failure", "oip-chain3-fails", "coarser-strict"})
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("single suite run and report shape") {
  auto rep = run_suite("ext-bicyclic-oracle");
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].suite == "ext-bicyclic-oracle");
  CHECK(rep.records[0].status == CheckStatus::Pass);
  CHECK(rep.exit_code() == 0);

  std::string text = report_text(rep);
  CHECK(text.find("ext-bicyclic-oracle | partial-shift-oracle | pass") == 0);
  // text rows have the six fields
  CHECK(std::count(text.begin(), text.end(), '|') == 5);

  std::string machine = report_machine(rep);
  CHECK(machine.find("{\"suite\":") == 0);
  CHECK(machine.find("\"time_ms\":") != std::string::npos);
}

TEST_CASE("expected-failure suites pass by finding the obstruction") {
  for (const char* name :
       {"example-3.7-inversion-discontinuity", "example-3.9-joint-failure",
        "oip-chain3-fails"}) {
    auto rep = run_suite(name);
    CHECK(rep.exit_code() == 0);
    for (const auto& r : rep.records) {
      CHECK(r.status == CheckStatus::Pass);
      CHECK(r.witness.find("expected obstruction") != std::string::npos);
    }
  }
}

TEST_CASE("replays are byte-identical modulo timing") {
  std::vector<std::string> suites = {"warne-f-coeff", "i-bisimple-chain",
                                     "inversion-continuity"};
  auto a = report_machine(run_suites(suites));
  auto b = report_machine(run_suites(suites));
  CHECK(strip_times(a) == strip_times(b));
}

TEST_CASE("exit code ladder") {
  VerificationReport rep;
  CHECK(rep.exit_code() == 0);
  rep.records.push_back({"s", "c", CheckStatus::Inconclusive, "", 0, 0.0});
  CHECK(rep.exit_code() == 2);
  rep.records.push_back({"s", "c2", CheckStatus::Fail, "w", 0, 0.0});
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("config round trip is the identity on the canonical form") {
  RunConfig c;
  c.construction = "warne";
  c.carrier = "c6";
  c.theta = "doubling";
  c.u = {{-1, 1}, {-2, 4}};
  c.window_lo = -3;
  c.window_hi = 3;
  c.topology = "none";
  c.suites = {"warne-assoc-c6", "warne-f-coeff"};
  std::string text = c.serialize();
  CHECK(RunConfig::parse(text) == c);
  CHECK(RunConfig::parse(text).serialize() == text);
}

TEST_CASE("config parse diagnostics carry line and field") {
  CHECK_THROWS_WITH_AS(RunConfig::parse("gbound: x\n"),
                       doctest::Contains("gbound"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(RunConfig::parse("bogus: 1\n"),
                       doctest::Contains("line 1"), std::invalid_argument);
  // the format is unbounded; the 64-bit engine refuses what it cannot hold
  CHECK_THROWS_WITH_AS(RunConfig::parse("window: 0 99999999999999999999\n"),
                       doctest::Contains("64-bit"), std::invalid_argument);
}

TEST_CASE("config validation rejects bad combinations") {
  RunConfig c;
  c.construction = "warne";
  c.carrier = "semilattice2";
  CHECK_THROWS_WITH_AS(c.build_semigroup(), doctest::Contains("group"),
                       std::invalid_argument);
  RunConfig d;
  d.construction = "zbr";
  d.carrier = "leftzero2+1";
  d.theta = "identity";  // image escapes the unit group
  CHECK_THROWS_AS(d.build_semigroup(), std::invalid_argument);
}

TEST_CASE("inline carrier tables parse through the config") {
  RunConfig c;
  c.construction = "zbr";
  c.carrier = "2 0; 0 1; 1 1";  // semilattice2 as an inline table
  c.theta = "annihilating";
  auto sg = c.build_semigroup();
  CHECK(sg.carrier().monoid().size() == 2);
  CHECK(sg.mul({0, 1, 0}, {2, 1, 5}) == Element{2, 1, 5});
}

TEST_CASE("topology construction from config") {
  RunConfig c;
  c.construction = "zbruck";
  c.carrier = "int-group";
  c.topology = "int-upper-tail";
  CHECK(c.build_topology().kind() == TopologySpec::Kind::IntUpperTail);
  c.topology = "none";
  CHECK_THROWS_AS(c.build_topology(), std::invalid_argument);
}
