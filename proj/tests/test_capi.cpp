#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "zbrx.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  zbrx_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("monoid handles round trip") {
  zbrx_monoid* m = nullptr;
  REQUIRE(zbrx_monoid_builtin("semilattice2", &m) == ZBRX_OK);
  char* text = nullptr;
  REQUIRE(zbrx_monoid_format(m, &text) == ZBRX_OK);
  std::string table = take(text);
  zbrx_monoid* back = nullptr;
  REQUIRE(zbrx_monoid_parse(table.c_str(), &back) == ZBRX_OK);
  char* text2 = nullptr;
  REQUIRE(zbrx_monoid_format(back, &text2) == ZBRX_OK);
  CHECK(take(text2) == table);
  zbrx_monoid_free(m);
  zbrx_monoid_free(back);
}

TEST_CASE("error paths set status and message") {
  zbrx_monoid* m = nullptr;
  CHECK(zbrx_monoid_builtin("no-such-monoid", &m) == ZBRX_ERR_ARGUMENT);
  CHECK(std::strlen(zbrx_last_error()) > 0);
  CHECK(zbrx_monoid_parse("2 0\n0 1\n0 0", &m) == ZBRX_ERR_PARSE);
  CHECK(zbrx_monoid_builtin(nullptr, &m) == ZBRX_ERR_ARGUMENT);
}

TEST_CASE("semigroup from config and products") {
  const char* cfg =
      "construction: zbruck\n"
      "carrier: int-group\n";
  zbrx_semigroup* g = nullptr;
  REQUIRE(zbrx_semigroup_from_config(cfg, &g) == ZBRX_OK);
  int64_t i, s, j;
  REQUIRE(zbrx_semigroup_mul(g, 0, 3, 1, 1, 4, 0, &i, &s, &j) == ZBRX_OK);
  CHECK(i == 0);
  CHECK(s == 7);
  CHECK(j == 0);

  char* table = nullptr;
  REQUIRE(zbrx_semigroup_cayley(g, 0, 0, 1, 1000, &table) == ZBRX_OK);
  std::string t = take(table);
  CHECK(t.find(" -> ") != std::string::npos);
  CHECK(zbrx_semigroup_cayley(g, -5, 5, 3, 10, &table) == ZBRX_ERR_LIMIT);
  zbrx_semigroup_free(g);

  zbrx_semigroup* bad = nullptr;
  CHECK(zbrx_semigroup_from_config("construction: warne\ncarrier: chain3\n",
                                   &bad) == ZBRX_ERR_PARSE);
}

TEST_CASE("config canonicalization round trips") {
  const char* cfg = "suite: oip-nplus\nconstruction:   ext-bicyclic\n";
  char* canon = nullptr;
  REQUIRE(zbrx_config_canonical(cfg, &canon) == ZBRX_OK);
  std::string once = take(canon);
  char* canon2 = nullptr;
  REQUIRE(zbrx_config_canonical(once.c_str(), &canon2) == ZBRX_OK);
  CHECK(take(canon2) == once);
  CHECK(once.find("construction: ext-bicyclic\n") != std::string::npos);
  CHECK(zbrx_config_canonical("gbound: -2\n", &canon) == ZBRX_ERR_PARSE);
}

TEST_CASE("verification through the C surface") {
  char* names = nullptr;
  REQUIRE(zbrx_suite_names(&names) == ZBRX_OK);
  CHECK(take(names).find("ext-bicyclic-oracle\n") != std::string::npos);

  zbrx_report* rep = nullptr;
  REQUIRE(zbrx_verify_run("suite: ext-bicyclic-oracle,oip-chain3-fails\n",
                          &rep) == ZBRX_OK);
  int code = -1;
  REQUIRE(zbrx_report_exit_code(rep, &code) == ZBRX_OK);
  CHECK(code == 0);
  char* text = nullptr;
  REQUIRE(zbrx_report_text(rep, &text) == ZBRX_OK);
  CHECK(take(text).find("| pass |") != std::string::npos);
  char* machine = nullptr;
  REQUIRE(zbrx_report_machine(rep, &machine) == ZBRX_OK);
  CHECK(take(machine).find("\"status\":\"pass\"") != std::string::npos);
  zbrx_report_free(rep);

  CHECK(zbrx_verify_run("suite: no-such-suite\n", &rep) == ZBRX_ERR_PARSE);
}
