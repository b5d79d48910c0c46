#include "doctest.h"
#include "zbrx/monoid.hpp"

using namespace zbrx;

TEST_CASE("builtin tables are valid monoids") {
  for (const auto& name : FiniteMonoid::builtin_names()) {
    CAPTURE(name);
    auto m = FiniteMonoid::builtin(name);
    REQUIRE(m);
    int e = m->unit();
    for (int x = 0; x < m->size(); ++x) {
      CHECK(m->mul(e, x) == x);
      CHECK(m->mul(x, e) == x);
    }
  }
}

TEST_CASE("parse/format round trip") {
  for (const auto& name : FiniteMonoid::builtin_names()) {
    auto m = FiniteMonoid::builtin(name);
    std::string text = m->format();
    FiniteMonoid back = FiniteMonoid::parse(text);
    CHECK(back.format() == text);
    CHECK(back.size() == m->size());
    CHECK(back.unit() == m->unit());
  }
}

TEST_CASE("parse rejects broken tables") {
  // 0 is only a left unit here
  CHECK_THROWS_AS(FiniteMonoid::parse("2 0\n0 1\n0 0"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMonoid::parse("2 0\n0 1"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMonoid::parse("2 0\n0 5\n1 0"), std::invalid_argument);
}

TEST_CASE("classification of the builtins") {
  auto cls = [](const char* n) { return FiniteMonoid::builtin(n)->classify(); };
  CHECK(cls("semilattice2").is_inverse);
  CHECK(cls("semilattice2").is_clifford);
  CHECK(cls("chain3").is_clifford);
  CHECK(cls("c6").is_clifford);
  CHECK(FiniteMonoid::builtin("c6")->is_group());
  CHECK(cls("leftzero2+1").is_regular);
  CHECK_FALSE(cls("leftzero2+1").is_inverse);
  CHECK_FALSE(cls("nil3").is_regular);
}

TEST_CASE("unit group and unit inverses") {
  auto c6 = FiniteMonoid::builtin("c6");
  CHECK(c6->group_of_units().size() == 6);
  for (int x = 0; x < 6; ++x) {
    CHECK(c6->mul(x, c6->unit_inverse(x)) == c6->unit());
    CHECK(c6->mul(c6->unit_inverse(x), x) == c6->unit());
  }
  auto sl = FiniteMonoid::builtin("semilattice2");
  CHECK(sl->group_of_units().size() == 1);
  CHECK_THROWS_AS(sl->unit_inverse(1), std::invalid_argument);
}

TEST_CASE("natural order on chain3 is the chain") {
  auto m = FiniteMonoid::builtin("chain3");
  REQUIRE(m->idempotents().size() == 3);
  CHECK(m->natural_leq(2, 1));
  CHECK(m->natural_leq(1, 0));
  CHECK(m->natural_leq(2, 0));
  CHECK_FALSE(m->natural_leq(0, 1));
}

TEST_CASE("adjoin_unit adds an isolated identity") {
  auto m = FiniteMonoid::builtin("leftzero2+1");
  FiniteMonoid m1 = m->adjoin_unit();
  CHECK(m1.size() == m->size() + 1);
  CHECK(m1.unit() == m->size());
  for (int x = 0; x < m->size(); ++x)
    for (int y = 0; y < m->size(); ++y) CHECK(m1.mul(x, y) == m->mul(x, y));
}

TEST_CASE("unit homomorphism powers") {
  auto c6 = FiniteMonoid::builtin("c6");
  std::vector<int> img(6);
  for (int x = 0; x < 6; ++x) img[(size_t)x] = c6->mul(x, x);  // doubling
  UnitHom h(c6, img);
  CHECK(h.check());
  // theta^n(1) walks 1 -> 2 -> 4 -> 2 -> 4 ...
  CHECK(h.power(0, 1) == 1);
  CHECK(h.power(1, 1) == 2);
  CHECK(h.power(2, 1) == 4);
  CHECK(h.power(3, 1) == 2);
  CHECK(h.power(200, 1) == h.power(2, 1));  // beyond the cache bound
  CHECK_THROWS_AS(h.power(-1, 1), std::invalid_argument);
}

TEST_CASE("non-homomorphism is detected") {
  auto sl = FiniteMonoid::builtin("semilattice2");
  UnitHom h(sl, {0, 1});  // image not inside the trivial unit group
  std::string why;
  CHECK_FALSE(h.check(&why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("integer group endomorphism powers") {
  auto a = IntGroupEndo::annihilating();
  CHECK(a.power(0, 7) == 7);
  CHECK(a.power(3, 7) == 0);
  auto s = IntGroupEndo::scaled(-1);
  CHECK(s.power(2, 7) == 7);
  CHECK(s.power(3, 7) == -7);
}
