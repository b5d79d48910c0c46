#include "doctest.h"
#include "zbrx/extensions.hpp"

using namespace zbrx;

namespace {

// Independent oracle: (a,b) is the partial map t -> t - b + a defined
// on {t >= b}; multiplication must be map composition.
struct Shift {
  Int dom_min, delta;
};
Shift as_shift(BicyclicPair p) { return {p.b, p.a - p.b}; }
Shift compose(Shift outer, Shift inner) {
  return {std::max(inner.dom_min, outer.dom_min - inner.delta),
          inner.delta + outer.delta};
}

}  // namespace

TEST_CASE("extended bicyclic product vs the three-case formula") {
  CHECK(mul_ext_bicyclic({2, 5}, {5, 1}) == BicyclicPair{2, 1});
  CHECK(mul_ext_bicyclic({2, 5}, {7, 1}) == BicyclicPair{4, 1});
  CHECK(mul_ext_bicyclic({2, 5}, {3, 1}) == BicyclicPair{2, 3});
  CHECK(mul_ext_bicyclic({-3, -1}, {-1, 4}) == BicyclicPair{-3, 4});
}

TEST_CASE("extended bicyclic product is partial-shift composition") {
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b)
      for (Int c = -3; c <= 3; ++c)
        for (Int d = -3; d <= 3; ++d) {
          BicyclicPair p = mul_ext_bicyclic({a, b}, {c, d});
          Shift want = compose(as_shift({a, b}), as_shift({c, d}));
          CHECK(as_shift(p).dom_min == want.dom_min);
          CHECK(as_shift(p).delta == want.delta);
        }
}

TEST_CASE("zbr worked products") {
  auto sl =
      ExtSemigroup::zbr(Carrier::named("semilattice2"), Theta::annihilating());
  CHECK(sl.mul({0, 1, 0}, {2, 1, 5}) == Element{2, 1, 5});
  auto c2 = ExtSemigroup::zbr(Carrier::named("c2"), Theta::identity());
  CHECK(c2.mul({0, 1, 3}, {1, 1, 0}) == Element{0, 0, 2});
}

TEST_CASE("zbruck over the integers") {
  auto sg = ExtSemigroup::zbruck(Carrier::int_add());
  // equal middle indices: values add
  CHECK(sg.mul({0, 3, 1}, {1, 4, 0}) == Element{0, 7, 0});
  // strict cases annihilate one side's value
  CHECK(sg.mul({0, 3, 1}, {2, 4, 0}) == Element{1, 4, 0});
  CHECK(sg.mul({0, 3, 2}, {1, 4, 0}) == Element{0, 3, 1});
}

TEST_CASE("zbruck with nat-max carrier") {
  auto sg = ExtSemigroup::zbruck(Carrier::nat_max());
  CHECK(sg.mul({0, 3, 1}, {1, 4, 0}) == Element{0, 4, 0});
  CHECK(sg.carrier().unit() == 0);
}

TEST_CASE("warne coefficients over a finite group") {
  Carrier c6 = Carrier::named("c6");
  auto sg = ExtSemigroup::warne(c6, Theta::named("doubling", c6),
                                {{-1, 1}, {-2, 4}});
  for (Int n = -5; n <= 5; ++n) CHECK(sg.f_coeff(0, n) == 0);
  // f(1, n) = u(n+1)
  CHECK(sg.f_coeff(1, -2) == 1);
  CHECK(sg.f_coeff(1, -3) == 4);
  CHECK(sg.f_coeff(1, 0) == 0);
  CHECK_THROWS_AS(sg.f_coeff(-1, 0), std::invalid_argument);
}

TEST_CASE("warne coefficient with annihilating endomorphism") {
  auto sg = ExtSemigroup::warne(Carrier::int_add(), Theta::annihilating(),
                                {{-1, 5}});
  CHECK(sg.f_coeff(2, -3) == 5);
  CHECK(sg.f_coeff(2, 0) == 0);
}

TEST_CASE("warne rejects non-group carriers and positive u support") {
  CHECK_THROWS_AS(ExtSemigroup::warne(Carrier::named("semilattice2"),
                                      Theta::annihilating(), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtSemigroup::warne(Carrier::int_add(),
                                      Theta::annihilating(), {{1, 3}}),
                  std::invalid_argument);
}

TEST_CASE("warne with trivial coefficients equals the annihilating form") {
  auto w = ExtSemigroup::warne(Carrier::int_add(), Theta::annihilating(), {});
  auto z = ExtSemigroup::zbruck(Carrier::int_add());
  for (Int i = -2; i <= 2; ++i)
    for (Int j = -2; j <= 2; ++j)
      for (Int s = -2; s <= 2; ++s)
        CHECK(w.mul({i, s, j}, {j, s, i}) == z.mul({i, s, j}, {j, s, i}));
}

TEST_CASE("inversion where available") {
  auto sg = ExtSemigroup::zbruck(Carrier::int_add());
  Element x{3, 7, -1};
  Element y = sg.invert(x);
  CHECK(sg.mul3(x, y, x) == x);
  CHECK(sg.mul3(y, x, y) == y);
  auto w = ExtSemigroup::warne(Carrier::int_add(), Theta::annihilating(),
                               {{-1, 5}});
  CHECK_FALSE(w.inverse_available());
}

TEST_CASE("cayley window export") {
  auto sg = ExtSemigroup::ext_bicyclic();
  std::string table = cayley_window(sg, 0, 1, 0, 1000);
  Int lines = 0;
  for (char ch : table) lines += ch == '\n';
  CHECK(lines == 16);  // 4 elements, 16 products
  CHECK(table.find(" -> ") != std::string::npos);
  CHECK_THROWS_AS(cayley_window(sg, -9, 9, 0, 10), std::length_error);
}

TEST_CASE("cayley window over a finite carrier") {
  auto sg =
      ExtSemigroup::zbr(Carrier::named("semilattice2"), Theta::annihilating());
  std::string table = cayley_window(sg, 0, 0, 0, 1000);
  Int lines = 0;
  for (char ch : table) lines += ch == '\n';
  CHECK(lines == 4);  // 2 elements, 4 products
}
