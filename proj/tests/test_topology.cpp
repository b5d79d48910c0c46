#include "doctest.h"
#include "zbrx/topology.hpp"

using namespace zbrx;

namespace {

ExtSemigroup zb_int() { return ExtSemigroup::zbruck(Carrier::int_add()); }

}  // namespace

TEST_CASE("layered sets merge per position") {
  Carrier z = Carrier::int_add();
  LayeredSet s(z);
  s.add(0, 0, SetDescriptor::single(z, 1));
  s.add(0, 0, SetDescriptor::single(z, 5));
  s.add(1, 2, SetDescriptor::upper_tail(z, 0));
  CHECK(s.layers().size() == 2);
  CHECK(s.member({0, 1, 0}));
  CHECK(s.member({0, 5, 0}));
  CHECK_FALSE(s.member({0, 2, 0}));
  CHECK(s.member({1, 7, 2}));

  LayeredSet t(z);
  t.add(0, 0, SetDescriptor::explicit_set(z, {1, 5}));
  t.add(1, 2, SetDescriptor::full(z));
  CHECK(s.subset_of(t));
  CHECK_FALSE(t.subset_of(s));
  auto out = t.element_outside(s);
  REQUIRE(out);
  CHECK_FALSE(s.member(*out));
}

TEST_CASE("tail base neighborhoods over the integer carrier") {
  TopologySpec t = TopologySpec::int_upper_tail(zb_int());
  // the base at an idempotent-layer point: its atom plus an upper tail
  // one level down
  BaseNbhd b = t.base_at({0, 0, 0}, 2);
  CHECK(b.member({0, 0, 0}));
  CHECK(b.member({-1, 2, -1}));
  CHECK(b.member({-1, 9, -1}));
  CHECK_FALSE(b.member({-1, 1, -1}));
  CHECK_FALSE(b.member({0, 1, 0}));
  // points off the unit layer are isolated
  CHECK_FALSE(t.tailed_at({0, 3, 0}));
  BaseNbhd atom = t.base_at({0, 3, 0}, 0);
  CHECK(atom.set.layers().size() == 1);

  TopologySpec ts = TopologySpec::int_two_sided_tail(zb_int());
  BaseNbhd b2 = ts.base_at({0, 0, 0}, 2);
  CHECK(b2.member({-1, -5, -1}));
  CHECK(b2.member({-1, 5, -1}));
  CHECK_FALSE(b2.member({-1, 1, -1}));
}

TEST_CASE("unit-tail base over nat-plus") {
  TopologySpec t =
      TopologySpec::unit_tail(ExtSemigroup::zbruck(Carrier::nat_add()));
  BaseNbhd b = t.base_at({1, 0, 2}, 3);
  CHECK(b.member({1, 0, 2}));
  CHECK(b.member({0, 3, 1}));
  CHECK(b.member({0, 8, 1}));
  CHECK_FALSE(b.member({0, 2, 1}));
  // tail parameters start at 1: the lower layer never reaches the unit
  for (Int k : t.params_at({1, 0, 2}, 5)) CHECK(k >= 1);
  CHECK_FALSE(t.tailed_at({1, 2, 2}));
}

TEST_CASE("product image agrees with pointwise products") {
  ExtSemigroup sg = zb_int();
  TopologySpec t = TopologySpec::int_upper_tail(sg);
  LayeredSet u = t.base_at({0, 0, 1}, -1).set;
  LayeredSet v = t.base_at({1, 0, 0}, 2).set;
  LayeredSet prod = product_image(sg, u, v);
  for (Int i = -2; i <= 2; ++i)
    for (Int j = -2; j <= 2; ++j)
      for (Int s = -6; s <= 6; ++s) {
        Element x{i, s, j};
        if (!u.member(x)) continue;
        for (Int m = -2; m <= 2; ++m)
          for (Int n = -2; n <= 2; ++n)
            for (Int r = -6; r <= 6; ++r) {
              Element y{m, r, n};
              if (!v.member(y)) continue;
              CAPTURE(to_string(x));
              CAPTURE(to_string(y));
              REQUIRE(prod.member(sg.mul(x, y)));
            }
      }
}

TEST_CASE("inversion image flips layers and values") {
  ExtSemigroup sg = zb_int();
  TopologySpec t = TopologySpec::int_upper_tail(sg);
  LayeredSet u = t.base_at({2, 0, 0}, 3).set;
  LayeredSet inv = inversion_image(sg, u);
  CHECK(inv.member({0, 0, 2}));
  CHECK(inv.member({-1, -3, 1}));
  CHECK(inv.member({-1, -9, 1}));
  CHECK_FALSE(inv.member({-1, 0, 1}));
}

TEST_CASE("oip family witnesses") {
  OIPFamily f = OIPFamily::upper_tails(Carrier::nat_add(), {1, 2, 3});
  auto w = f.witness(2);
  REQUIRE(w);
  CHECK(w->first == 2);  // the first tail bound above 2 is 3
  // the family must reach past the sampled points to witness them all
  CHECK(check_oip(f, 2).status == CheckStatus::Pass);
  CHECK(check_oip(f, 5).status == CheckStatus::Fail);
  OIPFamily wide = OIPFamily::upper_tails(Carrier::nat_add(),
                                          {1, 2, 3, 4, 5, 6, 7});
  CHECK(check_oip(wide, 5).status == CheckStatus::Pass);

  Carrier c = Carrier::named("chain3");
  OIPFamily g = OIPFamily::explicit_ideals(
      c, {SetDescriptor::explicit_set(c, {2})});
  CHECK(check_oip(g, 2).status == CheckStatus::Fail);
}

TEST_CASE("topology spec constructors validate the carrier kind") {
  CHECK_THROWS_AS(TopologySpec::int_upper_tail(
                      ExtSemigroup::zbruck(Carrier::nat_add())),
                  std::invalid_argument);
  CHECK_THROWS_AS(TopologySpec::unit_tail(zb_int()), std::invalid_argument);
}

TEST_CASE("checkers land where expected on small windows") {
  {
    TopologySpec t = TopologySpec::int_upper_tail(zb_int());
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    CHECK(check_hausdorff(t, w, 3).status == CheckStatus::Pass);
    CHECK(check_separate_continuity(t, w, 3).status == CheckStatus::Pass);
    CHECK(check_inversion_continuity(t, w, 3).status == CheckStatus::Fail);
    CHECK(check_nbhd_lowerset(t, w, 3).status == CheckStatus::Pass);
  }
  {
    TopologySpec t = TopologySpec::int_two_sided_tail(zb_int());
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    CHECK(check_inversion_continuity(t, w, 3).status == CheckStatus::Pass);
    CHECK(check_joint_continuity(t, w, 3).status == CheckStatus::Fail);
  }
}
