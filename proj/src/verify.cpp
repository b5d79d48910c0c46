#include "zbrx/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"
#include "zbrx/structure.hpp"
#include "zbrx/topology.hpp"

namespace zbrx {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool VerificationReport::any_fail() const {
  for (const auto& r : records)
    if (r.status == CheckStatus::Fail) return true;
  return false;
}

bool VerificationReport::any_inconclusive() const {
  for (const auto& r : records)
    if (r.status == CheckStatus::Inconclusive) return true;
  return false;
}

int VerificationReport::exit_code() const {
  if (any_fail()) return 1;
  if (any_inconclusive()) return 2;
  return 0;
}

namespace {

// ---------------------------------------------------------------- helpers

/// Exhaustive associativity plus the product grading law
/// k - l = i - j + m - n on every product formed.
std::vector<CheckResult> assoc_and_grading(const ExtSemigroup& sg, Int lo,
                                           Int hi, Int gbound,
                                           const std::string& label) {
  Window w = Window::make(sg, lo, hi, gbound);
  const auto& el = w.elements;
  Int triples = 0;
  auto graded = [&](const Element& x, const Element& y,
                    const Element& p) {
    return grade(p) == grade(x) + grade(y);
  };
  for (const Element& x : el)
    for (const Element& y : el) {
      Element xy = sg.mul(x, y);
      if (!graded(x, y, xy))
        return {CheckResult::fail(label + "-grading", triples,
                                  "grade breaks at " + to_string(x) + "*" +
                                      to_string(y) + " = " + to_string(xy))};
      for (const Element& z : el) {
        ++triples;
        Element l = sg.mul(xy, z);
        Element r = sg.mul(x, sg.mul(y, z));
        if (!(l == r))
          return {CheckResult::fail(
              label + "-associativity", triples,
              "(" + to_string(x) + "*" + to_string(y) + ")*" + to_string(z) +
                  " = " + to_string(l) + " but x*(y*z) = " + to_string(r))};
      }
    }
  return {CheckResult::pass(label + "-associativity", triples,
                            "exhaustive over the window"),
          CheckResult::pass(label + "-grading", (Int)el.size() * (Int)el.size(),
                            "every product graded")};
}

/// Flip an expected obstruction into the suite's positive finding.
CheckResult expect_fail(CheckResult r, const std::string& name) {
  if (r.status == CheckStatus::Fail)
    return CheckResult::pass(name, r.count,
                             "expected obstruction found: " + r.witness);
  if (r.status == CheckStatus::Pass)
    return CheckResult::fail(name, r.count,
                             "expected an obstruction but the check passed");
  r.name = name;
  return r;
}

CheckResult renamed(CheckResult r, const std::string& name) {
  r.name = name;
  return r;
}

// semigroup instances the suites share
ExtSemigroup zbruck_z() { return ExtSemigroup::zbruck(Carrier::int_add()); }

ExtSemigroup warne_c6() {
  Carrier c6 = Carrier::named("c6");
  return ExtSemigroup::warne(c6, Theta::named("doubling", c6),
                             {{-1, 1}, {-2, 4}});
}

TopologySpec topo_direct_sum() { return TopologySpec::direct_sum(zbruck_z()); }
TopologySpec topo_nplus_tail() {
  return TopologySpec::unit_tail(ExtSemigroup::zbruck(Carrier::nat_add()));
}
TopologySpec topo_nmax_tail() {
  return TopologySpec::unit_tail(ExtSemigroup::zbruck(Carrier::nat_max()));
}
TopologySpec topo_int_upper() {
  return TopologySpec::int_upper_tail(zbruck_z());
}
TopologySpec topo_int_two_sided() {
  return TopologySpec::int_two_sided_tail(zbruck_z());
}
OIPFamily tail_family(const Carrier& c, Int max_bound) {
  std::vector<Int> bounds;
  for (Int b = 1; b <= max_bound; ++b) bounds.push_back(b);
  return OIPFamily::upper_tails(c, bounds);
}
TopologySpec topo_coarsened(const Carrier& c) {
  return TopologySpec::coarsened(ExtSemigroup::zbruck(c),
                                 tail_family(c, 16));
}

struct TopoInstance {
  std::string tag;
  TopologySpec spec;
  Window window;
};

std::vector<TopoInstance> topo_instances() {
  std::vector<TopoInstance> out;
  auto add = [&](std::string tag, TopologySpec t) {
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    out.push_back({std::move(tag), std::move(t), std::move(w)});
  };
  add("direct-sum", topo_direct_sum());
  add("nplus-unit-tail", topo_nplus_tail());
  add("nmax-unit-tail", topo_nmax_tail());
  add("int-upper-tail", topo_int_upper());
  add("int-two-sided-tail", topo_int_two_sided());
  add("coarsened-nmax", topo_coarsened(Carrier::nat_max()));
  return out;
}

constexpr Int kSchedule = 3;

// ------------------------------------------------------------ the suites

/// Independent oracle for the pair semigroup: (a,b) acts as the
/// partial map t -> t - b + a on {t >= b}; products must compose maps.
struct PartialShift {
  Int dom_min, shift;
  static PartialShift of(BicyclicPair p) { return {p.b, p.a - p.b}; }
  PartialShift after(PartialShift inner) const {
    // this(inner(t)): t >= inner.dom_min and inner(t) >= dom_min
    Int d = std::max(inner.dom_min, dom_min - inner.shift);
    return {d, inner.shift + shift};
  }
  bool operator==(const PartialShift&) const = default;
};

std::vector<CheckResult> suite_ext_bicyclic_assoc() {
  return assoc_and_grading(ExtSemigroup::ext_bicyclic(), -4, 4, 0,
                           "ext-bicyclic");
}

std::vector<CheckResult> suite_ext_bicyclic_oracle() {
  Int pairs = 0;
  for (Int a = -4; a <= 4; ++a)
    for (Int b = -4; b <= 4; ++b)
      for (Int c = -4; c <= 4; ++c)
        for (Int d = -4; d <= 4; ++d) {
          ++pairs;
          BicyclicPair x{a, b}, y{c, d};
          BicyclicPair p = mul_ext_bicyclic(x, y);
          PartialShift composed = PartialShift::of(x).after(PartialShift::of(y));
          if (!(PartialShift::of(p) == composed))
            return {CheckResult::fail(
                "partial-shift-oracle", pairs,
                "(" + std::to_string(a) + "," + std::to_string(b) + ")*(" +
                    std::to_string(c) + "," + std::to_string(d) +
                    ") disagrees with map composition")};
        }
  return {CheckResult::pass("partial-shift-oracle", pairs,
                            "products equal composed partial shifts")};
}

std::vector<CheckResult> suite_zbr_assoc() {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& tag, ExtSemigroup sg) {
    for (auto& r : assoc_and_grading(sg, -3, 3, 0, tag)) out.push_back(r);
  };
  run("semilattice2",
      ExtSemigroup::zbr(Carrier::named("semilattice2"), Theta::annihilating()));
  run("c2-identity",
      ExtSemigroup::zbr(Carrier::named("c2"), Theta::identity()));
  run("leftzero2+1", ExtSemigroup::zbr(Carrier::named("leftzero2+1"),
                                       Theta::annihilating()));
  return out;
}

std::vector<CheckResult> suite_zbr_worked_products() {
  std::vector<CheckResult> out;
  auto expect = [&](const std::string& tag, const ExtSemigroup& sg, Element x,
                    Element y, Element want) {
    Element got = sg.mul(x, y);
    if (got == want)
      out.push_back(CheckResult::pass(tag, 1,
                                      to_string(x) + "*" + to_string(y) +
                                          " = " + to_string(got)));
    else
      out.push_back(CheckResult::fail(tag, 1,
                                      "got " + to_string(got) + ", wanted " +
                                          to_string(want)));
  };
  auto sl =
      ExtSemigroup::zbr(Carrier::named("semilattice2"), Theta::annihilating());
  expect("semilattice2-annihilating", sl, {0, 1, 0}, {2, 1, 5}, {2, 1, 5});
  auto c2 = ExtSemigroup::zbr(Carrier::named("c2"), Theta::identity());
  expect("c2-identity", c2, {0, 1, 3}, {1, 1, 0}, {0, 0, 2});
  // inversion postcondition x y x = x, y x y = y with y = (j, s^-1, i)
  Int failures = 0;
  for (Int i = -2; i <= 2; ++i)
    for (Int j = -2; j <= 2; ++j)
      for (Int s = 0; s < 2; ++s) {
        Element x{i, s, j};
        Element y = c2.invert(x);
        if (!(c2.mul3(x, y, x) == x) || !(c2.mul3(y, x, y) == y)) ++failures;
      }
  out.push_back(failures == 0
                    ? CheckResult::pass("c2-inversion-postcondition", 50,
                                        "x y x = x and y x y = y throughout")
                    : CheckResult::fail("c2-inversion-postcondition", 50,
                                        std::to_string(failures) +
                                            " inversion postcondition breaks"));
  return out;
}

std::vector<CheckResult> suite_grading_fuzz() {
  ExtSemigroup sg = warne_c6();
  std::mt19937 rng(0x5eed2);
  std::uniform_int_distribution<Int> idx(-40, 40), val(0, 5);
  Int n = 100000;
  for (Int k = 0; k < n; ++k) {
    Element x{idx(rng), val(rng), idx(rng)};
    Element y{idx(rng), val(rng), idx(rng)};
    Element p = sg.mul(x, y);
    if (grade(p) != grade(x) + grade(y))
      return {CheckResult::fail("warne-grading-fuzz", k + 1,
                                "grade breaks at " + to_string(x) + "*" +
                                    to_string(y) + " = " + to_string(p))};
  }
  return {CheckResult::pass("warne-grading-fuzz", n,
                            "graded products under a fixed-seed fuzz")};
}

std::vector<CheckResult> suite_inverse_semilattice2() {
  auto sg =
      ExtSemigroup::zbr(Carrier::named("semilattice2"), Theta::annihilating());
  Window w = Window::make(sg, -3, 3, 0);
  return {renamed(check_inverse_transfer(w, w.span() + 2),
                  "unique-inverses-over-inverse-carrier")};
}

std::vector<CheckResult> suite_inverse_leftzero() {
  auto sg = ExtSemigroup::zbr(Carrier::named("leftzero2+1"),
                              Theta::annihilating());
  Window w = Window::make(sg, -2, 2, 0);
  return {renamed(check_inverse_transfer(w, w.span() + 2),
                  "non-inverse-carrier-witness")};
}

std::vector<CheckResult> suite_regular_transfer() {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& tag, const std::string& carrier,
                 Theta theta) {
    auto sg = ExtSemigroup::zbr(Carrier::named(carrier), std::move(theta));
    Window w = Window::make(sg, -2, 2, 0);
    out.push_back(renamed(check_regular_transfer(w, w.span() + 2), tag));
  };
  run("regular-leftzero", "leftzero2+1", Theta::annihilating());
  run("regular-c2", "c2", Theta::identity());
  run("nonregular-nil3", "nil3", Theta::annihilating());
  return out;
}

std::vector<CheckResult> suite_simple() {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& tag, ExtSemigroup sg, Int gbound) {
    Window w = Window::make(sg, -2, 2, gbound);
    out.push_back(renamed(check_simple(w, 200), tag));
  };
  run("ext-bicyclic", ExtSemigroup::ext_bicyclic(), 0);
  run("zbr-semilattice2", ExtSemigroup::zbr(Carrier::named("semilattice2"),
                                            Theta::annihilating()),
      0);
  run("zbr-c2-identity",
      ExtSemigroup::zbr(Carrier::named("c2"), Theta::identity()), 0);
  run("zbruck-int", zbruck_z(), 3);
  run("warne-c6", warne_c6(), 0);
  return out;
}

std::vector<CheckResult> suite_warne_f_coeff() {
  std::vector<CheckResult> out;
  // identity row
  {
    ExtSemigroup sg = warne_c6();
    bool ok = true;
    for (Int n = -5; n <= 5; ++n) ok = ok && sg.f_coeff(0, n) == 0;
    out.push_back(ok ? CheckResult::pass("f-zero-row-identity", 11,
                                         "f(0,n) is the unit for n in [-5,5]")
                     : CheckResult::fail("f-zero-row-identity", 11,
                                         "f(0,n) != unit"));
  }
  // integer carrier, annihilating endomorphism, single nontrivial u
  {
    auto sg = ExtSemigroup::warne(Carrier::int_add(), Theta::annihilating(),
                                  {{-1, 5}});
    Int got = sg.f_coeff(2, -3);
    out.push_back(got == 5 ? CheckResult::pass("f-annihilating-support", 1,
                                               "f(2,-3) = 5")
                           : CheckResult::fail("f-annihilating-support", 1,
                                               "f(2,-3) = " +
                                                   std::to_string(got)));
  }
  // direct term-by-term expansion over the c6 system
  {
    ExtSemigroup sg = warne_c6();
    const Carrier& c = sg.carrier();
    const Theta& th = sg.theta();
    Int mismatches = 0, cases = 0;
    for (Int m = 0; m <= 6; ++m)
      for (Int n = -6; n <= 3; ++n) {
        ++cases;
        Int acc = c.unit();
        for (Int k = 1; k <= m; ++k)
          acc = c.mul(acc, th.power(c, m - k, sg.u(n + k)));
        if (acc != sg.f_coeff(m, n)) ++mismatches;
      }
    out.push_back(mismatches == 0
                      ? CheckResult::pass("f-term-expansion", cases,
                                          "memoized values equal the direct "
                                          "product expansion")
                      : CheckResult::fail("f-term-expansion", cases,
                                          std::to_string(mismatches) +
                                              " mismatches"));
  }
  return out;
}

std::vector<CheckResult> suite_warne_branch_agreement() {
  ExtSemigroup sg = warne_c6();
  Window w = Window::make(sg, -3, 3, 0);
  Int cases = 0;
  for (const Element& x : w.elements)
    for (const Element& y : w.elements) {
      if (x.j != y.i) continue;  // the overlap of the two branch conditions
      ++cases;
      Element up = sg.mul_warne_branch(x, y, true);
      Element dn = sg.mul_warne_branch(x, y, false);
      if (!(up == dn))
        return {CheckResult::fail("branch-agreement", cases,
                                  "branches disagree at " + to_string(x) +
                                      "*" + to_string(y) + ": " +
                                      to_string(up) + " vs " + to_string(dn))};
    }
  return {CheckResult::pass("branch-agreement", cases,
                            "both product branches agree on the overlap")};
}

std::vector<CheckResult> suite_warne_assoc() {
  return assoc_and_grading(warne_c6(), -3, 3, 0, "warne-c6");
}

std::vector<CheckResult> suite_warne_zbruck_agreement() {
  auto wz = ExtSemigroup::warne(Carrier::int_add(), Theta::annihilating(), {});
  auto zb = zbruck_z();
  Window w = Window::make(wz, -3, 3, 3);
  Int pairs = 0;
  for (const Element& x : w.elements)
    for (const Element& y : w.elements) {
      ++pairs;
      if (!(wz.mul(x, y) == zb.mul(x, y)))
        return {CheckResult::fail(
            "warne-equals-zbruck", pairs,
            "products differ at " + to_string(x) + "*" + to_string(y))};
    }
  return {CheckResult::pass(
      "warne-equals-zbruck", pairs,
      "trivial coefficients collapse the product to the annihilating form")};
}

std::vector<CheckResult> suite_i_bisimple() {
  std::vector<CheckResult> out;
  {
    Window w = Window::make(ExtSemigroup::ext_bicyclic(), -2, 2, 0);
    out.push_back(renamed(check_I_bisimple(w, w.span() + 2), "ext-bicyclic"));
  }
  {
    Window w = Window::make(warne_c6(), -1, 1, 0);
    out.push_back(renamed(check_I_bisimple(w, w.span() + 2), "warne-c6"));
  }
  {
    auto sg = ExtSemigroup::zbr(Carrier::named("semilattice2"),
                                Theta::annihilating());
    Window w = Window::make(sg, -1, 1, 0);
    out.push_back(expect_fail(check_I_bisimple(w, w.span() + 2),
                              "semilattice2-not-integer-chain"));
  }
  return out;
}

std::vector<CheckResult> suite_example_37_containments() {
  TopologySpec t = topo_int_upper();
  const ExtSemigroup& sg = t.semigroup();
  const Carrier& c = sg.carrier();
  auto tail = [&](Int i, Int j, Int k) {
    return t.base_at({i, 0, j}, k).set;
  };
  Int cases = 0;
  auto claim = [&](const std::string& tag, const LayeredSet& img,
                   const LayeredSet& target) -> std::optional<CheckResult> {
    ++cases;
    if (img.subset_of(target)) return std::nullopt;
    auto res = img.element_outside(target);
    return CheckResult::fail(
        tag, cases,
        "containment breaks; uncovered " +
            (res ? to_string(*res) : std::string("?")));
  };
  const Int B = 3, T = 6;
  for (Int i = -B; i <= B; ++i)
    for (Int j = -B; j <= B; ++j)
      for (Int m = -B; m <= B; ++m)
        for (Int n = -B; n <= B; ++n) {
          for (Int g = -B; g <= B; ++g) {
            if (g == 0) continue;
            for (Int k = -T; k <= T; ++k) {
              // isolated point times a tail neighborhood
              LayeredSet a =
                  product_image(sg, singleton_set(c, {i, g, j}), tail(m, n, k));
              std::optional<CheckResult> bad;
              if (j < m - 1)
                bad = claim("a1", a, tail(i - j + m, n, k));
              else if (j == m - 1)
                bad = claim("a2", a, tail(i + 1, n, k + g));
              else
                bad = claim("a3", a, singleton_set(c, {i, g, n - m + j}));
              if (bad) return {*bad};
              // tail neighborhood times an isolated point
              LayeredSet b =
                  product_image(sg, tail(i, j, k), singleton_set(c, {m, g, n}));
              if (j <= m)
                bad = claim("b1", b, singleton_set(c, {i - j + m, g, n}));
              else if (j == m + 1)
                bad = claim("b2", b, tail(i, n + 1, k + g));
              else
                bad = claim("b3", b, tail(i, n - m + j, k));
              if (bad) return {*bad};
            }
          }
          for (Int k = -T; k <= T; ++k)
            for (Int l = -T; l <= T; ++l) {
              LayeredSet p = product_image(sg, tail(i, j, k), tail(m, n, l));
              std::optional<CheckResult> bad;
              if (j < m)
                bad = claim("c1", p, tail(i - j + m, n, l));
              else if (j == m)
                bad = claim("c2", p, tail(i, n, k + l));
              else
                bad = claim("c3", p, tail(i, n - m + j, k));
              if (bad) return {*bad};
            }
        }
  return {CheckResult::pass("nine-containments", cases,
                            "all case containments hold symbolically")};
}

std::vector<CheckResult> suite_hausdorff_all() {
  std::vector<CheckResult> out;
  for (const auto& inst : topo_instances())
    out.push_back(
        renamed(check_hausdorff(inst.spec, inst.window, kSchedule), inst.tag));
  return out;
}

std::vector<CheckResult> suite_separate_continuity_all() {
  std::vector<CheckResult> out;
  for (const auto& inst : topo_instances())
    out.push_back(renamed(
        check_separate_continuity(inst.spec, inst.window, kSchedule),
        inst.tag));
  {
    TopologySpec t = topo_coarsened(Carrier::nat_add());
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    out.push_back(
        renamed(check_separate_continuity(t, w, kSchedule), "coarsened-nplus"));
  }
  return out;
}

std::vector<CheckResult> suite_joint_continuity() {
  std::vector<CheckResult> out;
  for (const auto& inst : topo_instances()) {
    if (inst.spec.kind() == TopologySpec::Kind::IntTwoSidedTail) continue;
    out.push_back(renamed(
        check_joint_continuity(inst.spec, inst.window, kSchedule), inst.tag));
  }
  {
    TopologySpec t = topo_coarsened(Carrier::nat_add());
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    out.push_back(
        renamed(check_joint_continuity(t, w, kSchedule), "coarsened-nplus"));
  }
  return out;
}

std::vector<CheckResult> suite_inversion_continuity() {
  std::vector<CheckResult> out;
  {
    TopologySpec t = topo_nmax_tail();
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    out.push_back(
        renamed(check_inversion_continuity(t, w, kSchedule), "nmax-unit-tail"));
  }
  {
    TopologySpec t = topo_int_two_sided();
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    out.push_back(renamed(check_inversion_continuity(t, w, kSchedule),
                          "int-two-sided-tail"));
  }
  return out;
}

std::vector<CheckResult> suite_37_inversion_discontinuity() {
  TopologySpec t = topo_int_upper();
  Window w = Window::make(t.semigroup(), -1, 1, 2);
  return {expect_fail(check_inversion_continuity(t, w, kSchedule),
                      "upper-tail-inversion-obstruction")};
}

std::vector<CheckResult> suite_39_joint_failure() {
  TopologySpec t = topo_int_two_sided();
  Window w = Window::make(t.semigroup(), -1, 1, 2);
  return {expect_fail(check_joint_continuity(t, w, kSchedule),
                      "two-sided-tail-joint-obstruction")};
}

std::vector<CheckResult> suite_nbhd_lowerset() {
  std::vector<CheckResult> out;
  for (const auto& inst : topo_instances())
    out.push_back(renamed(
        check_nbhd_lowerset(inst.spec, inst.window, kSchedule), inst.tag));
  return out;
}

std::vector<CheckResult> suite_restriction_discrete() {
  std::vector<CheckResult> out;
  for (const auto& inst : topo_instances())
    out.push_back(renamed(
        check_restriction_discrete(inst.spec, inst.window, kSchedule),
        inst.tag));
  return out;
}

std::vector<CheckResult> suite_coarser_strict() {
  std::vector<CheckResult> out;
  for (const auto& inst : topo_instances()) {
    CheckResult r = check_coarser_strict(inst.spec, inst.window, kSchedule);
    if (inst.spec.kind() == TopologySpec::Kind::DirectSum)
      out.push_back(expect_fail(std::move(r), inst.tag + "-not-strict"));
    else
      out.push_back(renamed(std::move(r), inst.tag));
  }
  {
    TopologySpec t = topo_coarsened(Carrier::nat_add());
    Window w = Window::make(t.semigroup(), -1, 1, 2);
    out.push_back(
        renamed(check_coarser_strict(t, w, kSchedule), "coarsened-nplus"));
  }
  return out;
}

std::vector<CheckResult> suite_oip_nplus() {
  return {renamed(check_oip(tail_family(Carrier::nat_add(), 9), 6),
                  "upper-tail-ideals")};
}

std::vector<CheckResult> suite_oip_nmax() {
  return {renamed(check_oip(tail_family(Carrier::nat_max(), 9), 6),
                  "upper-tail-ideals")};
}

std::vector<CheckResult> suite_oip_chain3_fails() {
  Carrier c = Carrier::named("chain3");
  std::vector<SetDescriptor> ideals = {
      SetDescriptor::explicit_set(c, {2}),
      SetDescriptor::explicit_set(c, {1, 2}),
  };
  return {expect_fail(check_oip(OIPFamily::explicit_ideals(c, ideals), 2),
                      "bottom-element-has-no-witness")};
}

std::vector<CheckResult> suite_corollary_discreteness() {
  // over the trivial carrier the direct sum base is a singleton at
  // every point, i.e. the space is discrete
  TopologySpec t = TopologySpec::direct_sum(ExtSemigroup::ext_bicyclic());
  Window w = Window::make(t.semigroup(), -3, 3, 0);
  Int n = 0;
  for (const Element& x : w.elements) {
    ++n;
    BaseNbhd b = t.base_at(x, 0);
    if (b.set.layers().size() != 1 || !b.member(x) ||
        !b.set.subset_of(singleton_set(t.semigroup().carrier(), x)))
      return {CheckResult::fail("direct-sum-discrete", n,
                                "non-singleton base element at " +
                                    to_string(x))};
  }
  return {CheckResult::pass("direct-sum-discrete", n,
                            "every point has a singleton base element")};
}

std::vector<CheckResult> suite_greens_window() {
  std::vector<CheckResult> out;
  {
    Window w = Window::make(ExtSemigroup::ext_bicyclic(), -2, 2, 0);
    Int mb = w.span() + 2;
    auto r = greens(w, GreenRel::R, mb);
    auto l = greens(w, GreenRel::L, mb);
    auto h = greens(w, GreenRel::H, mb);
    auto d = greens(w, GreenRel::D, mb);
    bool refines = true;
    for (size_t a = 0; a < w.elements.size() && refines; ++a)
      for (size_t b = 0; b < w.elements.size() && refines; ++b)
        if (h.class_of[a] == h.class_of[b] &&
            (r.class_of[a] != r.class_of[b] || l.class_of[a] != l.class_of[b]))
          refines = false;
    out.push_back(refines
                      ? CheckResult::pass("h-refines-r-and-l",
                                          (Int)w.elements.size(),
                                          "pairwise over the window")
                      : CheckResult::fail("h-refines-r-and-l",
                                          (Int)w.elements.size(),
                                          "an h-cell straddles r or l cells"));
    out.push_back(d.class_count == 1
                      ? CheckResult::pass("single-d-class",
                                          (Int)w.elements.size(),
                                          "the window is one d-class")
                      : CheckResult::fail("single-d-class",
                                          (Int)w.elements.size(),
                                          std::to_string(d.class_count) +
                                              " d-classes"));
  }
  {
    Window w = Window::make(warne_c6(), -1, 1, 0);
    auto h = greens(w, GreenRel::H, w.span() + 2);
    bool layered = true;
    for (size_t a = 0; a < w.elements.size() && layered; ++a)
      for (size_t b = 0; b < w.elements.size() && layered; ++b) {
        bool same_layer = w.elements[a].i == w.elements[b].i &&
                          w.elements[a].j == w.elements[b].j;
        if (same_layer != (h.class_of[a] == h.class_of[b])) layered = false;
      }
    out.push_back(layered
                      ? CheckResult::pass("h-classes-are-group-layers",
                                          (Int)w.elements.size(),
                                          "each h-class is one (i,j) layer")
                      : CheckResult::fail("h-classes-are-group-layers",
                                          (Int)w.elements.size(),
                                          "h-class differs from a layer"));
  }
  return out;
}

std::vector<CheckResult> suite_ideal_pullback() {
  std::vector<CheckResult> out;
  auto chain3 = FiniteMonoid::builtin("chain3");
  auto expect = [&](const std::string& tag, const std::vector<int>& ideal,
                    const std::vector<int>& want) {
    auto got = ideal_pullback(*chain3, ideal);
    out.push_back(got == want
                      ? CheckResult::pass(tag, (Int)got.size(),
                                          "pullback matches enumeration")
                      : CheckResult::fail(tag, (Int)got.size(),
                                          "unexpected pullback"));
  };
  expect("chain3-bottom", {2}, {2});
  expect("chain3-upper-pair", {1, 2}, {1, 2});
  expect("chain3-all", {0, 1, 2}, {0, 1, 2});
  {
    auto c6 = FiniteMonoid::builtin("c6");
    auto got = ideal_pullback(*c6, {0});
    out.push_back(got.size() == 6
                      ? CheckResult::pass("group-total-pullback", 6,
                                          "the unit ideal pulls back to all")
                      : CheckResult::fail("group-total-pullback",
                                          (Int)got.size(), "wrong size"));
  }
  {
    bool threw = false;
    try {
      ideal_pullback(*chain3, {0});  // {top} is not downward absorbing
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    out.push_back(threw ? CheckResult::pass("non-ideal-rejected", 1,
                                            "usage error raised")
                        : CheckResult::fail("non-ideal-rejected", 1,
                                            "no usage error"));
  }
  return out;
}

std::vector<Suite> make_builtin_suites() {
  return {
      {"ext-bicyclic-assoc", suite_ext_bicyclic_assoc},
      {"ext-bicyclic-oracle", suite_ext_bicyclic_oracle},
      {"zbr-assoc", suite_zbr_assoc},
      {"zbr-worked-products", suite_zbr_worked_products},
      {"remark-1.2-grading", suite_grading_fuzz},
      {"prop-1.1-ii-semilattice2", suite_inverse_semilattice2},
      {"prop-1.1-ii-leftzero", suite_inverse_leftzero},
      {"prop-1.1-iii-regular", suite_regular_transfer},
      {"prop-1.1-i-simple", suite_simple},
      {"warne-f-coeff", suite_warne_f_coeff},
      {"warne-branch-agreement", suite_warne_branch_agreement},
      {"warne-assoc-c6", suite_warne_assoc},
      {"warne-zbruck-agreement", suite_warne_zbruck_agreement},
      {"i-bisimple-chain", suite_i_bisimple},
      {"example-3.7-containments", suite_example_37_containments},
      {"hausdorff-all-kinds", suite_hausdorff_all},
      {"separate-continuity-all-kinds", suite_separate_continuity_all},
      {"joint-continuity", suite_joint_continuity},
      {"inversion-continuity", suite_inversion_continuity},
      {"example-3.7-inversion-discontinuity",
       suite_37_inversion_discontinuity},
      {"example-3.9-joint-failure", suite_39_joint_failure},
      {"nbhd-lowerset", suite_nbhd_lowerset},
      {"restriction-discrete", suite_restriction_discrete},
      {"coarser-strict", suite_coarser_strict},
      {"oip-nplus", suite_oip_nplus},
      {"oip-nmax", suite_oip_nmax},
      {"oip-chain3-fails", suite_oip_chain3_fails},
      {"corollary-2.5-consistency", suite_corollary_discreteness},
      {"greens-window", suite_greens_window},
      {"ideal-pullback-clifford", suite_ideal_pullback},
  };
}

}  // namespace

const std::vector<Suite>& builtin_suites() {
  static const std::vector<Suite> suites = make_builtin_suites();
  return suites;
}

std::vector<std::string> builtin_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : builtin_suites()) out.push_back(s.name);
  return out;
}

VerificationReport run_suite(const std::string& name) {
  return run_suites({name});
}

VerificationReport run_suites(const std::vector<std::string>& names) {
  std::vector<const Suite*> todo;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : builtin_suites()) todo.push_back(&s);
      continue;
    }
    const Suite* found = nullptr;
    for (const auto& s : builtin_suites())
      if (s.name == n) found = &s;
    if (!found) throw std::invalid_argument("unknown suite: " + n);
    todo.push_back(found);
  }
  VerificationReport report;
  for (const Suite* s : todo) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    try {
      results = s->run();
    } catch (const std::exception& e) {
      results = {CheckResult::fail("construction", 0,
                                   std::string("suite aborted: ") + e.what())};
    }
    auto t1 = std::chrono::steady_clock::now();
    double total_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    double per = results.empty() ? 0.0 : total_ms / (double)results.size();
    for (const auto& r : results)
      report.records.push_back(
          {s->name, r.name, r.status, r.witness, r.count, per});
    if (results.empty())
      report.records.push_back(
          {s->name, "(empty)", CheckStatus::Pass, "no checks", 0, total_ms});
  }
  return report;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(1);
    t << rec.time_ms << "ms";
    out << rec.suite << " | " << rec.check << " | " << to_string(rec.status)
        << " | " << (rec.witness.empty() ? "-" : rec.witness) << " | "
        << rec.counts << " | " << t.str() << "\n";
  }
  return out.str();
}

std::string report_machine(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    nlohmann::ordered_json j;
    j["suite"] = rec.suite;
    j["check"] = rec.check;
    j["status"] = to_string(rec.status);
    j["witness"] = rec.witness;
    j["counts"] = rec.counts;
    j["time_ms"] = rec.time_ms;
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace zbrx
