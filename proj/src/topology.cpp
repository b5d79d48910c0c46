#include "zbrx/topology.hpp"

#include <algorithm>
#include <sstream>

namespace zbrx {

void LayeredSet::add(Int i, Int j, SetDescriptor d) {
  if (d.is_empty()) return;
  auto key = std::make_pair(i, j);
  auto it = layers_.find(key);
  if (it == layers_.end())
    layers_.emplace(key, std::move(d));
  else
    it->second = it->second.unite(d);
}

bool LayeredSet::member(const Element& x) const {
  auto it = layers_.find({x.i, x.j});
  return it != layers_.end() && it->second.contains(x.s);
}

bool LayeredSet::is_empty() const { return layers_.empty(); }

bool LayeredSet::subset_of(const LayeredSet& o) const {
  for (const auto& [pos, d] : layers_) {
    auto it = o.layers_.find(pos);
    if (it == o.layers_.end()) return false;
    if (!d.subset_of(it->second)) return false;
  }
  return true;
}

bool LayeredSet::disjoint_with(const LayeredSet& o) const {
  for (const auto& [pos, d] : layers_) {
    auto it = o.layers_.find(pos);
    if (it != o.layers_.end() && !d.disjoint_with(it->second)) return false;
  }
  return true;
}

LayeredSet LayeredSet::unite(const LayeredSet& o) const {
  LayeredSet r = *this;
  for (const auto& [pos, d] : o.layers_) r.add(pos.first, pos.second, d);
  return r;
}

std::optional<Element> LayeredSet::element_outside(const LayeredSet& o) const {
  for (const auto& [pos, d] : layers_) {
    auto it = o.layers_.find(pos);
    std::optional<Int> s;
    if (it == o.layers_.end())
      s = d.witness_outside(SetDescriptor::empty(carrier_));
    else
      s = d.witness_outside(it->second);
    if (s) return Element{pos.first, *s, pos.second};
  }
  return std::nullopt;
}

std::string LayeredSet::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [pos, d] : layers_) {
    if (!first) out << " u ";
    first = false;
    out << "(" << pos.first << "," << d.to_string() << "," << pos.second << ")";
  }
  return first ? "{}" : out.str();
}

LayeredSet singleton_set(const Carrier& c, const Element& x) {
  LayeredSet s(c);
  s.add(x.i, x.j, SetDescriptor::single(c, x.s));
  return s;
}

namespace {

SetDescriptor warne_branch_image(const ExtSemigroup& sg, const SetDescriptor& d1,
                                 const SetDescriptor& d2, Int a, Int b, Int c,
                                 Int d) {
  const Carrier& car = sg.carrier();
  if (b >= c) {
    Int f1 = sg.f_coeff(b - c, c);
    Int f2 = sg.f_coeff(b - c, d);
    return d1.right_mul_image(car.inverse(f1))
        .product(d2.theta_image(sg.theta(), b - c))
        .right_mul_image(f2);
  }
  Int f1 = sg.f_coeff(c - b, a);
  Int f2 = sg.f_coeff(c - b, b);
  return d1.theta_image(sg.theta(), c - b)
      .left_mul_image(car.inverse(f1))
      .right_mul_image(f2)
      .product(d2);
}

}  // namespace

LayeredSet product_image(const ExtSemigroup& sg, const LayeredSet& a,
                         const LayeredSet& b) {
  LayeredSet out(a.carrier());
  for (const auto& [pa, da] : a.layers())
    for (const auto& [pb, db] : b.layers()) {
      const Int i1 = pa.first, j1 = pa.second;
      const Int i2 = pb.first, j2 = pb.second;
      if (sg.kind() == ConstructionKind::Warne) {
        Int ri = j1 >= i2 ? i1 : i1 - j1 + i2;
        Int rj = j1 >= i2 ? j2 - i2 + j1 : j2;
        out.add(ri, rj, warne_branch_image(sg, da, db, i1, j1, i2, j2));
        continue;
      }
      if (j1 < i2)
        out.add(i1 - j1 + i2, j2,
                da.theta_image(sg.theta(), i2 - j1).product(db));
      else if (j1 == i2)
        out.add(i1, j2, da.product(db));
      else
        out.add(i1, j2 - i2 + j1,
                da.product(db.theta_image(sg.theta(), j1 - i2)));
    }
  return out;
}

LayeredSet inversion_image(const ExtSemigroup& sg, const LayeredSet& a) {
  if (!sg.inverse_available())
    throw std::invalid_argument("inversion image: no inversion available");
  LayeredSet out(a.carrier());
  for (const auto& [pos, d] : a.layers())
    out.add(pos.second, pos.first, d.inverse_image());
  return out;
}

OIPFamily OIPFamily::upper_tails(const Carrier& c, std::vector<Int> bounds) {
  if (c.is_finite())
    throw std::invalid_argument("tail ideals need an integer carrier");
  OIPFamily f(c);
  std::sort(bounds.begin(), bounds.end());
  for (Int b : bounds) f.ideals_.push_back(SetDescriptor::upper_tail(c, b));
  return f;
}

OIPFamily OIPFamily::explicit_ideals(const Carrier& c,
                                     std::vector<SetDescriptor> ideals) {
  OIPFamily f(c);
  f.ideals_ = std::move(ideals);
  return f;
}

std::optional<std::pair<Int, SetDescriptor>> OIPFamily::witness(Int x) const {
  for (size_t k = 0; k < ideals_.size(); ++k)
    if (!ideals_[k].contains(x))
      return std::make_pair((Int)k, SetDescriptor::single(carrier_, x));
  return std::nullopt;
}

CheckResult check_oip(const OIPFamily& f, Int sample_bound) {
  SetDescriptor all = SetDescriptor::full(f.carrier());
  Int examined = 0;
  for (Int k = 0; k < f.count(); ++k) {
    const SetDescriptor& ideal = f.ideal(k);
    ++examined;
    if (ideal.is_empty())
      return CheckResult::fail("open-ideal-property", examined,
                               "ideal " + std::to_string(k) + " is empty");
    if (!all.product(ideal).subset_of(ideal) ||
        !ideal.product(all).subset_of(ideal))
      return CheckResult::fail(
          "open-ideal-property", examined,
          "absorption fails for ideal " + std::to_string(k) + " = " +
              ideal.to_string());
  }
  // finite intersection property on subfamilies of size <= 3
  for (Int a = 0; a < f.count(); ++a)
    for (Int b = a; b < f.count(); ++b)
      for (Int c = b; c < f.count(); ++c) {
        ++examined;
        if (f.ideal(a).intersect(f.ideal(b)).intersect(f.ideal(c)).is_empty())
          return CheckResult::fail(
              "open-ideal-property", examined,
              "empty triple intersection of ideals " + std::to_string(a) +
                  "," + std::to_string(b) + "," + std::to_string(c));
      }
  for (Int x : f.carrier().sample_values(sample_bound)) {
    ++examined;
    auto wit = f.witness(x);
    if (!wit)
      return CheckResult::fail(
          "open-ideal-property", examined,
          "no ideal avoids the element " + std::to_string(x) +
              " (every listed ideal contains it)");
    if (!SetDescriptor::single(f.carrier(), x).disjoint_with(f.ideal(wit->first)))
      return CheckResult::fail("open-ideal-property", examined,
                               "witness neighborhood meets its ideal at " +
                                   std::to_string(x));
  }
  return CheckResult::pass("open-ideal-property", examined,
                           "absorption, triple intersections and per-point "
                           "witnesses verified");
}

TopologySpec TopologySpec::direct_sum(ExtSemigroup sg) {
  return TopologySpec(Kind::DirectSum, std::move(sg), "direct-sum");
}

TopologySpec TopologySpec::coarsened(ExtSemigroup sg, OIPFamily ideals) {
  if (ideals.carrier().kind() != sg.carrier().kind())
    throw std::invalid_argument("coarsened: ideal family over a different carrier");
  TopologySpec t(Kind::Coarsened, std::move(sg), "coarsened");
  t.ideals_ = std::move(ideals);
  return t;
}

TopologySpec TopologySpec::unit_tail(ExtSemigroup sg) {
  auto k = sg.carrier().kind();
  if (k != Carrier::Kind::NatAdd && k != Carrier::Kind::NatMax)
    throw std::invalid_argument(
        "unit-tail base needs a natural-number carrier");
  return TopologySpec(Kind::UnitTail, std::move(sg), "unit-tail");
}

TopologySpec TopologySpec::int_upper_tail(ExtSemigroup sg) {
  if (sg.carrier().kind() != Carrier::Kind::IntAdd)
    throw std::invalid_argument("upper-tail base needs the integer carrier");
  return TopologySpec(Kind::IntUpperTail, std::move(sg), "int-upper-tail");
}

TopologySpec TopologySpec::int_two_sided_tail(ExtSemigroup sg) {
  if (sg.carrier().kind() != Carrier::Kind::IntAdd)
    throw std::invalid_argument(
        "two-sided-tail base needs the integer carrier");
  return TopologySpec(Kind::IntTwoSidedTail, std::move(sg),
                      "int-two-sided-tail");
}

bool TopologySpec::tailed_at(const Element& x) const {
  switch (kind_) {
    case Kind::DirectSum:
      return false;
    case Kind::Coarsened:
      return sg_.carrier().in_unit_group(x.s);
    case Kind::UnitTail:
    case Kind::IntUpperTail:
    case Kind::IntTwoSidedTail:
      return x.s == sg_.carrier().unit();
  }
  return false;
}

std::vector<Int> TopologySpec::params_at(const Element& x, Int schedule) const {
  if (!tailed_at(x)) return {0};
  std::vector<Int> out;
  switch (kind_) {
    case Kind::Coarsened:
      for (Int k = 0; k < ideals_->count(); ++k) out.push_back(k);
      break;
    case Kind::UnitTail:
      for (Int k = 1; k <= std::max<Int>(1, schedule); ++k) out.push_back(k);
      break;
    case Kind::IntUpperTail:
      for (Int k = -schedule; k <= schedule; ++k) out.push_back(k);
      break;
    case Kind::IntTwoSidedTail:
      for (Int k = 0; k <= schedule; ++k) out.push_back(k);
      break;
    default:
      break;
  }
  return out;
}

BaseNbhd TopologySpec::base_at(const Element& x, Int param) const {
  const Carrier& c = sg_.carrier();
  LayeredSet s(c);
  s.add(x.i, x.j, SetDescriptor::single(c, x.s));
  if (tailed_at(x)) {
    switch (kind_) {
      case Kind::Coarsened: {
        if (param < 0 || param >= ideals_->count())
          throw std::invalid_argument("base: ideal index out of range");
        SetDescriptor atom = SetDescriptor::single(c, x.s);
        s.add(x.i - 1, x.j - 1,
              atom.theta_preimage(sg_.theta(), 1).intersect(
                  ideals_->ideal(param)));
        break;
      }
      case Kind::UnitTail:
        if (param < 1)
          throw std::invalid_argument("base: tail parameter must be >= 1");
        s.add(x.i - 1, x.j - 1, SetDescriptor::upper_tail(c, param));
        break;
      case Kind::IntUpperTail:
        s.add(x.i - 1, x.j - 1, SetDescriptor::upper_tail(c, param));
        break;
      case Kind::IntTwoSidedTail:
        if (param < 0)
          throw std::invalid_argument("base: tail parameter must be >= 0");
        s.add(x.i - 1, x.j - 1, SetDescriptor::two_sided_tail(c, param));
        break;
      default:
        break;
    }
  }
  return BaseNbhd{x, std::move(s)};
}

namespace {

std::string pos_str(const Element& x) { return to_string(x); }

/// Extra search room for the shrinking-side parameter: tail images
/// shift by the fixed factors involved.
Int search_margin(Int schedule, const Element& x, const Element& y) {
  return schedule + std::abs(x.s) + std::abs(y.s) + 4;
}

}  // namespace

CheckResult check_hausdorff(const TopologySpec& t, const Window& w,
                            Int schedule) {
  Int pairs = 0;
  for (size_t a = 0; a < w.elements.size(); ++a)
    for (size_t b = a + 1; b < w.elements.size(); ++b) {
      const Element& x = w.elements[a];
      const Element& y = w.elements[b];
      ++pairs;
      auto px = t.params_at(x, schedule);
      auto py = t.params_at(y, schedule);
      bool found = false;
      // largest parameters give the smallest neighborhoods; try them first
      if (t.base_at(x, px.back()).set.disjoint_with(t.base_at(y, py.back()).set))
        found = true;
      for (auto pi = px.rbegin(); !found && pi != px.rend(); ++pi)
        for (auto qi = py.rbegin(); !found && qi != py.rend(); ++qi)
          if (t.base_at(x, *pi).set.disjoint_with(t.base_at(y, *qi).set))
            found = true;
      if (!found)
        return CheckResult::fail(
            "hausdorff", pairs,
            "no disjoint base pair for " + pos_str(x) + " and " + pos_str(y) +
                " within schedule " + std::to_string(schedule) +
                " (bound-relative)");
    }
  return CheckResult::pass("hausdorff", pairs,
                           "disjoint base neighborhoods for every pair");
}

namespace {

/// Search a parameter v with image(base(y, v)) within W; descending so
/// the smallest neighborhood is tried first. Returns the witness
/// parameter, or the residue of the tightest try.
struct TailSearch {
  bool found = false;
  Int param = 0;
  std::optional<Element> residue;
};

template <typename ImageFn>
TailSearch search_param(const TopologySpec& t, const Element& anchor,
                        Int reach, const LayeredSet& target, ImageFn image) {
  TailSearch r;
  auto params = t.params_at(anchor, reach);
  for (auto it = params.rbegin(); it != params.rend(); ++it) {
    LayeredSet img = image(t.base_at(anchor, *it).set);
    if (img.subset_of(target)) {
      r.found = true;
      r.param = *it;
      return r;
    }
    if (!r.residue) r.residue = img.element_outside(target);
  }
  return r;
}

}  // namespace

CheckResult check_separate_continuity(const TopologySpec& t, const Window& w,
                                      Int schedule) {
  const ExtSemigroup& sg = t.semigroup();
  Int cases = 0;
  try {
    for (const Element& x : w.elements)
      for (const Element& y : w.elements) {
        Element z = sg.mul(x, y);
        Int reach = search_margin(schedule, x, y);
        for (Int wp : t.params_at(z, schedule)) {
          ++cases;
          LayeredSet W = t.base_at(z, wp).set;
          auto left = search_param(t, y, reach, W, [&](const LayeredSet& v) {
            return product_image(sg, singleton_set(sg.carrier(), x), v);
          });
          auto right = search_param(t, x, reach, W, [&](const LayeredSet& u) {
            return product_image(sg, u, singleton_set(sg.carrier(), y));
          });
          if (!left.found || !right.found) {
            std::string side = !left.found ? "left" : "right";
            auto& residue = !left.found ? left.residue : right.residue;
            return CheckResult::fail(
                "separate-continuity", cases,
                side + " translation at x=" + pos_str(x) + " y=" + pos_str(y) +
                    " target-param=" + std::to_string(wp) +
                    " uncovered=" +
                    (residue ? pos_str(*residue) : std::string("?")) +
                    " (schedule exhausted at " + std::to_string(reach) + ")");
          }
        }
      }
  } catch (const UndecidableFormError& e) {
    return CheckResult::inconclusive("separate-continuity", cases, e.what());
  }
  return CheckResult::pass("separate-continuity", cases,
                           "translation images fit a base neighborhood in "
                           "every scheduled case");
}

CheckResult check_joint_continuity(const TopologySpec& t, const Window& w,
                                   Int schedule) {
  const ExtSemigroup& sg = t.semigroup();
  Int cases = 0;
  try {
    for (const Element& x : w.elements)
      for (const Element& y : w.elements) {
        Element z = sg.mul(x, y);
        Int reach = search_margin(schedule, x, y);
        auto pu = t.params_at(x, reach);
        auto pv = t.params_at(y, reach);
        for (Int wp : t.params_at(z, schedule)) {
          ++cases;
          LayeredSet W = t.base_at(z, wp).set;
          bool found = false;
          std::optional<Element> residue;
          for (auto ui = pu.rbegin(); !found && ui != pu.rend(); ++ui)
            for (auto vi = pv.rbegin(); !found && vi != pv.rend(); ++vi) {
              LayeredSet img = product_image(sg, t.base_at(x, *ui).set,
                                             t.base_at(y, *vi).set);
              if (img.subset_of(W))
                found = true;
              else if (!residue)
                residue = img.element_outside(W);
            }
          if (!found)
            return CheckResult::fail(
                "joint-continuity", cases,
                "no base pair at x=" + pos_str(x) + " y=" + pos_str(y) +
                    " fits target-param=" + std::to_string(wp) +
                    " uncovered=" +
                    (residue ? pos_str(*residue) : std::string("?")) +
                    " (schedule exhausted at " + std::to_string(reach) + ")");
        }
      }
  } catch (const UndecidableFormError& e) {
    return CheckResult::inconclusive("joint-continuity", cases, e.what());
  }
  return CheckResult::pass("joint-continuity", cases,
                           "a product of base neighborhoods fits in every "
                           "scheduled case");
}

CheckResult check_inversion_continuity(const TopologySpec& t, const Window& w,
                                       Int schedule) {
  const ExtSemigroup& sg = t.semigroup();
  if (!sg.inverse_available())
    throw std::invalid_argument("inversion continuity: carrier not inverse");
  Int cases = 0;
  try {
    for (const Element& x : w.elements) {
      Element xi = sg.invert(x);
      Int reach = search_margin(schedule, x, x);
      for (Int wp : t.params_at(xi, schedule)) {
        ++cases;
        LayeredSet W = t.base_at(xi, wp).set;
        auto r = search_param(t, x, reach, W, [&](const LayeredSet& v) {
          return inversion_image(sg, v);
        });
        if (!r.found)
          return CheckResult::fail(
              "inversion-continuity", cases,
              "no base at x=" + pos_str(x) + " maps into target-param=" +
                  std::to_string(wp) + " uncovered=" +
                  (r.residue ? pos_str(*r.residue) : std::string("?")) +
                  " (schedule exhausted at " + std::to_string(reach) + ")");
      }
    }
  } catch (const UndecidableFormError& e) {
    return CheckResult::inconclusive("inversion-continuity", cases, e.what());
  }
  return CheckResult::pass(
      "inversion-continuity", cases,
      "inversion images fit a base neighborhood in every scheduled case");
}

CheckResult check_coarser_strict(const TopologySpec& t, const Window& w,
                                 Int schedule) {
  Int examined = 0;
  for (const Element& x : w.elements) {
    for (Int p : t.params_at(x, schedule)) {
      ++examined;
      BaseNbhd n = t.base_at(x, p);
      if (!n.member(x))
        return CheckResult::fail("coarser-strict", examined,
                                 "base element misses its anchor " +
                                     pos_str(x));
    }
    if (!t.tailed_at(x)) continue;
    bool always_tailed = true;
    for (Int p : t.params_at(x, schedule)) {
      auto layers = t.base_at(x, p).set.layers();
      auto it = layers.find({x.i - 1, x.j - 1});
      if (it == layers.end() || it->second.is_empty()) {
        always_tailed = false;
        break;
      }
    }
    if (always_tailed)
      return CheckResult::pass(
          "coarser-strict", examined,
          "every base element at " + pos_str(x) +
              " keeps a nonempty lower layer; the direct-sum atom is not open");
  }
  return CheckResult::fail(
      "coarser-strict", examined,
      "every window point has a base element equal to its direct-sum atom; "
      "not strictly coarser");
}

CheckResult check_nbhd_lowerset(const TopologySpec& t, const Window& w,
                                Int schedule) {
  Int examined = 0;
  for (const Element& x : w.elements)
    for (Int p : t.params_at(x, schedule)) {
      ++examined;
      BaseNbhd n = t.base_at(x, p);
      for (const auto& [pos, d] : n.set.layers()) {
        (void)d;
        Int k = x.i - pos.first;
        if (k != x.j - pos.second || k < 0)
          return CheckResult::fail(
              "neighborhood-diagonal", examined,
              "layer at (" + std::to_string(pos.first) + "," +
                  std::to_string(pos.second) + ") of the base at " +
                  pos_str(x) + " leaves the descending diagonal");
      }
    }
  return CheckResult::pass(
      "neighborhood-diagonal", examined,
      "all base layers sit at (i-k, j-k) with k >= 0");
}

CheckResult check_restriction_discrete(const TopologySpec& t, const Window& w,
                                       Int schedule) {
  Int examined = 0;
  for (const Element& x : w.elements) {
    if (x.i != 0 || x.j != 0) continue;
    bool found = false;
    for (Int p : t.params_at(x, schedule)) {
      ++examined;
      auto layers = t.base_at(x, p).set.layers();
      auto it = layers.find({0, 0});
      if (it != layers.end() &&
          it->second == SetDescriptor::single(t.semigroup().carrier(), x.s)) {
        found = true;
        break;
      }
    }
    if (!found)
      return CheckResult::fail(
          "restriction-discrete", examined,
          "no base element meets the (0,0) layer in exactly the anchor at " +
              pos_str(x));
  }
  return CheckResult::pass(
      "restriction-discrete", examined,
      "the base restricted to the (0,0) layer is discrete");
}

}  // namespace zbrx
