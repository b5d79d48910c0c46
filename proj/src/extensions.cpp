#include "zbrx/extensions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zbrx {

BicyclicPair mul_ext_bicyclic(BicyclicPair x, BicyclicPair y) {
  if (x.b < y.a) return {x.a - x.b + y.a, y.b};
  if (x.b == y.a) return {x.a, y.b};
  return {x.a, y.b - y.a + x.b};
}

Carrier Carrier::finite(std::shared_ptr<const FiniteMonoid> m) {
  Carrier c;
  c.kind_ = Kind::Finite;
  c.monoid_ = std::move(m);
  c.name_ = "finite";
  if (!c.monoid_) throw std::invalid_argument("carrier: null monoid");
  return c;
}

Carrier Carrier::int_add() {
  Carrier c;
  c.kind_ = Kind::IntAdd;
  c.name_ = "int-group";
  return c;
}

Carrier Carrier::nat_add() {
  Carrier c;
  c.kind_ = Kind::NatAdd;
  c.name_ = "nat-plus";
  return c;
}

Carrier Carrier::nat_max() {
  Carrier c;
  c.kind_ = Kind::NatMax;
  c.name_ = "nat-max";
  return c;
}

Carrier Carrier::named(const std::string& name) {
  if (name == "int-group") return int_add();
  if (name == "nat-plus") return nat_add();
  if (name == "nat-max") return nat_max();
  Carrier c = finite(FiniteMonoid::builtin(name));
  c.name_ = name;
  return c;
}

const FiniteMonoid& Carrier::monoid() const {
  if (!monoid_) throw std::logic_error("carrier: not a finite monoid");
  return *monoid_;
}

Int Carrier::unit() const { return is_finite() ? monoid_->unit() : 0; }

Int Carrier::mul(Int a, Int b) const {
  switch (kind_) {
    case Kind::Finite:
      return monoid_->mul((int)a, (int)b);
    case Kind::IntAdd:
    case Kind::NatAdd:
      return a + b;
    case Kind::NatMax:
      return std::max(a, b);
  }
  throw std::logic_error("carrier: bad kind");
}

bool Carrier::valid_value(Int s) const {
  switch (kind_) {
    case Kind::Finite:
      return s >= 0 && s < monoid_->size();
    case Kind::IntAdd:
      return true;
    case Kind::NatAdd:
    case Kind::NatMax:
      return s >= 0;
  }
  return false;
}

bool Carrier::in_unit_group(Int s) const {
  switch (kind_) {
    case Kind::Finite:
      return monoid_->is_unit((int)s);
    case Kind::IntAdd:
      return true;
    case Kind::NatAdd:
    case Kind::NatMax:
      return s == 0;
  }
  return false;
}

bool Carrier::is_group() const {
  return kind_ == Kind::IntAdd || (is_finite() && monoid_->is_group());
}

bool Carrier::is_inverse() const {
  switch (kind_) {
    case Kind::Finite:
      return monoid_->classify().is_inverse;
    case Kind::IntAdd:
      return true;
    case Kind::NatAdd:
      return false;  // only 0 is regular in (N, +)
    case Kind::NatMax:
      return true;  // a semilattice
  }
  return false;
}

Int Carrier::inverse(Int s) const {
  switch (kind_) {
    case Kind::Finite: {
      const auto& cls = monoid_->classify();
      if (!cls.is_inverse)
        throw std::invalid_argument("carrier: not an inverse monoid");
      return (*cls.inverse_map)[(size_t)s];
    }
    case Kind::IntAdd:
      return -s;
    case Kind::NatMax:
      return s;
    case Kind::NatAdd:
      throw std::invalid_argument("carrier: (N,+) is not inverse");
  }
  throw std::logic_error("carrier: bad kind");
}

std::vector<Int> Carrier::sample_values(Int bound) const {
  std::vector<Int> out;
  switch (kind_) {
    case Kind::Finite:
      for (int s = 0; s < monoid_->size(); ++s) out.push_back(s);
      break;
    case Kind::IntAdd:
      for (Int s = -bound; s <= bound; ++s) out.push_back(s);
      break;
    case Kind::NatAdd:
    case Kind::NatMax:
      for (Int s = 0; s <= bound; ++s) out.push_back(s);
      break;
  }
  return out;
}

Theta Theta::annihilating() {
  Theta t;
  t.kind_ = Kind::Annihilating;
  t.name_ = "annihilating";
  return t;
}

Theta Theta::identity() {
  Theta t;
  t.kind_ = Kind::Identity;
  t.name_ = "identity";
  return t;
}

Theta Theta::table(UnitHom hom) {
  Theta t;
  t.kind_ = Kind::Table;
  t.hom_ = std::make_shared<UnitHom>(std::move(hom));
  t.name_ = "table";
  return t;
}

Theta Theta::scale(Int c) {
  Theta t;
  t.kind_ = Kind::Scale;
  t.endo_ = IntGroupEndo::scaled(c);
  t.name_ = "scale(" + std::to_string(c) + ")";
  return t;
}

Theta Theta::named(const std::string& spec, const Carrier& carrier) {
  if (spec == "annihilating") return annihilating();
  if (spec == "identity") return identity();
  if (spec.rfind("scale(", 0) == 0 && spec.back() == ')')
    return scale(std::stoll(spec.substr(6, spec.size() - 7)));
  if (spec == "doubling" && carrier.is_finite())
    // convenience for the C6 examples: x -> x + x
    return table(UnitHom(carrier.monoid_ptr(), [&] {
      std::vector<int> img(carrier.monoid().size());
      for (int x = 0; x < (int)img.size(); ++x)
        img[x] = carrier.monoid().mul(x, x);
      return img;
    }()));
  throw std::invalid_argument("unknown theta spec: " + spec);
}

bool Theta::is_annihilating() const {
  if (kind_ == Kind::Annihilating) return true;
  if (kind_ == Kind::Scale) return endo_.kind == IntGroupEndo::Kind::Annihilating;
  return false;
}

bool Theta::validate(const Carrier& c, std::string* why) const {
  switch (kind_) {
    case Kind::Annihilating:
      return true;
    case Kind::Identity:
      if (!c.is_group()) {
        if (why) *why = "identity theta requires a group carrier";
        return false;
      }
      return true;
    case Kind::Table: {
      if (!c.is_finite() || c.monoid_ptr().get() != &hom_->parent()) {
        if (why) *why = "theta table bound to a different monoid";
        return false;
      }
      return hom_->check(why);
    }
    case Kind::Scale:
      if (c.kind() != Carrier::Kind::IntAdd) {
        if (why) *why = "scale theta requires the int-group carrier";
        return false;
      }
      return true;
  }
  return false;
}

Int Theta::apply(const Carrier& c, Int s) const {
  switch (kind_) {
    case Kind::Annihilating:
      return c.unit();
    case Kind::Identity:
      return s;
    case Kind::Table:
      return hom_->apply((int)s);
    case Kind::Scale:
      return endo_.apply(s);
  }
  throw std::logic_error("theta: bad kind");
}

Int Theta::power(const Carrier& c, Int n, Int s) const {
  if (n < 0) throw std::invalid_argument("theta power: negative exponent");
  if (n == 0) return s;
  switch (kind_) {
    case Kind::Annihilating:
      return c.unit();
    case Kind::Identity:
      return s;
    case Kind::Table:
      return hom_->power(n, (int)s);
    case Kind::Scale:
      return endo_.power(n, s);
  }
  throw std::logic_error("theta: bad kind");
}

std::string to_string(const Element& e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.s) + "," +
         std::to_string(e.j) + ")";
}

ExtSemigroup ExtSemigroup::ext_bicyclic() {
  return ExtSemigroup(ConstructionKind::ExtBicyclic,
                      Carrier::named("trivial"), Theta::annihilating());
}

ExtSemigroup ExtSemigroup::zbr(Carrier carrier, Theta theta) {
  std::string why;
  if (!theta.validate(carrier, &why))
    throw std::invalid_argument("zbr: invalid theta: " + why);
  return ExtSemigroup(ConstructionKind::ZBruckReilly, std::move(carrier),
                      std::move(theta));
}

ExtSemigroup ExtSemigroup::zbruck(Carrier carrier) {
  return ExtSemigroup(ConstructionKind::ZBruck, std::move(carrier),
                      Theta::annihilating());
}

ExtSemigroup ExtSemigroup::warne(Carrier group, Theta endo,
                                 std::map<Int, Int> u_support) {
  if (!group.is_group())
    throw std::invalid_argument("warne: carrier must be a group");
  std::string why;
  if (!endo.validate(group, &why))
    throw std::invalid_argument("warne: invalid endomorphism: " + why);
  for (const auto& [n, v] : u_support) {
    if (n >= 1)
      throw std::invalid_argument("warne: u_n must equal e for positive n");
    if (!group.valid_value(v))
      throw std::invalid_argument("warne: u value outside the group");
  }
  ExtSemigroup sg(ConstructionKind::Warne, std::move(group), std::move(endo));
  sg.u_ = std::move(u_support);
  return sg;
}

Int ExtSemigroup::u(Int n) const {
  if (n >= 1) return carrier_.unit();
  auto it = u_.find(n);
  return it == u_.end() ? carrier_.unit() : it->second;
}

Int ExtSemigroup::f_coeff(Int m, Int n) const {
  if (m < 0) throw std::invalid_argument("f_coeff: negative m");
  if (m == 0) return carrier_.unit();
  auto it = f_cache_.find({m, n});
  if (it != f_cache_.end()) return it->second;
  // theta^{m-1}(u_{n+1}) . theta^{m-2}(u_{n+2}) ... u_{n+m}, left to right
  Int acc = carrier_.unit();
  for (Int k = 1; k <= m; ++k) {
    Int factor = u(n + k);
    if (factor != carrier_.unit())  // theta fixes the unit
      factor = theta_.power(carrier_, m - k, factor);
    acc = carrier_.mul(acc, factor);
  }
  f_cache_[{m, n}] = acc;
  return acc;
}

Int ExtSemigroup::group_inverse(Int g) const {
  if (carrier_.kind() == Carrier::Kind::IntAdd) return -g;
  return carrier_.monoid().unit_inverse((int)g);
}

Element ExtSemigroup::mul_eq3(const Element& x, const Element& y) const {
  if (x.j < y.i)
    return {x.i - x.j + y.i,
            carrier_.mul(theta_.power(carrier_, y.i - x.j, x.s), y.s), y.j};
  if (x.j == y.i) return {x.i, carrier_.mul(x.s, y.s), y.j};
  return {x.i, carrier_.mul(x.s, theta_.power(carrier_, x.j - y.i, y.s)),
          y.j - y.i + x.j};
}

Element ExtSemigroup::mul_warne_branch(const Element& x, const Element& y,
                                       bool upper) const {
  const Int a = x.i, g = x.s, b = x.j;
  const Int c = y.i, h = y.s, d = y.j;
  if (upper) {
    // b >= c
    Int f1 = f_coeff(b - c, c);
    Int f2 = f_coeff(b - c, d);
    Int v = carrier_.mul(
        carrier_.mul(carrier_.mul(g, group_inverse(f1)),
                     theta_.power(carrier_, b - c, h)),
        f2);
    return {a, v, d - c + b};
  }
  // b <= c
  Int f1 = f_coeff(c - b, a);
  Int f2 = f_coeff(c - b, b);
  Int v = carrier_.mul(
      carrier_.mul(carrier_.mul(group_inverse(f1),
                                theta_.power(carrier_, c - b, g)),
                   f2),
      h);
  return {a - b + c, v, d};
}

Element ExtSemigroup::mul(const Element& x, const Element& y) const {
  switch (kind_) {
    case ConstructionKind::ExtBicyclic: {
      BicyclicPair r = mul_ext_bicyclic({x.i, x.j}, {y.i, y.j});
      return {r.a, 0, r.b};
    }
    case ConstructionKind::ZBruckReilly:
    case ConstructionKind::ZBruck:
      return mul_eq3(x, y);
    case ConstructionKind::Warne:
      return mul_warne_branch(x, y, x.j >= y.i);
  }
  throw std::logic_error("mul: bad kind");
}

bool ExtSemigroup::inverse_available() const {
  if (kind_ == ConstructionKind::ExtBicyclic) return true;
  if (kind_ == ConstructionKind::Warne) return false;  // no closed form kept
  return carrier_.is_inverse();
}

Element ExtSemigroup::invert(const Element& x) const {
  if (kind_ == ConstructionKind::ExtBicyclic) return {x.j, 0, x.i};
  if (kind_ == ConstructionKind::Warne)
    throw std::invalid_argument("invert: not provided for the Warne form");
  if (!carrier_.is_inverse())
    throw std::invalid_argument("invert: carrier is not an inverse monoid");
  return {x.j, carrier_.inverse(x.s), x.i};
}

std::string ExtSemigroup::describe() const {
  switch (kind_) {
    case ConstructionKind::ExtBicyclic:
      return "ext-bicyclic";
    case ConstructionKind::ZBruckReilly:
      return "zbr(" + carrier_.name() + "," + theta_.name() + ")";
    case ConstructionKind::ZBruck:
      return "zbruck(" + carrier_.name() + ")";
    case ConstructionKind::Warne:
      return "warne(" + carrier_.name() + "," + theta_.name() + ")";
  }
  return "?";
}

std::vector<Element> layer(Int m, Int n, const std::vector<Int>& A) {
  std::vector<Element> out;
  out.reserve(A.size());
  for (Int s : A) out.push_back({m, s, n});
  return out;
}

std::string cayley_window(const ExtSemigroup& sg, Int lo, Int hi, Int gbound,
                          Int cap) {
  if (hi < lo) throw std::invalid_argument("cayley: empty window");
  std::vector<Element> elems;
  auto values = sg.carrier().sample_values(gbound);
  for (Int i = lo; i <= hi; ++i)
    for (Int j = lo; j <= hi; ++j)
      for (Int s : values) elems.push_back({i, s, j});
  // element order (i, j, s) to match the printed field order
  std::sort(elems.begin(), elems.end(), [](const Element& a, const Element& b) {
    return std::tie(a.i, a.j, a.s) < std::tie(b.i, b.j, b.s);
  });
  Int products = (Int)elems.size() * (Int)elems.size();
  if (products > cap)
    throw std::length_error("cayley: window of " + std::to_string(products) +
                            " products exceeds cap " + std::to_string(cap));
  std::ostringstream out;
  for (const Element& x : elems)
    for (const Element& y : elems) {
      Element r = sg.mul(x, y);
      out << x.i << ' ' << x.j << ' ' << x.s << ' ' << y.i << ' ' << y.s << ' '
          << y.j << " -> " << r.i << ' ' << r.s << ' ' << r.j << '\n';
    }
  return out.str();
}

}  // namespace zbrx
