#include "zbrx/descriptor.hpp"

#include <algorithm>
#include <sstream>

namespace zbrx {

namespace {

constexpr Int kIntervalCap = 1 << 21;

void append_interval(std::vector<Int>& pts, Int a, Int b) {
  if (a > b) return;
  if (b - a >= kIntervalCap)
    throw std::length_error("interval form: tail overlap too wide to enumerate");
  for (Int k = a; k <= b; ++k) pts.push_back(k);
}

Int floor_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

}  // namespace

IntSet IntSet::full() {
  IntSet s;
  s.lower = 0;
  s.upper = 1;
  return s;
}

IntSet IntSet::at_most(Int k) {
  IntSet s;
  s.lower = k;
  return s;
}

IntSet IntSet::at_least(Int k) {
  IntSet s;
  s.upper = k;
  return s;
}

IntSet IntSet::of(std::vector<Int> pts) {
  IntSet s;
  s.points = std::move(pts);
  s.canon();
  return s;
}

bool IntSet::is_full() const { return lower && upper && *lower == 0 && *upper == 1; }

bool IntSet::contains(Int k) const {
  if (lower && k <= *lower) return true;
  if (upper && k >= *upper) return true;
  return std::binary_search(points.begin(), points.end(), k);
}

std::optional<Int> IntSet::size() const {
  if (lower || upper) return std::nullopt;
  return (Int)points.size();
}

void IntSet::canon() {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Int> keep;
    keep.reserve(points.size());
    for (Int p : points) {
      if ((lower && p <= *lower) || (upper && p >= *upper)) continue;
      keep.push_back(p);
    }
    points.swap(keep);
    if (lower && !points.empty() && points.front() == *lower + 1) {
      lower = points.front();
      points.erase(points.begin());
      changed = true;
    }
    if (upper && !points.empty() && points.back() == *upper - 1) {
      upper = points.back();
      points.pop_back();
      changed = true;
    }
  }
  if (lower && upper && *upper <= *lower + 1) {
    lower = 0;
    upper = 1;
    points.clear();
  }
}

IntSet IntSet::unite(const IntSet& o) const {
  IntSet r;
  if (lower || o.lower)
    r.lower = lower && o.lower ? std::max(*lower, *o.lower)
                               : (lower ? *lower : *o.lower);
  if (upper || o.upper)
    r.upper = upper && o.upper ? std::min(*upper, *o.upper)
                               : (upper ? *upper : *o.upper);
  r.points = points;
  r.points.insert(r.points.end(), o.points.begin(), o.points.end());
  r.canon();
  return r;
}

IntSet IntSet::intersect(const IntSet& o) const {
  IntSet r;
  if (lower && o.lower) r.lower = std::min(*lower, *o.lower);
  if (upper && o.upper) r.upper = std::max(*upper, *o.upper);
  for (Int p : points)
    if (o.contains(p)) r.points.push_back(p);
  for (Int p : o.points)
    if (contains(p)) r.points.push_back(p);
  if (lower && o.upper) append_interval(r.points, *o.upper, *lower);
  if (upper && o.lower) append_interval(r.points, *upper, *o.lower);
  r.canon();
  return r;
}

bool IntSet::subset_of(const IntSet& o) const { return unite(o) == o; }

bool IntSet::disjoint_with(const IntSet& o) const {
  return intersect(o).is_empty();
}

IntSet IntSet::shifted(Int d) const {
  IntSet r = *this;
  if (r.lower) *r.lower += d;
  if (r.upper) *r.upper += d;
  for (Int& p : r.points) p += d;
  r.canon();
  return r;
}

IntSet IntSet::negated() const {
  IntSet r;
  if (upper) r.lower = -*upper;
  if (lower) r.upper = -*lower;
  for (Int p : points) r.points.push_back(-p);
  r.canon();
  return r;
}

IntSet IntSet::scaled(Int c) const {
  if (c == 1 || is_empty()) return *this;
  if (c == -1) return negated();
  if (c == 0) return single(0);
  if (lower || upper)
    throw UndecidableFormError(
        "scaling a tail by |c| > 1 leaves the interval form");
  IntSet r;
  for (Int p : points) r.points.push_back(c * p);
  r.canon();
  return r;
}

IntSet IntSet::summed(const IntSet& o) const {
  if (is_empty() || o.is_empty()) return empty();
  auto sup = [](const IntSet& x) -> std::optional<Int> {
    if (x.upper) return std::nullopt;  // unbounded above
    Int m = x.lower ? *x.lower : x.points.front();
    if (!x.points.empty()) m = std::max(m, x.points.back());
    return m;
  };
  auto inf = [](const IntSet& x) -> std::optional<Int> {
    if (x.lower) return std::nullopt;
    Int m = x.upper ? *x.upper : x.points.back();
    if (!x.points.empty()) m = std::min(m, x.points.front());
    return m;
  };
  IntSet r;
  auto take_lower = [&](Int a, const IntSet& other) -> bool {
    auto s = sup(other);
    if (!s) return false;  // tail meets an unbounded-above set: everything
    Int cand = a + *s;
    r.lower = r.lower ? std::max(*r.lower, cand) : cand;
    return true;
  };
  auto take_upper = [&](Int a, const IntSet& other) -> bool {
    auto i = inf(other);
    if (!i) return false;
    Int cand = a + *i;
    r.upper = r.upper ? std::min(*r.upper, cand) : cand;
    return true;
  };
  if (lower && !take_lower(*lower, o)) return full();
  if (o.lower && !take_lower(*o.lower, *this)) return full();
  if (upper && !take_upper(*upper, o)) return full();
  if (o.upper && !take_upper(*o.upper, *this)) return full();
  if ((Int)points.size() * (Int)o.points.size() > kIntervalCap)
    throw std::length_error("interval form: point sum too large");
  for (Int p : points)
    for (Int q : o.points) r.points.push_back(p + q);
  r.canon();
  return r;
}

IntSet IntSet::max_combined(const IntSet& o) const {
  if (is_empty() || o.is_empty()) return empty();
  // {max(a,b)} = (A restricted to k >= min B) u (B restricted to k >= min A)
  auto clip = [](const IntSet& x, const IntSet& against) {
    if (against.lower) return x;  // unbounded below: no restriction
    Int m = against.upper ? *against.upper : against.points.front();
    if (!against.points.empty()) m = std::min(m, against.points.front());
    return x.intersect(at_least(m));
  };
  return clip(*this, o).unite(clip(o, *this));
}

IntSet IntSet::complement() const {
  if (is_empty()) return full();
  if (is_full()) return empty();
  IntSet r;
  Int start, end;
  if (lower) {
    start = *lower + 1;
  } else {
    Int m = points.empty() ? *upper : points.front();
    if (upper) m = std::min(m, *upper);
    r.lower = m - 1;
    start = m;
  }
  if (upper) {
    end = *upper - 1;
  } else {
    Int m = points.empty() ? *lower : points.back();
    if (lower) m = std::max(m, *lower);
    r.upper = m + 1;
    end = m;
  }
  if (end - start >= kIntervalCap)
    throw std::length_error("interval form: complement gap too wide");
  for (Int k = start; k <= end; ++k)
    if (!contains(k)) r.points.push_back(k);
  r.canon();
  return r;
}

std::optional<Int> IntSet::witness_outside(const IntSet& o) const {
  IntSet diff = intersect(o.complement());
  if (diff.is_empty()) return std::nullopt;
  if (!diff.points.empty()) {
    Int best = diff.points.front();
    for (Int p : diff.points)
      if (std::abs(p) < std::abs(best)) best = p;
    return best;
  }
  if (diff.upper && (!diff.lower || std::abs(*diff.upper) <= std::abs(*diff.lower)))
    return *diff.upper;
  return *diff.lower;
}

std::string IntSet::to_string() const {
  if (is_empty()) return "{}";
  if (is_full()) return "Z";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " u ";
    first = false;
  };
  if (lower) {
    sep();
    out << "{k<=" << *lower << "}";
  }
  if (!points.empty()) {
    sep();
    out << "{";
    for (size_t i = 0; i < points.size(); ++i)
      out << (i ? "," : "") << points[i];
    out << "}";
  }
  if (upper) {
    sep();
    out << "{k>=" << *upper << "}";
  }
  return out.str();
}

IntSet SetDescriptor::ground() const {
  return carrier_.kind() == Carrier::Kind::IntAdd ? IntSet::full()
                                                  : IntSet::at_least(0);
}

SetDescriptor SetDescriptor::with(IntSet s) const {
  SetDescriptor d(carrier_);
  d.iset_ = std::move(s);
  return d;
}

SetDescriptor SetDescriptor::with(std::vector<char> b) const {
  SetDescriptor d(carrier_);
  d.bits_ = std::move(b);
  return d;
}

SetDescriptor SetDescriptor::empty(const Carrier& c) {
  SetDescriptor d(c);
  if (c.is_finite()) d.bits_.assign(c.monoid().size(), 0);
  return d;
}

SetDescriptor SetDescriptor::full(const Carrier& c) {
  SetDescriptor d(c);
  if (c.is_finite())
    d.bits_.assign(c.monoid().size(), 1);
  else
    d.iset_ = d.ground();
  return d;
}

SetDescriptor SetDescriptor::explicit_set(const Carrier& c,
                                          const std::vector<Int>& vals) {
  SetDescriptor d = empty(c);
  for (Int v : vals) {
    if (!c.valid_value(v))
      throw std::invalid_argument("set descriptor: value outside the carrier");
    if (c.is_finite())
      d.bits_[(size_t)v] = 1;
    else
      d.iset_.points.push_back(v);
  }
  d.iset_.canon();
  return d;
}

SetDescriptor SetDescriptor::single(const Carrier& c, Int v) {
  return explicit_set(c, {v});
}

SetDescriptor SetDescriptor::upper_tail(const Carrier& c, Int n) {
  if (c.is_finite())
    throw std::invalid_argument("upper tail needs an integer carrier");
  SetDescriptor d(c);
  d.iset_ = IntSet::at_least(n).intersect(d.ground());
  return d;
}

SetDescriptor SetDescriptor::lower_tail(const Carrier& c, Int n) {
  if (c.is_finite())
    throw std::invalid_argument("lower tail needs an integer carrier");
  SetDescriptor d(c);
  d.iset_ = IntSet::at_most(n).intersect(d.ground());
  return d;
}

SetDescriptor SetDescriptor::two_sided_tail(const Carrier& c, Int n) {
  if (c.is_finite())
    throw std::invalid_argument("two-sided tail needs an integer carrier");
  SetDescriptor d(c);
  d.iset_ = IntSet::at_most(-n).unite(IntSet::at_least(n)).intersect(d.ground());
  return d;
}

bool SetDescriptor::contains(Int s) const {
  if (!carrier_.valid_value(s)) return false;
  if (carrier_.is_finite()) return bits_[(size_t)s] != 0;
  return iset_.contains(s);
}

bool SetDescriptor::is_empty() const {
  if (carrier_.is_finite())
    return std::find(bits_.begin(), bits_.end(), 1) == bits_.end();
  return iset_.is_empty();
}

bool SetDescriptor::is_full() const {
  if (carrier_.is_finite())
    return std::find(bits_.begin(), bits_.end(), 0) == bits_.end();
  return ground().subset_of(iset_);
}

std::optional<Int> SetDescriptor::size() const {
  if (carrier_.is_finite())
    return (Int)std::count(bits_.begin(), bits_.end(), 1);
  return iset_.size();
}

static void check_same(const Carrier& a, const Carrier& b) {
  bool same = a.kind() == b.kind() &&
              (!a.is_finite() || a.monoid_ptr().get() == b.monoid_ptr().get());
  if (!same)
    throw std::invalid_argument("set descriptors over different carriers");
}

SetDescriptor SetDescriptor::unite(const SetDescriptor& o) const {
  check_same(carrier_, o.carrier_);
  if (carrier_.is_finite()) {
    auto b = bits_;
    for (size_t k = 0; k < b.size(); ++k) b[k] |= o.bits_[k];
    return with(std::move(b));
  }
  return with(iset_.unite(o.iset_));
}

SetDescriptor SetDescriptor::intersect(const SetDescriptor& o) const {
  check_same(carrier_, o.carrier_);
  if (carrier_.is_finite()) {
    auto b = bits_;
    for (size_t k = 0; k < b.size(); ++k) b[k] &= o.bits_[k];
    return with(std::move(b));
  }
  return with(iset_.intersect(o.iset_));
}

bool SetDescriptor::subset_of(const SetDescriptor& o) const {
  check_same(carrier_, o.carrier_);
  if (carrier_.is_finite()) {
    for (size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] && !o.bits_[k]) return false;
    return true;
  }
  return iset_.subset_of(o.iset_);
}

bool SetDescriptor::disjoint_with(const SetDescriptor& o) const {
  return intersect(o).is_empty();
}

bool SetDescriptor::operator==(const SetDescriptor& o) const {
  check_same(carrier_, o.carrier_);
  return carrier_.is_finite() ? bits_ == o.bits_ : iset_ == o.iset_;
}

std::optional<Int> SetDescriptor::witness_outside(const SetDescriptor& o) const {
  check_same(carrier_, o.carrier_);
  if (carrier_.is_finite()) {
    for (size_t s = 0; s < bits_.size(); ++s)
      if (bits_[s] && !o.bits_[s]) return (Int)s;
    return std::nullopt;
  }
  return iset_.witness_outside(o.iset_);
}

SetDescriptor SetDescriptor::left_mul_image(Int f) const {
  switch (carrier_.kind()) {
    case Carrier::Kind::Finite: {
      std::vector<char> b(bits_.size(), 0);
      for (size_t s = 0; s < bits_.size(); ++s)
        if (bits_[s]) b[(size_t)carrier_.mul(f, (Int)s)] = 1;
      return with(std::move(b));
    }
    case Carrier::Kind::IntAdd:
    case Carrier::Kind::NatAdd:
      return with(iset_.shifted(f));
    case Carrier::Kind::NatMax:
      return with(iset_.max_combined(IntSet::single(f)));
  }
  throw std::logic_error("descriptor: bad carrier kind");
}

SetDescriptor SetDescriptor::right_mul_image(Int f) const {
  if (!carrier_.is_finite()) return left_mul_image(f);  // commutative carriers
  std::vector<char> b(bits_.size(), 0);
  for (size_t s = 0; s < bits_.size(); ++s)
    if (bits_[s]) b[(size_t)carrier_.mul((Int)s, f)] = 1;
  return with(std::move(b));
}

SetDescriptor SetDescriptor::product(const SetDescriptor& o) const {
  check_same(carrier_, o.carrier_);
  switch (carrier_.kind()) {
    case Carrier::Kind::Finite: {
      std::vector<char> b(bits_.size(), 0);
      for (size_t s = 0; s < bits_.size(); ++s)
        if (bits_[s])
          for (size_t t = 0; t < bits_.size(); ++t)
            if (o.bits_[t]) b[(size_t)carrier_.mul((Int)s, (Int)t)] = 1;
      return with(std::move(b));
    }
    case Carrier::Kind::IntAdd:
    case Carrier::Kind::NatAdd:
      return with(iset_.summed(o.iset_));
    case Carrier::Kind::NatMax:
      return with(iset_.max_combined(o.iset_));
  }
  throw std::logic_error("descriptor: bad carrier kind");
}

SetDescriptor SetDescriptor::theta_image(const Theta& t, Int k) const {
  if (k < 0) throw std::invalid_argument("theta image: negative power");
  if (k == 0 || t.kind() == Theta::Kind::Identity) return *this;
  switch (t.kind()) {
    case Theta::Kind::Annihilating:
      return is_empty() ? *this : single(carrier_, carrier_.unit());
    case Theta::Kind::Table: {
      std::vector<char> b(bits_.size(), 0);
      for (size_t s = 0; s < bits_.size(); ++s)
        if (bits_[s]) b[(size_t)t.power(carrier_, k, (Int)s)] = 1;
      return with(std::move(b));
    }
    case Theta::Kind::Scale: {
      Int mult = t.power(carrier_, k, 1);
      return with(iset_.scaled(mult));
    }
    default:
      throw std::logic_error("theta image: bad kind");
  }
}

SetDescriptor SetDescriptor::theta_preimage(const Theta& t, Int k) const {
  if (k < 0) throw std::invalid_argument("theta preimage: negative power");
  if (k == 0 || t.kind() == Theta::Kind::Identity) return *this;
  switch (t.kind()) {
    case Theta::Kind::Annihilating:
      return contains(carrier_.unit()) ? full(carrier_) : empty(carrier_);
    case Theta::Kind::Table: {
      std::vector<char> b(bits_.size(), 0);
      for (size_t s = 0; s < bits_.size(); ++s)
        if (bits_[(size_t)t.power(carrier_, k, (Int)s)]) b[s] = 1;
      return with(std::move(b));
    }
    case Theta::Kind::Scale: {
      Int m = t.power(carrier_, k, 1);
      if (m == 0)
        return contains(0) ? full(carrier_) : empty(carrier_);
      IntSet r;
      if (iset_.lower) {
        if (m > 0)
          r.lower = floor_div(*iset_.lower, m);
        else
          r.upper = ceil_div(*iset_.lower, m);
      }
      if (iset_.upper) {
        if (m > 0)
          r.upper = ceil_div(*iset_.upper, m);
        else
          r.lower = floor_div(*iset_.upper, m);
      }
      for (Int p : iset_.points)
        if (p % m == 0) r.points.push_back(p / m);
      r.canon();
      return with(std::move(r));
    }
    default:
      throw std::logic_error("theta preimage: bad kind");
  }
}

SetDescriptor SetDescriptor::inverse_image() const {
  switch (carrier_.kind()) {
    case Carrier::Kind::Finite: {
      if (!carrier_.is_inverse())
        throw std::invalid_argument("inverse image: carrier is not inverse");
      std::vector<char> b(bits_.size(), 0);
      for (size_t s = 0; s < bits_.size(); ++s)
        if (bits_[s]) b[(size_t)carrier_.inverse((Int)s)] = 1;
      return with(std::move(b));
    }
    case Carrier::Kind::IntAdd:
      return with(iset_.negated());
    case Carrier::Kind::NatMax:
      return *this;  // every element is its own inverse in a semilattice
    case Carrier::Kind::NatAdd:
      throw std::invalid_argument("inverse image: (N,+) is not inverse");
  }
  throw std::logic_error("descriptor: bad carrier kind");
}

std::vector<Int> SetDescriptor::sample(Int bound) const {
  std::vector<Int> out;
  for (Int s : carrier_.sample_values(bound))
    if (contains(s)) out.push_back(s);
  return out;
}

std::string SetDescriptor::to_string() const {
  if (!carrier_.is_finite()) return iset_.to_string();
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (size_t s = 0; s < bits_.size(); ++s)
    if (bits_[s]) {
      out << (first ? "" : ",") << s;
      first = false;
    }
  out << "}";
  return out.str();
}

}  // namespace zbrx
