#ifndef ZBRX_DESCRIPTOR_HPP
#define ZBRX_DESCRIPTOR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zbrx/extensions.hpp"

namespace zbrx {

/// Raised when a requested set operation leaves the decidable
/// fragment (e.g. scaling an infinite tail by |c| > 1).
class UndecidableFormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of Z in canonical interval form: an optional lower tail
/// {k <= lower}, finitely many isolated points, an optional upper
/// tail {k >= upper}. Closed under union, intersection, negation,
/// shift, Minkowski sum and max-combination, with exact (not
/// approximate) results, so subset/disjointness are decidable.
///
/// Canonical invariants: points sorted, unique, outside the tails and
/// not adjacent to them; the full set is represented as lower = 0,
/// upper = 1 with no points.
struct IntSet {
  std::optional<Int> lower;
  std::vector<Int> points;
  std::optional<Int> upper;

  static IntSet empty() { return {}; }
  static IntSet full();
  static IntSet at_most(Int k);
  static IntSet at_least(Int k);
  static IntSet of(std::vector<Int> pts);
  static IntSet single(Int k) { return of({k}); }

  bool is_empty() const { return !lower && !upper && points.empty(); }
  bool is_full() const;
  bool contains(Int k) const;
  /// Number of elements, or nullopt when infinite.
  std::optional<Int> size() const;

  IntSet unite(const IntSet& o) const;
  IntSet intersect(const IntSet& o) const;
  bool subset_of(const IntSet& o) const;
  bool disjoint_with(const IntSet& o) const;

  IntSet shifted(Int d) const;
  IntSet negated() const;
  /// {c*k : k in this}; throws UndecidableFormError when a tail
  /// would become a proper arithmetic progression (|c| > 1).
  IntSet scaled(Int c) const;
  /// Minkowski sum {a + b}.
  IntSet summed(const IntSet& o) const;
  /// {max(a, b) : a in this, b in o}.
  IntSet max_combined(const IntSet& o) const;
  /// Z \ this (exact; the gap between tails is finite).
  IntSet complement() const;
  /// Some element of this \ o (smallest by |k|), or nullopt.
  std::optional<Int> witness_outside(const IntSet& o) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;

  void canon();
  std::string to_string() const;
};

/// Set of carrier values: a bitset for finite carriers, an IntSet
/// (implicitly clipped to the valid ground set) for integer carriers.
class SetDescriptor {
 public:
  static SetDescriptor empty(const Carrier& c);
  static SetDescriptor full(const Carrier& c);
  static SetDescriptor explicit_set(const Carrier& c, const std::vector<Int>& vals);
  static SetDescriptor single(const Carrier& c, Int v);
  /// {s >= n} over an integer carrier.
  static SetDescriptor upper_tail(const Carrier& c, Int n);
  /// {s <= n} over an integer carrier.
  static SetDescriptor lower_tail(const Carrier& c, Int n);
  /// {s <= -n} u {s >= n} over an integer carrier.
  static SetDescriptor two_sided_tail(const Carrier& c, Int n);

  const Carrier& carrier() const { return carrier_; }
  bool contains(Int s) const;
  bool is_empty() const;
  bool is_full() const;
  std::optional<Int> size() const;

  SetDescriptor unite(const SetDescriptor& o) const;
  SetDescriptor intersect(const SetDescriptor& o) const;
  bool subset_of(const SetDescriptor& o) const;
  bool disjoint_with(const SetDescriptor& o) const;
  bool operator==(const SetDescriptor& o) const;
  /// Some carrier value in this \ o, or nullopt.
  std::optional<Int> witness_outside(const SetDescriptor& o) const;

  /// Image {f * s : s in this} / {s * f : s in this} of a fixed-element
  /// translation in the carrier.
  SetDescriptor left_mul_image(Int f) const;
  SetDescriptor right_mul_image(Int f) const;
  /// Setwise carrier product {a * b : a in this, b in o}.
  SetDescriptor product(const SetDescriptor& o) const;
  /// Image and preimage under theta^k.
  SetDescriptor theta_image(const Theta& t, Int k) const;
  SetDescriptor theta_preimage(const Theta& t, Int k) const;
  /// Image under the carrier inversion map.
  SetDescriptor inverse_image() const;

  /// Concrete values within the sample bound (see Carrier::sample_values).
  std::vector<Int> sample(Int bound) const;

  std::string to_string() const;

 private:
  explicit SetDescriptor(Carrier c) : carrier_(std::move(c)) {}
  IntSet ground() const;  // integer carriers: the valid ground set
  SetDescriptor with(IntSet s) const;
  SetDescriptor with(std::vector<char> b) const;

  Carrier carrier_;
  std::vector<char> bits_;  // finite carriers
  IntSet iset_;             // integer carriers
};

}  // namespace zbrx

#endif  // ZBRX_DESCRIPTOR_HPP
