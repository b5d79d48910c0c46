#ifndef ZBRX_EXTENSIONS_HPP
#define ZBRX_EXTENSIONS_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "zbrx/monoid.hpp"

namespace zbrx {

/// Element of the extended bicyclic semigroup: all of Z x Z is valid.
struct BicyclicPair {
  Int a = 0, b = 0;
  friend bool operator==(const BicyclicPair&, const BicyclicPair&) = default;
};

/// Three-case multiplication on Z x Z.
BicyclicPair mul_ext_bicyclic(BicyclicPair x, BicyclicPair y);

/// Carrier of an extension: either a finite table monoid or one of the
/// three concrete infinite monoids used by the worked examples.
/// Element values are indices for Finite and plain integers otherwise.
class Carrier {
 public:
  enum class Kind { Finite, IntAdd, NatAdd, NatMax };

  static Carrier finite(std::shared_ptr<const FiniteMonoid> m);
  static Carrier int_add();
  static Carrier nat_add();
  static Carrier nat_max();
  /// By builtin monoid name, or "int-group" / "nat-plus" / "nat-max".
  static Carrier named(const std::string& name);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_integer_valued() const { return !is_finite(); }
  const FiniteMonoid& monoid() const;
  std::shared_ptr<const FiniteMonoid> monoid_ptr() const { return monoid_; }

  Int unit() const;
  Int mul(Int a, Int b) const;
  bool valid_value(Int s) const;
  bool in_unit_group(Int s) const;
  bool is_group() const;
  bool is_inverse() const;
  /// Generalized inverse in an inverse carrier; usage error otherwise.
  Int inverse(Int s) const;

  /// Finite sample of values for window enumeration; all elements for
  /// a finite carrier, integers within |s| <= bound (or 0..bound) else.
  std::vector<Int> sample_values(Int bound) const;

  const std::string& name() const { return name_; }

 private:
  Kind kind_ = Kind::Finite;
  std::shared_ptr<const FiniteMonoid> monoid_;
  std::string name_;
};

/// theta: S^1 -> H(1_S) in one of the shapes the constructions need.
class Theta {
 public:
  enum class Kind { Annihilating, Identity, Table, Scale };

  static Theta annihilating();
  static Theta identity();
  static Theta table(UnitHom hom);
  static Theta scale(Int c);
  static Theta named(const std::string& spec, const Carrier& carrier);

  Kind kind() const { return kind_; }
  bool is_annihilating() const;
  bool validate(const Carrier& c, std::string* why = nullptr) const;

  Int apply(const Carrier& c, Int s) const;
  Int power(const Carrier& c, Int n, Int s) const;

  const std::string& name() const { return name_; }

 private:
  Kind kind_ = Kind::Annihilating;
  std::shared_ptr<const UnitHom> hom_;
  IntGroupEndo endo_;
  std::string name_;
};

/// Element (i, s, j) of any of the extensions; s is a carrier value.
struct Element {
  Int i = 0, s = 0, j = 0;
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    return std::tie(a.i, a.s, a.j) <=> std::tie(b.i, b.s, b.j);
  }
};

std::string to_string(const Element& e);

enum class ConstructionKind { ExtBicyclic, ZBruckReilly, ZBruck, Warne };

/// One of the four extension constructions, with a uniform product.
class ExtSemigroup {
 public:
  static ExtSemigroup ext_bicyclic();
  static ExtSemigroup zbr(Carrier carrier, Theta theta);
  static ExtSemigroup zbruck(Carrier carrier);
  static ExtSemigroup warne(Carrier group, Theta endo, std::map<Int, Int> u_support);

  ConstructionKind kind() const { return kind_; }
  const Carrier& carrier() const { return carrier_; }
  const Theta& theta() const { return theta_; }

  Element mul(const Element& x, const Element& y) const;
  Element mul3(const Element& x, const Element& y, const Element& z) const {
    return mul(mul(x, y), z);
  }

  bool inverse_available() const;
  Element invert(const Element& x) const;

  /// Warne coefficient f_{m,n}; m >= 0, f_{0,n} = e.
  Int f_coeff(Int m, Int n) const;
  Int u(Int n) const;

  std::string describe() const;

 private:
  ExtSemigroup(ConstructionKind k, Carrier c, Theta t)
      : kind_(k), carrier_(std::move(c)), theta_(std::move(t)) {}

  Element mul_eq3(const Element& x, const Element& y) const;
  Int group_inverse(Int g) const;

  ConstructionKind kind_;
  Carrier carrier_;
  Theta theta_;
  std::map<Int, Int> u_;  // Warne: finite support at n <= 0
  mutable std::map<std::pair<Int, Int>, Int> f_cache_;

 public:
  /// Both product branches at b = c must agree; exposed for the
  /// branch-agreement suite.
  Element mul_warne_branch(const Element& x, const Element& y, bool upper) const;
};

/// The layer {(m, s, n) : s in A}.
std::vector<Element> layer(Int m, Int n, const std::vector<Int>& A);

/// Cayley window export: one line per product "i j s m t n -> k d l".
std::string cayley_window(const ExtSemigroup& sg, Int lo, Int hi, Int gbound,
                          Int cap);

}  // namespace zbrx

#endif  // ZBRX_EXTENSIONS_HPP
