#ifndef ZBRX_MONOID_HPP
#define ZBRX_MONOID_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zbrx {

using Int = long long;

/// A finite monoid given by its full multiplication table.
///
/// Elements are indices 0..size-1. Construction validates closure,
/// the two-sided identity and associativity over all triples, so
/// every later table lookup is total.
class FiniteMonoid {
 public:
  FiniteMonoid(std::vector<std::vector<int>> table, int unit);

  /// Parse the plain-text table format: first line "n unit_index",
  /// then n rows of n space-separated element indices.
  static FiniteMonoid parse(const std::string& text);
  static std::shared_ptr<const FiniteMonoid> builtin(const std::string& name);
  static std::vector<std::string> builtin_names();

  /// Inverse of parse(); round-trips bit-exactly.
  std::string format() const;

  int size() const { return size_; }
  int unit() const { return unit_; }
  int mul(int a, int b) const { return table_[a][b]; }

  /// H(1_S): elements with a two-sided inverse.
  const std::vector<int>& group_of_units() const { return units_; }
  bool is_unit(int x) const { return unit_flag_[x]; }
  /// Inverse within the group of units; usage error on non-units.
  int unit_inverse(int x) const;

  const std::vector<int>& idempotents() const { return idempotents_; }
  bool is_idempotent(int x) const { return mul(x, x) == x; }
  /// Natural partial order on idempotents: e <= f iff ef = fe = e.
  bool natural_leq(int e, int f) const;

  struct Classification {
    bool is_regular = false;
    bool is_inverse = false;
    bool is_clifford = false;
    /// Populated iff is_inverse.
    std::optional<std::vector<int>> inverse_map;
  };
  const Classification& classify() const { return classification_; }
  bool is_group() const { return (int)units_.size() == size_; }

  /// New monoid of size+1 with an adjoined isolated unit at index size().
  FiniteMonoid adjoin_unit() const;

 private:
  void compute_caches();

  int size_;
  int unit_;
  std::vector<std::vector<int>> table_;
  std::vector<int> units_;
  std::vector<char> unit_flag_;
  std::vector<int> idempotents_;
  Classification classification_;
};

/// A homomorphism theta: S^1 -> H(1_S), given element-wise.
///
/// The map is stored as an arbitrary array; check() reports whether it
/// really is a homomorphism into the group of units (with the first
/// violation found), so invalid maps are representable but detectable.
class UnitHom {
 public:
  UnitHom(std::shared_ptr<const FiniteMonoid> parent, std::vector<int> image);
  static UnitHom annihilating(std::shared_ptr<const FiniteMonoid> m);
  static UnitHom identity(std::shared_ptr<const FiniteMonoid> m);

  bool check(std::string* why = nullptr) const;

  int apply(int s) const { return image_[s]; }
  /// theta^n(s); n = 0 is the identity map. Negative n is a usage error.
  int power(Int n, int s) const;

  const FiniteMonoid& parent() const { return *parent_; }
  std::shared_ptr<const FiniteMonoid> parent_ptr() const { return parent_; }

  static constexpr Int kPowerCacheBound = 64;

 private:
  std::shared_ptr<const FiniteMonoid> parent_;
  std::vector<int> image_;
  // read-through cache; observable behavior is pure
  mutable std::map<std::pair<Int, int>, int> power_cache_;
};

/// Endomorphism of the infinite group (Z,+): k -> c*k, with the
/// annihilating map as the c = 0 case kept as its own kind.
struct IntGroupEndo {
  enum class Kind { Annihilating, Scale };
  Kind kind = Kind::Annihilating;
  Int scale = 0;

  static IntGroupEndo annihilating() { return {Kind::Annihilating, 0}; }
  static IntGroupEndo scaled(Int c) { return {Kind::Scale, c}; }

  Int apply(Int k) const { return kind == Kind::Annihilating ? 0 : scale * k; }
  Int power(Int n, Int k) const;
};

}  // namespace zbrx

#endif  // ZBRX_MONOID_HPP
