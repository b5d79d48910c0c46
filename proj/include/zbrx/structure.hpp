#ifndef ZBRX_STRUCTURE_HPP
#define ZBRX_STRUCTURE_HPP

#include <map>
#include <utility>
#include <vector>

#include "zbrx/extensions.hpp"
#include "zbrx/report.hpp"

namespace zbrx {

/// Finite slice {(i,s,j) : lo <= i,j <= hi, s sampled} of an extension.
/// Not closed under products; every checker accounts for escapes.
/// Elements are enumerated smallest-first by (|i|+|j|, i, j, s), the
/// order counterexamples are minimized in.
struct Window {
  ExtSemigroup sg;
  Int lo = 0, hi = 0, gbound = 0;
  std::vector<Element> elements;

  static Window make(const ExtSemigroup& sg, Int lo, Int hi, Int gbound);

  Int span() const { return hi - lo; }
  bool in_index_range(const Element& x) const {
    return x.i >= lo && x.i <= hi && x.j >= lo && x.j <= hi;
  }
  /// Multiplier pool: indices widened by `extra` on each side (values
  /// likewise for the infinite group carrier).
  std::vector<Element> enlarged(Int extra) const;
};

/// Grade i - j + (s for the infinite-group layer is ignored); every
/// product of (i,s,j) and (m,t,n) lands at a position with
/// k - l = i - j + m - n.
inline Int grade(const Element& x) { return x.i - x.j; }

std::vector<Element> idempotents_ext(const Window& w);

/// Natural partial order on idempotents: x <= y iff xy = yx = x.
bool natural_order_ext(const ExtSemigroup& sg, const Element& x,
                       const Element& y);

enum class GreenRel { R, L, H, D };

/// Window-approximate Green classes: relatedness is witnessed by
/// bounded multipliers and therefore sound; non-relatedness is only
/// relative to the bound.
struct GreenClasses {
  GreenRel rel;
  Int multiplier_bound = 0;
  std::vector<int> class_of;  // aligned with Window::elements
  int class_count = 0;
};

GreenClasses greens(const Window& w, GreenRel rel, Int multiplier_bound);

/// Constructive simplicity witness: x, y with x*a*y = b, valid for
/// every extension kind here (theta lands in the unit group, so the
/// middle factor can always be cancelled one index level up).
std::pair<Element, Element> simplicity_witness(const ExtSemigroup& sg,
                                               const Element& a,
                                               const Element& b);

/// Verifies x*a*y = b for deterministically sampled pairs (a,b).
CheckResult check_simple(const Window& w, Int n_pairs);

/// S inverse => unique inverses throughout the window;
/// S not inverse => some window element with != 1 inverses.
CheckResult check_inverse_transfer(const Window& w, Int multiplier_bound);

/// Same with the weaker xyx = x criterion.
CheckResult check_regular_transfer(const Window& w, Int multiplier_bound);

/// (a) window idempotents form a chain anti-isomorphic to the index
/// order (one per index, reversed comparisons); (b) the D-approximation
/// has a single class. Reports the computed order shape on failure.
CheckResult check_I_bisimple(const Window& w, Int multiplier_bound);

/// Pullback of an ideal I of E(S) along x -> x * x^{-1} in a Clifford
/// monoid; asserts the result is an ideal of S.
std::vector<int> ideal_pullback(const FiniteMonoid& m,
                                const std::vector<int>& ideal_of_idempotents);

}  // namespace zbrx

#endif  // ZBRX_STRUCTURE_HPP
