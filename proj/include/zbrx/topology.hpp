#ifndef ZBRX_TOPOLOGY_HPP
#define ZBRX_TOPOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zbrx/descriptor.hpp"
#include "zbrx/report.hpp"
#include "zbrx/structure.hpp"

namespace zbrx {

/// Finite union of layers (i, D, j); the symbolic set all topology
/// reasoning runs on. Layers at the same position are kept merged, so
/// subset/disjointness reduce to exact per-layer descriptor decisions.
class LayeredSet {
 public:
  explicit LayeredSet(Carrier c) : carrier_(std::move(c)) {}

  void add(Int i, Int j, SetDescriptor d);
  bool member(const Element& x) const;
  bool is_empty() const;
  bool subset_of(const LayeredSet& o) const;
  bool disjoint_with(const LayeredSet& o) const;
  LayeredSet unite(const LayeredSet& o) const;
  /// Some element of this \ o, if any (sampled within the descriptor
  /// algebra, exact for tails).
  std::optional<Element> element_outside(const LayeredSet& o) const;

  const std::map<std::pair<Int, Int>, SetDescriptor>& layers() const {
    return layers_;
  }
  const Carrier& carrier() const { return carrier_; }
  std::string to_string() const;

 private:
  Carrier carrier_;
  std::map<std::pair<Int, Int>, SetDescriptor> layers_;
};

/// Base neighborhood: a layered set with its anchor point.
struct BaseNbhd {
  Element anchor;
  LayeredSet set;
  bool member(const Element& x) const { return set.member(x); }
};

LayeredSet singleton_set(const Carrier& c, const Element& x);

/// Exact image of A * B under the extension's product, layer pair by
/// layer pair (each pair falls into one fixed case of the product
/// formula, so descriptors map by shift / theta-image / setwise
/// product only).
LayeredSet product_image(const ExtSemigroup& sg, const LayeredSet& a,
                         const LayeredSet& b);

/// Exact image under (i,g,j) -> (j, g^{-1}, i).
LayeredSet inversion_image(const ExtSemigroup& sg, const LayeredSet& a);

/// Family of open ideals with per-point disjoint-neighborhood
/// witnesses (over a discrete carrier the witness neighborhood is the
/// singleton).
class OIPFamily {
 public:
  static OIPFamily upper_tails(const Carrier& c, std::vector<Int> bounds);
  static OIPFamily explicit_ideals(const Carrier& c,
                                   std::vector<SetDescriptor> ideals);

  const Carrier& carrier() const { return carrier_; }
  Int count() const { return (Int)ideals_.size(); }
  const SetDescriptor& ideal(Int idx) const { return ideals_.at((size_t)idx); }
  /// Smallest ideal index whose ideal misses x, with the singleton
  /// witness neighborhood.
  std::optional<std::pair<Int, SetDescriptor>> witness(Int x) const;

 private:
  explicit OIPFamily(Carrier c) : carrier_(std::move(c)) {}
  Carrier carrier_;
  std::vector<SetDescriptor> ideals_;
};

CheckResult check_oip(const OIPFamily& f, Int sample_bound);

/// One of the six neighborhood-base families. Points whose base is a
/// single atom report the one parameter 0; tailed points report the
/// schedule-bounded parameter range.
class TopologySpec {
 public:
  enum class Kind {
    DirectSum,
    Coarsened,
    UnitTail,      // isolated non-units; upper tail below the unit layer
    IntUpperTail,  // integer group; upper tail below the idempotent layer
    IntTwoSidedTail
  };

  static TopologySpec direct_sum(ExtSemigroup sg);
  static TopologySpec coarsened(ExtSemigroup sg, OIPFamily ideals);
  static TopologySpec unit_tail(ExtSemigroup sg);
  static TopologySpec int_upper_tail(ExtSemigroup sg);
  static TopologySpec int_two_sided_tail(ExtSemigroup sg);

  Kind kind() const { return kind_; }
  const ExtSemigroup& semigroup() const { return sg_; }
  const std::string& name() const { return name_; }
  const OIPFamily* ideals() const { return ideals_ ? &*ideals_ : nullptr; }

  /// Whether the base at x is the one-parameter tail family (false:
  /// singleton atom only).
  bool tailed_at(const Element& x) const;
  std::vector<Int> params_at(const Element& x, Int schedule) const;
  BaseNbhd base_at(const Element& x, Int param) const;

 private:
  TopologySpec(Kind k, ExtSemigroup sg, std::string name)
      : kind_(k), sg_(std::move(sg)), name_(std::move(name)) {}
  Kind kind_;
  ExtSemigroup sg_;
  std::string name_;
  std::optional<OIPFamily> ideals_;
};

CheckResult check_hausdorff(const TopologySpec& t, const Window& w,
                            Int schedule);
CheckResult check_separate_continuity(const TopologySpec& t, const Window& w,
                                      Int schedule);
CheckResult check_joint_continuity(const TopologySpec& t, const Window& w,
                                   Int schedule);
CheckResult check_inversion_continuity(const TopologySpec& t, const Window& w,
                                       Int schedule);
/// Strict coarseness against the direct sum topology: a point all of
/// whose base elements keep a nonempty lower layer.
CheckResult check_coarser_strict(const TopologySpec& t, const Window& w,
                                 Int schedule);
/// Every base element's layers sit at (i-k, j-k), k >= 0.
CheckResult check_nbhd_lowerset(const TopologySpec& t, const Window& w,
                                Int schedule);
/// Restricted to the layer S_{0,0}, the base induces the discrete
/// topology (a base element meeting S_{0,0} only in the anchor exists
/// at every (0,s,0)).
CheckResult check_restriction_discrete(const TopologySpec& t, const Window& w,
                                       Int schedule);

}  // namespace zbrx

#endif  // ZBRX_TOPOLOGY_HPP
