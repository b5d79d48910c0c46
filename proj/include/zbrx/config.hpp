#ifndef ZBRX_CONFIG_HPP
#define ZBRX_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "zbrx/extensions.hpp"
#include "zbrx/topology.hpp"

namespace zbrx {

/// A run description, one "key: value" line per field. The format
/// carries arbitrary-size integers; values outside the engine's 64-bit
/// range are rejected at parse time with a field diagnostic rather
/// than truncated.
struct RunConfig {
  std::string construction = "ext-bicyclic";
  // named builtin, "int-group"/"nat-plus"/"nat-max", or an inline
  // table in the monoid text format with ';' standing for newlines
  std::string carrier = "trivial";
  std::string theta = "annihilating";
  std::map<Int, Int> u;  // finite support, n <= 0
  Int window_lo = -2, window_hi = 2;
  Int gbound = 2;
  std::string topology = "none";
  Int schedule = 3;
  std::vector<std::string> suites = {"all"};

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  /// Throws std::invalid_argument with a line/field diagnostic.
  static RunConfig parse(const std::string& text);
  /// Canonical form; parse(serialize(c)) == c.
  std::string serialize() const;

  /// Validates field combinations and instantiates; throws
  /// std::invalid_argument on an invalid combination.
  ExtSemigroup build_semigroup() const;
  /// Requires topology != "none".
  TopologySpec build_topology() const;
};

/// Digit-string to Int; rejects values outside 64 bits with a
/// diagnostic naming `field`.
Int parse_config_int(const std::string& digits, const std::string& field);

}  // namespace zbrx

#endif  // ZBRX_CONFIG_HPP
