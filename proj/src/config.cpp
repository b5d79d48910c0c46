#include "zbrx/config.hpp"

#include <algorithm>
#include <sstream>

namespace zbrx {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + where + ": " + what);
}

}  // namespace

Int parse_config_int(const std::string& digits, const std::string& field) {
  std::string t = trim(digits);
  if (t.empty()) bad(field, "empty integer");
  size_t pos = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (pos == t.size()) bad(field, "sign with no digits: '" + t + "'");
  for (size_t k = pos; k < t.size(); ++k)
    if (!isdigit((unsigned char)t[k]))
      bad(field, "not an integer: '" + t + "'");
  // the format itself has no width limit; the engine is 64-bit wide,
  // so anything beyond that is refused rather than wrapped
  try {
    size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size()) bad(field, "trailing junk in '" + t + "'");
    return v;
  } catch (const std::out_of_range&) {
    bad(field, "'" + t + "' exceeds the 64-bit engine range");
  }
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig c;
  c.suites.clear();
  bool saw_suite = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t colon = t.find(':');
    std::string where = "line " + std::to_string(lineno);
    if (colon == std::string::npos) bad(where, "expected 'key: value'");
    std::string key = trim(t.substr(0, colon));
    std::string val = trim(t.substr(colon + 1));
    where += " (" + key + ")";
    if (key == "construction")
      c.construction = val;
    else if (key == "carrier")
      c.carrier = val;
    else if (key == "theta")
      c.theta = val;
    else if (key == "u") {
      c.u.clear();
      if (val != "none")
        for (const std::string& item : split(val, ',')) {
          auto eq = item.find('=');
          if (eq == std::string::npos) bad(where, "u entries are n=v");
          Int n = parse_config_int(item.substr(0, eq), key);
          Int v = parse_config_int(item.substr(eq + 1), key);
          c.u[n] = v;
        }
    } else if (key == "window") {
      auto parts = split(val, ' ');
      parts.erase(std::remove(parts.begin(), parts.end(), std::string()),
                  parts.end());
      if (parts.size() != 2) bad(where, "window takes two bounds");
      c.window_lo = parse_config_int(parts[0], key);
      c.window_hi = parse_config_int(parts[1], key);
      if (c.window_lo > c.window_hi) bad(where, "window bounds reversed");
    } else if (key == "gbound") {
      c.gbound = parse_config_int(val, key);
      if (c.gbound < 0) bad(where, "gbound must be nonnegative");
    } else if (key == "topology")
      c.topology = val;
    else if (key == "schedule") {
      c.schedule = parse_config_int(val, key);
      if (c.schedule < 1) bad(where, "schedule must be positive");
    } else if (key == "suite") {
      saw_suite = true;
      for (const std::string& s : split(val, ','))
        if (!trim(s).empty()) c.suites.push_back(trim(s));
    } else
      bad(where, "unknown key");
  }
  if (!saw_suite) c.suites = {"all"};
  return c;
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  out << "construction: " << construction << "\n";
  out << "carrier: " << carrier << "\n";
  out << "theta: " << theta << "\n";
  out << "u: ";
  if (u.empty())
    out << "none";
  else {
    bool first = true;
    for (auto [n, v] : u) {
      if (!first) out << ",";
      first = false;
      out << n << "=" << v;
    }
  }
  out << "\n";
  out << "window: " << window_lo << " " << window_hi << "\n";
  out << "gbound: " << gbound << "\n";
  out << "topology: " << topology << "\n";
  out << "schedule: " << schedule << "\n";
  out << "suite: ";
  for (size_t k = 0; k < suites.size(); ++k)
    out << (k ? "," : "") << suites[k];
  out << "\n";
  return out.str();
}

ExtSemigroup RunConfig::build_semigroup() const {
  std::string spec = carrier;
  Carrier ca = spec.find(';') != std::string::npos
                   ? Carrier::finite(std::make_shared<FiniteMonoid>(
                         FiniteMonoid::parse([&] {
                           std::string t = spec;
                           std::replace(t.begin(), t.end(), ';', '\n');
                           return t;
                         }())))
                   : Carrier::named(spec);
  if (construction == "ext-bicyclic") {
    if (!u.empty()) bad("u", "only the warne construction takes u");
    return ExtSemigroup::ext_bicyclic();
  }
  Theta th = Theta::named(theta, ca);
  std::string why;
  if (!th.validate(ca, &why)) bad("theta", why);
  if (construction == "zbr") {
    if (!u.empty()) bad("u", "only the warne construction takes u");
    return ExtSemigroup::zbr(ca, th);
  }
  if (construction == "zbruck") {
    if (!u.empty()) bad("u", "only the warne construction takes u");
    if (!th.is_annihilating())
      bad("theta", "the zbruck construction fixes theta = annihilating");
    return ExtSemigroup::zbruck(ca);
  }
  if (construction == "warne") {
    if (!ca.is_group())
      bad("carrier", "the warne construction needs a group carrier, got '" +
                         ca.name() + "'");
    return ExtSemigroup::warne(ca, th, u);
  }
  bad("construction", "unknown construction '" + construction + "'");
}

TopologySpec RunConfig::build_topology() const {
  ExtSemigroup sg = build_semigroup();
  if (topology == "direct-sum") return TopologySpec::direct_sum(sg);
  if (topology == "unit-tail") return TopologySpec::unit_tail(sg);
  if (topology == "int-upper-tail") return TopologySpec::int_upper_tail(sg);
  if (topology == "int-two-sided-tail")
    return TopologySpec::int_two_sided_tail(sg);
  if (topology == "coarsened") {
    std::vector<Int> bounds;
    for (Int b = 1; b <= std::max<Int>(schedule * 4, 16); ++b)
      bounds.push_back(b);
    return TopologySpec::coarsened(
        sg, OIPFamily::upper_tails(sg.carrier(), bounds));
  }
  bad("topology", topology == "none" ? "no topology selected"
                                     : "unknown kind '" + topology + "'");
}

}  // namespace zbrx
