// Command-line front end. Talks to the core only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zbrx.h"

namespace {

constexpr int kUsageExit = 64;

struct Flags {
  std::string config_path;
  std::string construction, carrier, theta, u, topology, suite;
  std::vector<int64_t> window;
  int64_t gbound = -1, schedule = -1, cap = 1000000;
  std::string out_path, format = "text";
};

// Flags become config lines; an explicit --config file supplies the
// base and flags override it line by line.
std::string config_text(const Flags& f) {
  std::ostringstream out;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw std::runtime_error("cannot read " + f.config_path);
    out << in.rdbuf() << "\n";
  }
  if (!f.construction.empty()) out << "construction: " << f.construction << "\n";
  if (!f.carrier.empty()) out << "carrier: " << f.carrier << "\n";
  if (!f.theta.empty()) out << "theta: " << f.theta << "\n";
  if (!f.u.empty()) out << "u: " << f.u << "\n";
  if (f.window.size() == 2)
    out << "window: " << f.window[0] << " " << f.window[1] << "\n";
  if (f.gbound >= 0) out << "gbound: " << f.gbound << "\n";
  if (!f.topology.empty()) out << "topology: " << f.topology << "\n";
  if (f.schedule >= 0) out << "schedule: " << f.schedule << "\n";
  if (!f.suite.empty()) out << "suite: " << f.suite << "\n";
  return out.str();
}

// Later lines win for duplicate keys, which is how flag overrides
// work; normalize through the canonical form so the core sees one
// value per key.
int canonicalize(const std::string& raw, std::string* out) {
  // collapse duplicates: keep the last occurrence of each key
  std::istringstream in(raw);
  std::string line;
  std::vector<std::pair<std::string, std::string>> kv;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos &&
          line[line.find_first_not_of(" \t\r")] != '#') {
        std::fprintf(stderr, "error: config: bad line '%s'\n", line.c_str());
        return kUsageExit;
      }
      continue;
    }
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    bool replaced = false;
    for (auto& [k, v] : kv)
      if (k == key) {
        v = line;
        replaced = true;
      }
    if (!replaced) kv.emplace_back(key, line);
  }
  std::string merged;
  for (const auto& [k, v] : kv) merged += v + "\n";
  char* canon = nullptr;
  if (zbrx_config_canonical(merged.c_str(), &canon) != ZBRX_OK) {
    std::fprintf(stderr, "error: %s\n", zbrx_last_error());
    return kUsageExit + 1;
  }
  *out = canon;
  zbrx_string_free(canon);
  return 0;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return kUsageExit;
  }
  out << text;
  return 0;
}

int run_verify(const Flags& f) {
  std::string cfg;
  if (int rc = canonicalize(config_text(f), &cfg)) return rc;
  zbrx_report* rep = nullptr;
  if (zbrx_verify_run(cfg.c_str(), &rep) != ZBRX_OK) {
    std::fprintf(stderr, "error: %s\n", zbrx_last_error());
    return kUsageExit + 1;
  }
  char* text = nullptr;
  zbrx_status st = f.format == "machine" ? zbrx_report_machine(rep, &text)
                                         : zbrx_report_text(rep, &text);
  if (st != ZBRX_OK) {
    std::fprintf(stderr, "error: %s\n", zbrx_last_error());
    zbrx_report_free(rep);
    return kUsageExit + 2;
  }
  std::string body = text;
  zbrx_string_free(text);
  int code = 0;
  zbrx_report_exit_code(rep, &code);
  zbrx_report_free(rep);
  // the report always goes to standard output; --out adds a copy
  std::fputs(body.c_str(), stdout);
  if (!f.out_path.empty())
    if (int rc = write_output(body, f.out_path)) return rc;
  return code;
}

int run_cayley(const Flags& f) {
  std::string cfg;
  if (int rc = canonicalize(config_text(f), &cfg)) return rc;
  zbrx_semigroup* sg = nullptr;
  if (zbrx_semigroup_from_config(cfg.c_str(), &sg) != ZBRX_OK) {
    std::fprintf(stderr, "error: %s\n", zbrx_last_error());
    return kUsageExit + 1;
  }
  int64_t lo = f.window.size() == 2 ? f.window[0] : -2;
  int64_t hi = f.window.size() == 2 ? f.window[1] : 2;
  int64_t gb = f.gbound >= 0 ? f.gbound : 2;
  char* table = nullptr;
  zbrx_status st = zbrx_semigroup_cayley(sg, lo, hi, gb, f.cap, &table);
  zbrx_semigroup_free(sg);
  if (st == ZBRX_ERR_LIMIT) {
    std::fprintf(stderr, "refused: %s\n", zbrx_last_error());
    return kUsageExit + 3;
  }
  if (st != ZBRX_OK) {
    std::fprintf(stderr, "error: %s\n", zbrx_last_error());
    return kUsageExit + 1;
  }
  std::string body = table;
  zbrx_string_free(table);
  return write_output(body, f.out_path);
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "config file (flags override)");
  cmd->add_option("--construction", f.construction,
                  "ext-bicyclic | zbr | zbruck | warne");
  cmd->add_option("--carrier", f.carrier,
                  "builtin name, int-group/nat-plus/nat-max, or inline table "
                  "(';' for newlines)");
  cmd->add_option("--theta", f.theta,
                  "annihilating | identity | table name | scale(c) | doubling");
  cmd->add_option("--u", f.u, "warne coefficients, e.g. -1=1,-2=4");
  cmd->add_option("--window", f.window, "index window LO HI")
      ->expected(2);
  cmd->add_option("--gbound", f.gbound, "value bound for integer carriers");
  cmd->add_option("--topology", f.topology,
                  "direct-sum | coarsened | unit-tail | int-upper-tail | "
                  "int-two-sided-tail");
  cmd->add_option("--schedule", f.schedule, "search schedule bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extension-semigroup workbench"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, f);
  verify->add_option("--suite", f.suite, "suite name, comma list, or 'all'");
  verify->add_option("--out", f.out_path, "also write the report here");
  verify->add_option("--format", f.format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));

  CLI::App* cayley =
      app.add_subcommand("cayley", "export a window product table");
  add_common(cayley, f);
  cayley->add_option("--cap", f.cap, "refuse beyond this many products");
  cayley->add_option("--out", f.out_path, "write the table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // keep usage failures above the 0/1/2 verification codes
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageExit;
  }

  try {
    if (verify->parsed()) return run_verify(f);
    if (cayley->parsed()) return run_cayley(f);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsageExit;
  }
  return kUsageExit;
}
