#include "zbrx.h"

#include <cstring>
#include <new>
#include <string>

#include "zbrx/config.hpp"
#include "zbrx/descriptor.hpp"
#include "zbrx/verify.hpp"

struct zbrx_monoid {
  std::shared_ptr<const zbrx::FiniteMonoid> m;
};
struct zbrx_semigroup {
  zbrx::ExtSemigroup sg;
};
struct zbrx_report {
  zbrx::VerificationReport rep;
};

namespace {

thread_local std::string g_last_error;

zbrx_status set_error(zbrx_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs `fn`, mapping exceptions onto status codes. parse_context
/// flips invalid_argument to ZBRX_ERR_PARSE (the argument being parsed
/// is user text, not a programming error).
template <typename Fn>
zbrx_status guarded(bool parse_context, Fn&& fn) {
  try {
    fn();
    return ZBRX_OK;
  } catch (const zbrx::UndecidableFormError& e) {
    return set_error(ZBRX_ERR_UNSUPPORTED, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(parse_context ? ZBRX_ERR_PARSE : ZBRX_ERR_ARGUMENT,
                     e.what());
  } catch (const std::length_error& e) {
    return set_error(ZBRX_ERR_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ZBRX_ERR_LIMIT, "allocation failed");
  } catch (const std::exception& e) {
    return set_error(ZBRX_ERR_INTERNAL, e.what());
  }
}

bool require(bool cond, const char* what) {
  if (!cond) set_error(ZBRX_ERR_ARGUMENT, what);
  return cond;
}

}  // namespace

extern "C" {

const char* zbrx_last_error(void) { return g_last_error.c_str(); }

void zbrx_string_free(char* s) { delete[] s; }

zbrx_status zbrx_monoid_builtin(const char* name, zbrx_monoid** out) {
  if (!require(name && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(false, [&] {
    auto m = zbrx::FiniteMonoid::builtin(name);
    *out = new zbrx_monoid{std::move(m)};
  });
}

zbrx_status zbrx_monoid_parse(const char* text, zbrx_monoid** out) {
  if (!require(text && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(true, [&] {
    auto m = std::make_shared<zbrx::FiniteMonoid>(
        zbrx::FiniteMonoid::parse(text));
    *out = new zbrx_monoid{std::move(m)};
  });
}

zbrx_status zbrx_monoid_format(const zbrx_monoid* m, char** out) {
  if (!require(m && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(false, [&] { *out = dup_string(m->m->format()); });
}

void zbrx_monoid_free(zbrx_monoid* m) { delete m; }

zbrx_status zbrx_semigroup_from_config(const char* config_text,
                                       zbrx_semigroup** out) {
  if (!require(config_text && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(true, [&] {
    auto cfg = zbrx::RunConfig::parse(config_text);
    *out = new zbrx_semigroup{cfg.build_semigroup()};
  });
}

zbrx_status zbrx_semigroup_mul(const zbrx_semigroup* g, int64_t i1, int64_t s1,
                               int64_t j1, int64_t i2, int64_t s2, int64_t j2,
                               int64_t* ri, int64_t* rs, int64_t* rj) {
  if (!require(g && ri && rs && rj, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(false, [&] {
    zbrx::Element r = g->sg.mul({i1, s1, j1}, {i2, s2, j2});
    *ri = r.i;
    *rs = r.s;
    *rj = r.j;
  });
}

zbrx_status zbrx_semigroup_cayley(const zbrx_semigroup* g, int64_t lo,
                                  int64_t hi, int64_t gbound, int64_t cap,
                                  char** out) {
  if (!require(g && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(false, [&] {
    *out = dup_string(zbrx::cayley_window(g->sg, lo, hi, gbound, cap));
  });
}

void zbrx_semigroup_free(zbrx_semigroup* g) { delete g; }

zbrx_status zbrx_config_canonical(const char* config_text, char** out) {
  if (!require(config_text && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(true, [&] {
    *out = dup_string(zbrx::RunConfig::parse(config_text).serialize());
  });
}

zbrx_status zbrx_suite_names(char** out) {
  if (!require(out != nullptr, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(false, [&] {
    std::string s;
    for (const auto& n : zbrx::builtin_suite_names()) s += n + "\n";
    *out = dup_string(s);
  });
}

zbrx_status zbrx_verify_run(const char* config_text, zbrx_report** out) {
  if (!require(config_text && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(true, [&] {
    auto cfg = zbrx::RunConfig::parse(config_text);
    // configs naming a construction are validated up front so a typo
    // fails fast instead of surfacing mid-run
    cfg.build_semigroup();
    auto rep = zbrx::run_suites(cfg.suites);
    *out = new zbrx_report{std::move(rep)};
  });
}

zbrx_status zbrx_report_text(const zbrx_report* r, char** out) {
  if (!require(r && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(false, [&] { *out = dup_string(zbrx::report_text(r->rep)); });
}

zbrx_status zbrx_report_machine(const zbrx_report* r, char** out) {
  if (!require(r && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  return guarded(false,
                 [&] { *out = dup_string(zbrx::report_machine(r->rep)); });
}

zbrx_status zbrx_report_exit_code(const zbrx_report* r, int* out) {
  if (!require(r && out, "null argument")) return ZBRX_ERR_ARGUMENT;
  *out = r->rep.exit_code();
  return ZBRX_OK;
}

void zbrx_report_free(zbrx_report* r) { delete r; }

}  // extern "C"
