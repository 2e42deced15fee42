#include "gfkit/gfkit.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "driver.hpp"
#include "errors.hpp"
#include "render.hpp"

using namespace gfkit;

struct gfk_system {
  SystemDocument doc;
};

struct gfk_form {
  ProductForm form;
};

namespace {

thread_local std::string g_error;

gfk_status status_of(errc c) {
  switch (c) {
    case errc::usage: return GFK_USAGE;
    case errc::syntax_error: return GFK_SYNTAX_ERROR;
    case errc::semantic_error: return GFK_SEMANTIC_ERROR;
    case errc::composition_condition: return GFK_COMPOSITION_CONDITION;
    case errc::degenerate_factor: return GFK_DEGENERATE_FACTOR;
    case errc::not_in_family: return GFK_NOT_IN_FAMILY;
    case errc::not_multiple: return GFK_NOT_MULTIPLE;
    case errc::parameter_violation: return GFK_PARAMETER_VIOLATION;
    case errc::nonpositive_ratio: return GFK_NONPOSITIVE_RATIO;
    case errc::precondition: return GFK_PRECONDITION;
    case errc::infeasible_sequence: return GFK_INFEASIBLE_SEQUENCE;
    case errc::too_many: return GFK_TOO_MANY;
    case errc::length_mismatch: return GFK_LENGTH_MISMATCH;
    case errc::unsupported: return GFK_UNSUPPORTED;
  }
  return GFK_INTERNAL;
}

template <typename F>
gfk_status guarded(F&& f) {
  try {
    g_error.clear();
    return f();
  } catch (const error& e) {
    g_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    return GFK_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return GFK_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gfk_status emit(const std::string& s, char** out) {
  *out = dup_string(s);
  if (!*out) {
    g_error = "out of memory";
    return GFK_INTERNAL;
  }
  return GFK_OK;
}

DriverOptions options_from(unsigned flags, long trunc) {
  DriverOptions opt;
  if (trunc > 0) opt.trunc = trunc;
  opt.json = (flags & GFK_F_JSON) != 0;
  opt.guard = (flags & GFK_F_NO_GUARD) == 0;
  return opt;
}

std::vector<Int> parse_csv(const char* csv) {
  if (!csv) fail(errc::usage, "missing integer list");
  std::vector<Int> out;
  std::string s(csv);
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos)
      fail(errc::usage, "empty entry in integer list '" + s + "'");
    item = item.substr(a, b - a + 1);
    std::size_t d = (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (d == item.size() || item.find_first_not_of("0123456789", d) != std::string::npos)
      fail(errc::usage, "'" + item + "' is not an integer");
    out.emplace_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

gfk_status check_args(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs)
    if (!p) {
      g_error = "null argument";
      return GFK_USAGE;
    }
  return GFK_OK;
}

}  // namespace

extern "C" {

gfk_status gfk_system_parse(const char* text, gfk_system** out) {
  if (gfk_status s = check_args({text, out}); s != GFK_OK) return s;
  return guarded([&] {
    *out = new gfk_system{parse_system(text)};
    return GFK_OK;
  });
}

void gfk_system_free(gfk_system* sys) { delete sys; }

gfk_status gfk_system_render(const gfk_system* sys, char** out) {
  if (gfk_status s = check_args({sys, out}); s != GFK_OK) return s;
  return guarded([&] { return emit(render_system(sys->doc), out); });
}

gfk_status gfk_form_parse(const char* text, gfk_form** out) {
  if (gfk_status s = check_args({text, out}); s != GFK_OK) return s;
  return guarded([&] {
    *out = new gfk_form{parse_form(text)};
    return GFK_OK;
  });
}

void gfk_form_free(gfk_form* form) { delete form; }

gfk_status gfk_form_render(const gfk_form* form, char** out) {
  if (gfk_status s = check_args({form, out}); s != GFK_OK) return s;
  return guarded([&] { return emit(render_form(form->form), out); });
}

gfk_status gfk_system_form(const gfk_system* sys, unsigned flags, gfk_form** out) {
  if (gfk_status s = check_args({sys, out}); s != GFK_OK) return s;
  return guarded([&] {
    ProductForm f = (flags & GFK_F_TWO_VAR) ? bivariate_form(sys->doc)
                                            : univariate_form(sys->doc, !(flags & GFK_F_NO_GUARD));
    *out = new gfk_form{std::move(f)};
    return GFK_OK;
  });
}

gfk_status gfk_system_gf(const gfk_system* sys, unsigned flags, long trunc, char** out) {
  if (gfk_status s = check_args({sys, out}); s != GFK_OK) return s;
  return guarded([&] {
    RunResult r = run_gf(sys->doc, options_from(flags, trunc), (flags & GFK_F_TWO_VAR) != 0);
    return emit(r.out, out);
  });
}

gfk_status gfk_system_verify(const gfk_system* sys, const gfk_form* form, unsigned flags,
                             long trunc, char** report, int* pass) {
  if (gfk_status s = check_args({sys, report, pass}); s != GFK_OK) return s;
  return guarded([&] {
    std::optional<ProductForm> override_form;
    if (form) override_form = form->form;
    RunResult r = run_verify(sys->doc, options_from(flags, trunc), override_form);
    if (gfk_status s = emit(r.out, report); s != GFK_OK) return s;
    *pass = r.exit_code == 0 ? 1 : 0;
    return r.exit_code == 0 ? GFK_OK : GFK_MISMATCH;
  });
}

gfk_status gfk_system_expand(const gfk_system* sys, unsigned flags, long trunc, char** out) {
  if (gfk_status s = check_args({sys, out}); s != GFK_OK) return s;
  return guarded([&] {
    RunResult r = run_expand(sys->doc, options_from(flags, trunc));
    return emit(r.out, out);
  });
}

gfk_status gfk_system_infer(const gfk_system* sys, unsigned flags, long trunc, char** out) {
  if (gfk_status s = check_args({sys, out}); s != GFK_OK) return s;
  return guarded([&] {
    RunResult r = run_infer(sys->doc, options_from(flags, trunc));
    return emit(r.out, out);
  });
}

gfk_status gfk_system_theta(const gfk_system* sys, const char* csv, int inverse_dir,
                            unsigned flags, char** out) {
  if (gfk_status s = check_args({sys, csv, out}); s != GFK_OK) return s;
  return guarded([&] {
    RunResult r = run_theta(sys->doc, parse_csv(csv), inverse_dir != 0, options_from(flags, 0));
    return emit(r.out, out);
  });
}

gfk_status gfk_sequence_inverse(const char* seq_csv, unsigned flags, long trunc, char** out) {
  if (gfk_status s = check_args({seq_csv, out}); s != GFK_OK) return s;
  return guarded([&] {
    RunResult r = run_inverse(parse_csv(seq_csv), options_from(flags, trunc));
    if (gfk_status s = emit(r.out, out); s != GFK_OK) return s;
    return r.exit_code == 0 ? GFK_OK : GFK_MISMATCH;
  });
}

const char* gfk_error_message(void) { return g_error.c_str(); }

const char* gfk_status_name(gfk_status s) {
  switch (s) {
    case GFK_OK: return "ok";
    case GFK_MISMATCH: return "mismatch";
    case GFK_INTERNAL: return "internal";
    default: break;
  }
  // the remaining values mirror the library's error codes 1:1
  switch (s) {
    case GFK_USAGE: return errc_name(errc::usage);
    case GFK_SYNTAX_ERROR: return errc_name(errc::syntax_error);
    case GFK_SEMANTIC_ERROR: return errc_name(errc::semantic_error);
    case GFK_COMPOSITION_CONDITION: return errc_name(errc::composition_condition);
    case GFK_DEGENERATE_FACTOR: return errc_name(errc::degenerate_factor);
    case GFK_NOT_IN_FAMILY: return errc_name(errc::not_in_family);
    case GFK_NOT_MULTIPLE: return errc_name(errc::not_multiple);
    case GFK_PARAMETER_VIOLATION: return errc_name(errc::parameter_violation);
    case GFK_NONPOSITIVE_RATIO: return errc_name(errc::nonpositive_ratio);
    case GFK_PRECONDITION: return errc_name(errc::precondition);
    case GFK_INFEASIBLE_SEQUENCE: return errc_name(errc::infeasible_sequence);
    case GFK_TOO_MANY: return errc_name(errc::too_many);
    case GFK_LENGTH_MISMATCH: return errc_name(errc::length_mismatch);
    case GFK_UNSUPPORTED: return errc_name(errc::unsupported);
    default: return "unknown";
  }
}

void gfk_string_free(char* s) { std::free(s); }

}  // extern "C"
