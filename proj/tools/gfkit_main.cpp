#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gfkit/gfkit.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Print the payload (exit 0), the mismatch report (exit 2), or the
// diagnostic (exit 1), matching the documented exit codes.
int finish(gfk_status st, char* out) {
  if (st == GFK_OK || st == GFK_MISMATCH) {
    if (out) std::cout << out << "\n";
    gfk_string_free(out);
    return st == GFK_OK ? 0 : 2;
  }
  std::cerr << "error (" << gfk_status_name(st) << "): " << gfk_error_message() << std::endl;
  gfk_string_free(out);
  return 1;
}

int with_system(const std::string& path,
                const std::function<int(gfk_system*)>& body) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error (usage): cannot read '" << path << "'" << std::endl;
    return 1;
  }
  gfk_system* sys = nullptr;
  if (gfk_status st = gfk_system_parse(text.c_str(), &sys); st != GFK_OK)
    return finish(st, nullptr);
  int rc = body(sys);
  gfk_system_free(sys);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form product generating functions for linear constraint systems"};
  app.require_subcommand(1);

  std::string format = "text";
  long trunc = 25;
  bool no_guard = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--trunc", trunc, "series/oracle truncation bound")->capture_default_str();
  app.add_flag("--no-guard", no_guard, "skip the ratio-chain first-constraint check");

  std::string file, form_text, lambda_csv, parts_csv, seq_csv;

  CLI::App* gf = app.add_subcommand("gf", "closed form of a system");
  gf->add_option("file", file, ".gfk system file")->required();

  CLI::App* gf2 = app.add_subcommand("gf2", "two-variable closed form");
  gf2->add_option("file", file, ".gfk system file")->required();

  CLI::App* verify = app.add_subcommand("verify", "check the closed form against enumeration");
  verify->add_option("file", file, ".gfk system file")->required();
  verify->add_option("--form", form_text, "check this form instead of the computed one");

  CLI::App* theta = app.add_subcommand("theta", "weight-preserving bijection");
  theta->add_option("file", file, ".gfk system file")->required();
  CLI::Option* olambda =
      theta->add_option("--lambda", lambda_csv, "family member to map, comma-separated");
  CLI::Option* oparts =
      theta->add_option("--parts", parts_csv, "image vector to invert, comma-separated");
  olambda->excludes(oparts);

  CLI::App* inverse = app.add_subcommand("inverse", "matrix realizing an exponent sequence");
  inverse->add_option("--seq", seq_csv, "target exponents, comma-separated")->required();

  CLI::App* infer = app.add_subcommand("infer", "recover factors from the enumeration series");
  infer->add_option("file", file, ".gfk system file")->required();

  CLI::App* expand = app.add_subcommand("expand", "series coefficients of the closed form");
  expand->add_option("file", file, ".gfk system file")->required();

  for (CLI::App* sub : {gf, gf2, verify, theta, inverse, infer, expand}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  unsigned flags = 0;
  if (format == "json") flags |= GFK_F_JSON;
  if (no_guard) flags |= GFK_F_NO_GUARD;

  if (app.got_subcommand(gf) || app.got_subcommand(gf2)) {
    if (app.got_subcommand(gf2)) flags |= GFK_F_TWO_VAR;
    return with_system(file, [&](gfk_system* sys) {
      char* out = nullptr;
      gfk_status st = gfk_system_gf(sys, flags, trunc, &out);
      return finish(st, out);
    });
  }
  if (app.got_subcommand(verify)) {
    return with_system(file, [&](gfk_system* sys) {
      gfk_form* form = nullptr;
      if (!form_text.empty()) {
        if (gfk_status st = gfk_form_parse(form_text.c_str(), &form); st != GFK_OK)
          return finish(st, nullptr);
      }
      char* report = nullptr;
      int pass = 0;
      gfk_status st = gfk_system_verify(sys, form, flags, trunc, &report, &pass);
      gfk_form_free(form);
      return finish(st, report);
    });
  }
  if (app.got_subcommand(theta)) {
    const bool inverse_dir = oparts->count() > 0;
    if (!inverse_dir && olambda->count() == 0) {
      std::cerr << "error (usage): theta needs --lambda or --parts" << std::endl;
      return 1;
    }
    return with_system(file, [&](gfk_system* sys) {
      const std::string& csv = inverse_dir ? parts_csv : lambda_csv;
      char* out = nullptr;
      gfk_status st = gfk_system_theta(sys, csv.c_str(), inverse_dir ? 1 : 0, flags, &out);
      return finish(st, out);
    });
  }
  if (app.got_subcommand(inverse)) {
    char* out = nullptr;
    gfk_status st = gfk_sequence_inverse(seq_csv.c_str(), flags, trunc, &out);
    return finish(st, out);
  }
  if (app.got_subcommand(infer)) {
    return with_system(file, [&](gfk_system* sys) {
      char* out = nullptr;
      gfk_status st = gfk_system_infer(sys, flags, trunc, &out);
      return finish(st, out);
    });
  }
  return with_system(file, [&](gfk_system* sys) {
    char* out = nullptr;
    gfk_status st = gfk_system_expand(sys, flags, trunc, &out);
    return finish(st, out);
  });
}
