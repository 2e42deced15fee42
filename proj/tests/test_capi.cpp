// Exercises the shared-library surface exactly as an embedding application
// would: only the public C header, no internal headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "gfkit/gfkit.h"

namespace {

const char* kExample =
    "k=4\n"
    "L1 >= 2 L2 - L3\n"
    "L2 >= 2 L3 - L4\n"
    "L3 >= 2 L4\n";

struct SystemHandle {
  gfk_system* sys = nullptr;
  explicit SystemHandle(const char* text) { REQUIRE(gfk_system_parse(text, &sys) == GFK_OK); }
  ~SystemHandle() { gfk_system_free(sys); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  gfk_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, render and closed form") {
  SystemHandle h(kExample);

  char* text = nullptr;
  REQUIRE(gfk_system_render(h.sys, &text) == GFK_OK);
  CHECK(take(text) ==
        "k=4\n"
        "L1 >= 2 L2 - L3\n"
        "L2 >= 2 L3 - L4\n"
        "L3 >= 2 L4\n");

  char* gf = nullptr;
  REQUIRE(gfk_system_gf(h.sys, 0, 0, &gf) == GFK_OK);
  CHECK(take(gf) == "1 / [(1-q^1)(1-q^3)(1-q^6)(1-q^10)]");

  char* json = nullptr;
  REQUIRE(gfk_system_gf(h.sys, GFK_F_JSON, 12, &json) == GFK_OK);
  CHECK(take(json) ==
        R"({"b":["1","3","6","10"],"denominator":[["1","0","1"],["3","0","1"],["6","0","1"],["10","0","1"]],"numerator":[["0","0","1"]],"verified":true})");
}

TEST_CASE("form objects round trip") {
  gfk_form* form = nullptr;
  REQUIRE(gfk_form_parse("(1 + q^2) / [(1-q^1)(1-q^3)]", &form) == GFK_OK);
  char* text = nullptr;
  REQUIRE(gfk_form_render(form, &text) == GFK_OK);
  CHECK(take(text) == "(1 + q^2) / [(1-q^1)(1-q^3)]");
  gfk_form_free(form);

  CHECK(gfk_form_parse("(1 + q", &form) == GFK_SYNTAX_ERROR);
  CHECK(std::string(gfk_error_message()).find("product form") == 0);
}

TEST_CASE("verification statuses") {
  SystemHandle h(kExample);

  char* report = nullptr;
  int pass = -1;
  REQUIRE(gfk_system_verify(h.sys, nullptr, 0, 20, &report, &pass) == GFK_OK);
  CHECK(pass == 1);
  CHECK(take(report) == "pass");

  gfk_form* wrong = nullptr;
  REQUIRE(gfk_form_parse("1 / [(1-q^2)]", &wrong) == GFK_OK);
  REQUIRE(gfk_system_verify(h.sys, wrong, 0, 20, &report, &pass) == GFK_MISMATCH);
  CHECK(pass == 0);
  CHECK(take(report) == "mismatch at x^1: enumeration 1, closed form 0");
  gfk_form_free(wrong);
}

TEST_CASE("expansion, inference, theta") {
  SystemHandle h(kExample);

  char* out = nullptr;
  REQUIRE(gfk_system_expand(h.sys, 0, 6, &out) == GFK_OK);
  CHECK(take(out) == "1 1 1 2 2 2 4");

  SystemHandle ratios("ratios: 4/3 3/2 2/1\n");
  REQUIRE(gfk_system_infer(ratios.sys, 0, 30, &out) == GFK_OK);
  CHECK(take(out) == "1:1 3:1 5:1 7:1");

  REQUIRE(gfk_system_theta(h.sys, "4,3,2,1", 0, 0, &out) == GFK_OK);
  CHECK(take(out) == "0,0,0,10");
  REQUIRE(gfk_system_theta(h.sys, "0,0,0,10", 1, 0, &out) == GFK_OK);
  CHECK(take(out) == "4,3,2,1");

  CHECK(gfk_system_theta(h.sys, "1,2,3,4", 0, 0, &out) == GFK_NOT_IN_FAMILY);
  CHECK(gfk_system_theta(h.sys, "1,2", 0, 0, &out) == GFK_LENGTH_MISMATCH);
  CHECK(gfk_system_theta(h.sys, "1,,2", 0, 0, &out) == GFK_USAGE);
  CHECK(gfk_system_theta(ratios.sys, "1,0,0,0", 0, 0, &out) == GFK_UNSUPPORTED);
}

TEST_CASE("two-variable flag and guard flag") {
  SystemHandle ab("alphabeta: 1 -1 4\n");
  char* out = nullptr;
  REQUIRE(gfk_system_gf(ab.sys, GFK_F_TWO_VAR, 0, &out) == GFK_OK);
  CHECK(take(out) == "1 / [(1-x^1)(1-x^1 y^1)(1-x^3 y^1)(1-x^5 y^3)]");

  gfk_form* form = nullptr;
  REQUIRE(gfk_system_form(ab.sys, 0, &form) == GFK_OK);
  char* text = nullptr;
  REQUIRE(gfk_form_render(form, &text) == GFK_OK);
  CHECK(take(text) == "1 / [(1-q^1)(1-q^2)(1-q^4)(1-q^8)]");
  gfk_form_free(form);
}

TEST_CASE("sequence inversion") {
  char* out = nullptr;
  REQUIRE(gfk_sequence_inverse("1,3,5,7", 0, 0, &out) == GFK_OK);
  std::string text = take(out);
  CHECK(text.find("formula: 60") != std::string::npos);
  CHECK(text.find("verified to N=25: pass") != std::string::npos);

  CHECK(gfk_sequence_inverse("1,2,1", 0, 0, &out) == GFK_INFEASIBLE_SEQUENCE);
}

TEST_CASE("error reporting and argument checks") {
  gfk_system* sys = nullptr;
  CHECK(gfk_system_parse("k=2\nL1 >= L1\n", &sys) == GFK_SEMANTIC_ERROR);
  CHECK(std::string(gfk_error_message()) == "line 2, col 7: L1 must have index greater than 1");

  CHECK(gfk_system_parse("k=two\n", &sys) == GFK_SYNTAX_ERROR);
  CHECK(gfk_system_parse(nullptr, &sys) == GFK_USAGE);
  CHECK(gfk_system_parse("k=1\n", nullptr) == GFK_USAGE);

  CHECK(std::string(gfk_status_name(GFK_OK)) == "ok");
  CHECK(std::string(gfk_status_name(GFK_SEMANTIC_ERROR)) == "semantic_error");
  CHECK(std::string(gfk_status_name(GFK_MISMATCH)) == "mismatch");

  // a successful call clears the sticky message
  SystemHandle h("k=1\n");
  char* out = nullptr;
  REQUIRE(gfk_system_expand(h.sys, 0, 4, &out) == GFK_OK);
  CHECK(take(out) == "1 1 1 1 1");
  CHECK(std::string(gfk_error_message()).empty());
}
