#include "driver.hpp"

#include <sstream>

#include "construct.hpp"
#include "errors.hpp"
#include "gfengine.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "render.hpp"

namespace gfkit {

ProductForm univariate_form(const SystemDocument& doc, bool use_guard) {
  if (const auto* m = std::get_if<MatrixDoc>(&doc)) return gf_integer(m->a, m->spec);
  if (const auto* r = std::get_if<RatioDoc>(&doc)) {
    RationalGuard guard;
    guard.enabled = use_guard;
    return gf_rational(RationalSystem{r->chain(), r->coefficients()}, guard);
  }
  if (const auto* v = std::get_if<LhvDoc>(&doc)) return gf_lecture_hall_variant(v->k, v->l, v->j);
  const auto& ab = std::get<AlphaBetaDoc>(doc);
  return specialize_diagonal(gf_alpha_beta(ab.alpha, ab.beta, ab.k));
}

ProductForm bivariate_form(const SystemDocument& doc) {
  if (const auto* m = std::get_if<MatrixDoc>(&doc)) {
    bool plain = m->spec.equalities.empty();
    for (const Int& d : m->spec.offsets)
      if (d != 0) plain = false;
    if (!plain)
      fail(errc::unsupported,
           "the two-variable form is only defined for plain inequality systems "
           "(no equal:/offset: decorations)");
    return gf_two_variable(m->a);
  }
  if (const auto* r = std::get_if<RatioDoc>(&doc)) {
    std::vector<Int> c = r->coefficients();
    bool plain = c[0] == 1;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) plain = false;
    if (!plain)
      fail(errc::unsupported,
           "the two-variable form is only defined for plain chains (first: 1 0 ... 0)");
    return gf_two_variable_rational(r->chain());
  }
  if (const auto* v = std::get_if<LhvDoc>(&doc))
    return gf_lecture_hall_two_variable(v->k, v->l, v->j);
  const auto& ab = std::get<AlphaBetaDoc>(doc);
  return gf_alpha_beta(ab.alpha, ab.beta, ab.k);
}

std::vector<Int> exponent_sequence(const SystemDocument& doc, bool use_guard) {
  if (const auto* m = std::get_if<MatrixDoc>(&doc))
    return nilpotent_inverse(m->a).column_sums();
  ProductForm form = univariate_form(doc, use_guard);
  std::vector<Int> b;
  for (const Factor& f : form.factors()) b.push_back(f.o);
  return b;
}

RunResult run_gf(const SystemDocument& doc, const DriverOptions& opt, bool two_variable) {
  ProductForm form = two_variable ? bivariate_form(doc) : univariate_form(doc, opt.guard);
  if (!opt.json) return RunResult{0, render_form(form)};
  bool verified = verify(form, to_constraint_system(doc), opt.trunc).pass;
  nlohmann::json j;
  j["numerator"] = numerator_json(form.numerator());
  j["denominator"] = denominator_json(form);
  j["b"] = int_list_json(exponent_sequence(doc, opt.guard));
  j["verified"] = verified;
  return RunResult{0, j.dump()};
}

RunResult run_verify(const SystemDocument& doc, const DriverOptions& opt,
                     const std::optional<ProductForm>& form_override) {
  ProductForm form = form_override ? *form_override : univariate_form(doc, opt.guard);
  VerifyReport report = verify(form, to_constraint_system(doc), opt.trunc);
  int code = report.pass ? 0 : 2;
  if (!opt.json) return RunResult{code, report.describe()};
  nlohmann::json j;
  j["pass"] = report.pass;
  if (!report.pass) {
    j["at"] = {report.at.x.get_str(), report.at.y.get_str()};
    j["expected"] = report.expected.get_str();
    j["actual"] = report.actual.get_str();
  }
  return RunResult{code, j.dump()};
}

RunResult run_expand(const SystemDocument& doc, const DriverOptions& opt) {
  std::vector<Int> coeffs = expand_univariate(univariate_form(doc, opt.guard), opt.trunc);
  if (!opt.json) return RunResult{0, join(coeffs, " ")};
  nlohmann::json j;
  j["coefficients"] = int_list_json(coeffs);
  return RunResult{0, j.dump()};
}

RunResult run_infer(const SystemDocument& doc, const DriverOptions& opt) {
  std::vector<Int> counts = count_by_weight(to_constraint_system(doc), opt.trunc);
  TermMap terms;
  for (std::size_t n = 0; n < counts.size(); ++n)
    if (counts[n] != 0) terms[ExpPair{Int(static_cast<unsigned long>(n)), 0}] = counts[n];
  std::map<Int, Int> factors = infer_product_form(TruncatedSeries(opt.trunc, std::move(terms)), opt.trunc);
  if (!opt.json) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, mult] : factors) {
      if (!first) out << " ";
      out << m.get_str() << ":" << mult.get_str();
      first = false;
    }
    return RunResult{0, out.str()};
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, mult] : factors) arr.push_back({m.get_str(), mult.get_str()});
  nlohmann::json j;
  j["factors"] = arr;
  return RunResult{0, j.dump()};
}

RunResult run_theta(const SystemDocument& doc, const std::vector<Int>& v, bool inverse_dir,
                    const DriverOptions& opt) {
  const auto* m = std::get_if<MatrixDoc>(&doc);
  if (!m) fail(errc::unsupported, "theta is only defined for matrix systems");
  std::vector<Int> image = inverse_dir ? theta_inverse(m->a, v) : theta_map(m->a, v);
  if (!opt.json) return RunResult{0, join(image, ",")};
  nlohmann::json j;
  j["result"] = int_list_json(image);
  return RunResult{0, j.dump()};
}

RunResult run_inverse(const std::vector<Int>& seq, const DriverOptions& opt) {
  ConstructedSystem sys = matrix_from_sequence(seq);
  bool equality_first = !sys.spec.equalities.empty();
  std::optional<Int> formula;
  if (!seq.empty() && seq[0] == 1) formula = count_matrices_formula(seq);

  std::vector<Factor> target;
  for (const Int& c : seq) target.push_back(Factor{c, 0});
  ProductForm form(Polynomial::one(), std::move(target));
  VerifyReport report = verify(form, IntegerMatrixSystem{sys.a, sys.spec}, opt.trunc);
  int code = report.pass ? 0 : 2;

  if (!opt.json) {
    std::ostringstream out;
    out << render_system(MatrixDoc{sys.a, sys.spec});
    if (formula) out << "formula: " << formula->get_str() << "\n";
    out << "verified to N=" << opt.trunc << ": " << (report.pass ? "pass" : report.describe());
    return RunResult{code, out.str()};
  }
  nlohmann::json rows = nlohmann::json::array();
  const std::size_t k = sys.a.dim();
  for (std::size_t i = 1; i <= k; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 1; j <= k; ++j) row.push_back(sys.a.at(i, j).get_str());
    rows.push_back(row);
  }
  nlohmann::json j;
  j["k"] = k;
  j["matrix"] = rows;
  j["equality_first"] = equality_first;
  if (formula) j["formula"] = formula->get_str();
  else j["formula"] = nullptr;
  j["verified"] = report.pass;
  return RunResult{code, j.dump()};
}

}  // namespace gfkit
