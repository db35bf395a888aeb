#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "fada/dual.hpp"
#include "fada/expr.hpp"
#include "fada/json_io.hpp"
#include "fada/peterson.hpp"
#include "fada/suites.hpp"

namespace {

using namespace fada;

constexpr const char* kVersion = "1.0";

// Errors that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "A1";
  std::string fgl = "beta";
  std::string beta;
  int trunc = 8;
  std::optional<int> ball;
  std::uint64_t seed = 1;
  bool json = false;
};

SuiteConfig suite_config(const Options& o) {
  SuiteConfig c;
  c.type = o.type;
  c.fgl = o.fgl;
  if (!o.beta.empty()) {
    try {
      mpq_class b(o.beta);
      b.canonicalize();
      c.beta = b;
    } catch (const std::invalid_argument&) {
      throw UsageError("invalid --beta value: " + o.beta);
    }
  }
  if (o.fgl != "beta" && o.fgl.rfind("table:", 0) != 0) throw UsageError("--fgl must be beta or table:<file>");
  if (o.fgl != "beta" && o.trunc < 2) throw UsageError("--trunc must be at least 2 in table mode");
  if (o.ball && *o.ball < 0) throw UsageError("--ball must be nonnegative");
  c.trunc = o.trunc;
  c.ball = o.ball;
  c.seed = o.seed;
  return c;
}

Json config_json(const SuiteConfig& c) {
  Json j;
  j["type"] = c.type;
  j["fgl"] = c.fgl;
  j["beta"] = c.beta ? Json(c.beta->get_str()) : Json(nullptr);
  j["trunc"] = c.trunc;
  j["ball"] = c.ball ? Json(*c.ball) : Json(nullptr);
  j["seed"] = c.seed;
  return j;
}

Json envelope(const SuiteConfig& c) {
  Json j;
  j["version"] = kVersion;
  j["config"] = config_json(c);
  return j;
}

std::shared_ptr<const RootDatum> make_datum(const SuiteConfig& c) {
  try {
    return std::make_shared<const RootDatum>(RootDatum::parse(c.type));
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --type: ") + e.what());
  }
}

std::shared_ptr<const ScalarContext> make_context(const SuiteConfig& c) {
  auto datum = make_datum(c);
  if (c.fgl == "beta") return ScalarContext::hyperbolic(datum, c.beta);
  return ScalarContext::table(datum, FormalGroupLaw::load(c.fgl.substr(6), c.trunc));
}

int max_length(const RootDatum& d, const TwistedElement& z) {
  int L = 0;
  for (const auto& [u, c] : z.terms()) L = std::max(L, d.length(u));
  return L;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_expand(const Options& o, const std::string& text, const std::string& basis) {
  const SuiteConfig cfg = suite_config(o);
  Algebra alg(make_context(cfg));
  ExprEvaluator ev(alg);
  Value v;
  try {
    v = ev.eval(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
  Json j = envelope(cfg);
  j["input"] = text;
  j["basis"] = basis;
  std::string rendered;
  if (v.is_scalar()) {
    rendered = ev.render(v);
    j["scalar"] = scalar_json(alg.ctx(), v.scalar());
  } else {
    const TwistedElement z = v.element();
    const int L = cfg.ball.value_or(max_length(alg.datum(), z));
    if (basis == "eta") {
      rendered = ev.render(v);
      j["element"] = twisted_json(alg, z);
    } else if (basis == "X") {
      rendered = ev.render_x_basis(z, L);
      Json terms = Json::array();
      for (const auto& [u, c] : alg.expand_in_x_basis(z, L).coeffs)
        terms.push_back({{"word", alg.datum().reduced_word(u)}, {"coeff", scalar_json(alg.ctx(), c)}});
      j["x_basis"] = {{"terms", terms}};
    } else {
      if (!z.supported_on_translations()) throw UsageError("presentation basis needs an element supported on translations");
      Peterson pet(alg);
      const auto p = pet.to_presentation(z, L);
      rendered = ev.render_presentation(p);
      j["presentation"] = presentation_json(alg.ctx(), p);
    }
  }
  j["text"] = rendered;
  if (o.json) print_json(j);
  else std::cout << rendered << "\n";
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite) {
  const SuiteConfig cfg = suite_config(o);
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite: " + suite);
  make_datum(cfg);
  const auto results = run_suite(suite, cfg);
  int failed = 0, skipped = 0;
  Json checks = Json::array();
  for (const auto& r : results) {
    failed += !r.pass;
    skipped += r.skipped;
    const char* status = r.skipped ? "skip" : r.pass ? "pass" : "fail";
    checks.push_back({{"id", r.id}, {"paper_anchor", r.anchor}, {"status", status}, {"detail", r.detail}});
  }
  if (o.json) {
    Json j = envelope(cfg);
    j["suite"] = suite;
    j["checks"] = checks;
    print_json(j);
  } else {
    for (const auto& r : results)
      std::cout << (r.skipped ? "SKIP " : r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
    std::cout << results.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed ? 1 : 0;
}

int cmd_coproduct(const Options& o, int k) {
  const SuiteConfig cfg = suite_config(o);
  if (k < 0) throw UsageError("coproduct index must be nonnegative");
  auto datum = make_datum(cfg);
  if (!datum->is_affine_A1()) throw UsageError("coproduct tables need affine A1");
  // Symbolic beta first; the specialized table follows when --beta is set.
  SuiteConfig symbolic = cfg;
  symbolic.beta.reset();
  Algebra alg(make_context(symbolic));
  Peterson pet(alg);
  const auto table = pet.coproduct_in_frak_y(pet.frak_y_sigma(k), 2 * k);

  Json j = envelope(cfg);
  j["k"] = k;
  auto emit = [&](const std::string& key, bool special) {
    Json rows = Json::array();
    for (const auto& [ij, c] : table) {
      const Scalar v = special ? specialize_beta(c, *cfg.beta) : c;
      if (v.is_zero()) continue;
      if (o.json) rows.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", scalar_json(alg.ctx(), v)}});
      else std::cout << "(" << ij.first << "," << ij.second << "): " << alg.ctx().to_string(v) << "\n";
    }
    j[key] = rows;
  };
  if (!o.json) std::cout << "coproduct of frakY_sigma" << k << " in the frakY basis\n";
  emit("table", false);
  if (cfg.beta && cfg.fgl == "beta") {
    if (!o.json) std::cout << "at b = " << cfg.beta->get_str() << "\n";
    emit("specialized", true);
  }
  if (o.json) print_json(j);
  return 0;
}

int cmd_dual_gkm(const Options& o) {
  const SuiteConfig cfg = suite_config(o);
  Algebra alg(make_context(cfg));
  const RootDatum& d = alg.datum();
  Dual dual(alg);
  const int L = cfg.ball.value_or(3);
  const int w0 = d.w_length(d.w_longest());
  const auto basis = dual.dual_basis_y(L + w0);
  int failed = 0;
  Json reports = Json::array();
  for (const auto& w : d.enumerate_ball(L)) {
    Report r = dual.gkm_check(basis.at(w));
    r.subject = "Y*(" + d.to_string(w) + ")";
    failed += !r.pass();
    if (o.json) reports.push_back(report_json(r));
    else std::cout << (r.pass() ? "PASS " : "FAIL ") << r.subject << (r.pass() ? "" : ": " + r.failures.front()) << "\n";
  }
  Json ranks = Json::array();
  for (int i = 0; i + w0 <= L; ++i) {
    const GradedRank g = dual.graded_rank_check(i, L);
    failed += !g.report.pass();
    if (o.json) {
      Json r = report_json(g.report);
      r["stratum"] = i;
      r["stratum_size"] = g.stratum_size;
      r["cosets"] = g.cosets;
      r["restricted_rank"] = g.z_rank;
      r["iota_star_rank"] = g.iota_rank;
      r["relation_rank"] = g.relation_rank;
      ranks.push_back(r);
    } else {
      std::cout << (g.report.pass() ? "PASS " : "FAIL ") << "graded rank " << i << ": stratum " << g.stratum_size
                << ", cosets " << g.cosets << ", restricted rank " << g.z_rank << ", iota_star rank " << g.iota_rank
                << ", relation rank " << g.relation_rank << "\n";
    }
  }
  if (o.json) {
    Json j = envelope(cfg);
    j["gkm"] = reports;
    j["graded_ranks"] = ranks;
    print_json(j);
  }
  return failed ? 1 : 0;
}

int cmd_length(const Options& o, const std::string& text) {
  const SuiteConfig cfg = suite_config(o);
  auto datum = make_datum(cfg);
  const RootDatum& d = *datum;
  AffineWeylElement u;
  try {
    u = d.parse_element(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
  const auto word = d.reduced_word(u);
  const auto wl = d.w_min_coset(u.lambda);
  Json ell = Json::array();
  std::ostringstream text_out;
  text_out << "element: " << d.to_string(u) << "\nlength: " << d.length(u) << "\nreduced word:";
  for (int i : word) text_out << " s" << i;
  text_out << "\nminimal coset representative of t_lambda W: " << d.to_string(wl) << " (length " << d.length(wl) << ")\n";
  for (int a = 0; a < d.num_positive(); ++a) {
    std::vector<int> root(d.root(a).begin(), d.root(a).begin() + d.rank());
    ell.push_back({{"root", root}, {"ell_alpha", d.ell_alpha(u, a)}});
    text_out << "ell_alpha for root (";
    for (int i = 0; i < d.rank(); ++i) text_out << (i ? "," : "") << root[i];
    text_out << "): " << d.ell_alpha(u, a) << "\n";
  }
  if (o.json) {
    Json j = envelope(cfg);
    j["element"] = element_json(d, u);
    j["text"] = d.to_string(u);
    j["length"] = d.length(u);
    j["reduced_word"] = word;
    j["min_coset"] = element_json(d, wl);
    j["ell_alpha"] = ell;
    print_json(j);
  } else {
    std::cout << text_out.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal affine Demazure algebras: expansions, identity checks and coproduct tables"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--type", o.type, "Root system: A1, A2, ..., or cartan:<file>");
  app.add_option("--fgl", o.fgl, "Formal group law: beta (hyperbolic) or table:<file>");
  app.add_option("--beta", o.beta, "Specialize beta to a rational p/q");
  app.add_option("--trunc", o.trunc, "Truncation degree of the table backend");
  app.add_option("--ball", o.ball, "Ball radius in the affine Weyl group");
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_flag("--json", o.json, "Machine-readable output");

  std::string expr, basis = "eta", suite, element;
  int k = 0;
  auto* expand = app.add_subcommand("expand", "Evaluate an expression and print its expansion");
  expand->add_option("expr", expr, "Expression")->required();
  expand->add_option("--basis", basis, "eta, X or pres")->check(CLI::IsMember({"eta", "X", "pres"}));
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("suite", suite, "scalars, weyl, twisted, peterson, dual or all")->required();
  auto* coproduct = app.add_subcommand("coproduct", "Coproduct table of frakY_sigma_k (affine A1)");
  coproduct->add_option("k", k, "Index k")->required();
  auto* dual_gkm = app.add_subcommand("dual-gkm", "GKM conditions and graded ranks of the dual Y basis");
  auto* length = app.add_subcommand("length", "Length data of an affine Weyl group element");
  length->add_option("element", element, "Element such as t[1]*s1 or s0*s1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand) return cmd_expand(o, expr, basis);
    if (*verify) return cmd_verify(o, suite);
    if (*coproduct) return cmd_coproduct(o, k);
    if (*dual_gkm) return cmd_dual_gkm(o);
    if (*length) return cmd_length(o, element);
  } catch (const UsageError& e) {
    std::cerr << "fada: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fada: evaluation error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
