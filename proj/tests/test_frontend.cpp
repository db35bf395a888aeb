#include <doctest.h>

#include <set>

#include "fada/expr.hpp"
#include "fada/json_io.hpp"
#include "fada/random.hpp"
#include "fada/suites.hpp"

using namespace fada;

namespace {

std::shared_ptr<const RootDatum> type_a(int n) { return std::make_shared<const RootDatum>(RootDatum::type_A(n)); }

std::set<std::string> failing(const std::vector<CheckResult>& results) {
  std::set<std::string> out;
  for (const auto& r : results)
    if (!r.pass) out.insert(r.id);
  return out;
}

}  // namespace

TEST_CASE("expressions evaluate to the algebra elements they name") {
  Algebra alg(ScalarContext::hyperbolic(type_a(1)));
  ExprEvaluator ev(alg);
  const auto& d = alg.datum();
  CHECK(ev.eval("psi(X0)").element() == alg.z_elt(d.theta()));
  CHECK(ev.eval("eta()").element() == alg.one());
  CHECK(ev.eval("eta(e)").element() == alg.one());
  CHECK(ev.eval("X0*X1").element() == alg.x_word({0, 1}));
  CHECK(ev.eval("Y1^2 - kappa(1)*Y1").element().is_zero());
  CHECK(ev.eval("frakY([0])^2 - x(-1)*frakY([0,1,0]) - mu*frakY([1,0])").element().is_zero());
  CHECK(ev.eval("x1 + x(-1) - b*x1*x(-1)").scalar().is_zero());
  CHECK(ev.eval("2/4").scalar() == Scalar(mpq_class(1, 2)));
  // Right multiplication by a scalar.
  CHECK(ev.eval("X1*x1").element() == alg.mul(alg.demazure(1), TwistedElement::scalar(alg.ctx().x_simple(1))));
  CHECK(ev.eval("eta(s1)/x1").element() == alg.mul_right(alg.eta(d.simple(1)), Scalar(1) / alg.ctx().x_simple(1)));
}

TEST_CASE("expression errors") {
  Algebra alg(ScalarContext::hyperbolic(type_a(1)));
  ExprEvaluator ev(alg);
  CHECK_THROWS_AS(ev.eval("X0 +"), ParseError);
  CHECK_THROWS_AS(ev.eval("X2"), ParseError);
  CHECK_THROWS_AS(ev.eval("foo"), ParseError);
  CHECK_THROWS_AS(ev.eval("x(1,2)"), ParseError);
  CHECK_THROWS_AS(ev.eval("X0/X1"), ParseError);
  CHECK_THROWS_AS(ev.eval("1/0"), ParseError);
  CHECK_THROWS_AS(ev.eval("(X0"), ParseError);
  CHECK_THROWS_AS(ev.eval("eta(t[1"), ParseError);
}

TEST_CASE("printed elements parse back to equal elements") {
  for (int n : {1, 2}) {
    for (bool specialized : {false, true}) {
      Algebra alg(ScalarContext::hyperbolic(type_a(n), specialized ? std::optional(mpq_class(2, 3)) : std::nullopt));
      ExprEvaluator ev(alg);
      Rng rng(17 + n);
      for (int k = 0; k < 25; ++k) {
        const TwistedElement z = random_twisted(alg, rng, 3, 3);
        const std::string text = ev.render(Value{z});
        CAPTURE(text);
        CHECK(ev.eval(text).element() == z);
        const Scalar s = random_scalar(alg.ctx(), rng);
        CHECK(ev.eval(ev.render(Value{s})).scalar() == s);
      }
      const TwistedElement x = alg.x_word({1, 0});
      CHECK(ev.eval(ev.render_x_basis(x, 2)).element() == x);
    }
  }
}

TEST_CASE("printed table scalars parse back") {
  auto ctx = ScalarContext::table(type_a(1), FormalGroupLaw::load(std::string(FADA_DATA_DIR) + "/two_parameter.fgl", 6));
  Algebra alg(ctx);
  ExprEvaluator ev(alg);
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const TwistedElement z = random_twisted(alg, rng, 2, 2, true);
    const std::string text = ev.render(Value{z});
    CAPTURE(text);
    CHECK(ev.eval(text).element() == z);
  }
}

TEST_CASE("presentation rendering parses back") {
  Algebra alg(ScalarContext::hyperbolic(type_a(1)));
  ExprEvaluator ev(alg);
  Peterson pet(alg);
  const auto xi = pet.frak_y_sigma(3) + alg.ctx().mu() * pet.frak_y_sigma(4);
  const auto p = pet.to_presentation(xi, 4);
  CHECK(p == PresentationElement::monomial(1, 1) + PresentationElement::monomial(0, 2, alg.ctx().mu()));
  const std::string text = ev.render_presentation(p);
  CHECK(ev.eval(text).element() == xi);
}

TEST_CASE("JSON shapes") {
  Algebra alg(ScalarContext::hyperbolic(type_a(1)));
  const auto& d = alg.datum();
  const Json e = element_json(d, d.parse_element("t[2]*s1"));
  CHECK(e.dump() == R"({"lambda":[2],"word":[1]})");
  const Json s = scalar_json(alg.ctx(), alg.ctx().kappa(d.simple_root(1)));
  CHECK(s["backend"] == "hyperbolic");
  CHECK(s["num"].is_array());
  CHECK(s["text"] == alg.ctx().to_string(alg.ctx().kappa(d.simple_root(1))));
  const Json z = twisted_json(alg, alg.demazure(1));
  REQUIRE(z["terms"].size() == 2);
  CHECK(z["terms"][0].contains("elem"));
  CHECK(z["terms"][0].contains("coeff"));

  auto table = ScalarContext::table(alg.ctx().datum_ptr(), FormalGroupLaw::hyperbolic_table(mpq_class(1), 5));
  const Json t = scalar_json(*table, Scalar(1) / table->x_simple(1));
  CHECK(t["backend"] == "table");
  CHECK(t["den"].dump() == "[[0,1]]");
  CHECK(t["precision"].is_number());
}

TEST_CASE("suite sizes") {
  CHECK(suite_size("scalars") == 6);
  CHECK(suite_size("weyl") == 6);
  CHECK(suite_size("twisted") == 19);
  CHECK(suite_size("peterson") == 21);
  CHECK(suite_size("dual") == 17);
  CHECK(suite_size("all") == 69);
  CHECK_THROWS_AS(suite_size("nope"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), std::invalid_argument);
}

TEST_CASE("suite results in affine A1") {
  SuiteConfig cfg;
  const auto results = run_suite("all", cfg);
  REQUIRE(results.size() == 69u);
  CHECK(std::is_sorted(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  // Only the displayed forms known to be misprinted fail.
  CHECK(failing(results) == std::set<std::string>{"dual-iota-rank", "dual-leading-value", "dual-pairing",
                                                  "ex-comp-X010", "peterson-coproduct-ktheory", "twisted-x0-literal"});
  const auto y0 = std::find_if(results.begin(), results.end(), [](const auto& r) { return r.id == "ex-comp-Y0"; });
  REQUIRE(y0 != results.end());
  CHECK(y0->pass);
  CHECK_FALSE(y0->skipped);

  const auto again = run_suite("all", cfg);
  for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].detail == again[i].detail);
}

TEST_CASE("suite results in affine A2") {
  SuiteConfig cfg;
  cfg.type = "A2";
  for (const auto& name : {"scalars", "weyl", "twisted"}) {
    const auto results = run_suite(name, cfg);
    CHECK(results.size() == static_cast<std::size_t>(suite_size(name)));
    const auto f = failing(results);
    CHECK((f.empty() || f == std::set<std::string>{"twisted-x0-literal"}));
  }
  for (const auto& r : run_suite("peterson", cfg)) CHECK(r.skipped);
}

TEST_CASE("suites honour the ball and the seed") {
  SuiteConfig cfg;
  cfg.ball = 0;
  for (const auto& r : run_suite("weyl", cfg)) CHECK(r.pass);
  cfg.ball = std::nullopt;
  cfg.seed = 99;
  const auto a = run_suite("scalars", cfg);
  const auto b = run_suite("scalars", cfg);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].detail == b[i].detail);
  cfg.ball = -1;
  CHECK_THROWS_AS(run_suite("weyl", cfg), std::invalid_argument);
}
