#include "fada/json_io.hpp"

namespace fada {

namespace {

// Groups the terms of p by their x exponents; the remaining beta part is
// printed as a polynomial in b.
Json poly_json(const Poly& p, int rank, std::span<const std::string> names) {
  std::map<std::vector<int>, Poly> grouped;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps(rank);
    for (int i = 0; i < rank; ++i) exps[i] = m.e[i + 1];
    Monomial beta_part;
    beta_part.e[0] = m.e[0];
    grouped[exps] += Poly::monomial(beta_part, c);
  }
  Json out = Json::array();
  for (const auto& [exps, coeff] : grouped) out.push_back(Json::array({exps, coeff.to_string(names)}));
  return out;
}

}  // namespace

Json scalar_json(const ScalarContext& ctx, const Scalar& s) {
  const int n = ctx.datum().rank();
  Json out;
  if (s.is_table()) {
    const auto& t = s.table();
    out["backend"] = "table";
    out["num"] = poly_json(t.num(), n, ctx.names());
    Json den = Json::array();
    for (std::size_t r = 0; r < t.den().size(); ++r)
      if (t.den()[r]) den.push_back(Json::array({static_cast<int>(r), t.den()[r]}));
    out["den"] = den;
    out["precision"] = t.precision();
  } else {
    const auto& f = s.rational();
    out["backend"] = "hyperbolic";
    out["num"] = poly_json(f.num(), n, ctx.names());
    out["den"] = Json::array();
    out["den_poly"] = poly_json(f.den(), n, ctx.names());
  }
  out["text"] = ctx.to_string(s);
  return out;
}

Json element_json(const RootDatum& d, const AffineWeylElement& u) {
  Json out;
  out["lambda"] = std::vector<int>(u.lambda.begin(), u.lambda.begin() + d.rank());
  out["word"] = d.w_word(u.w);
  return out;
}

Json twisted_json(const Algebra& alg, const TwistedElement& z) {
  Json terms = Json::array();
  for (const auto& [u, c] : z.terms())
    terms.push_back({{"elem", element_json(alg.datum(), u)}, {"coeff", scalar_json(alg.ctx(), c)}});
  return {{"terms", terms}};
}

Json presentation_json(const ScalarContext& ctx, const PresentationElement& p) {
  Json mons = Json::array();
  for (const auto& [key, c] : p.terms())
    mons.push_back({{"s", key.first}, {"t", key.second}, {"coeff", scalar_json(ctx, c)}});
  return {{"monomials", mons}};
}

Json dual_json(const Algebra& alg, const DualFunctional& f) {
  Json values = Json::array();
  for (const auto& [u, c] : f.values())
    values.push_back({{"elem", element_json(alg.datum(), u)}, {"coeff", scalar_json(alg.ctx(), c)}});
  return {{"ball", f.ball()}, {"values", values}};
}

Json report_json(const Report& r) {
  return {{"check", r.check}, {"subject", r.subject}, {"status", r.pass() ? "pass" : "fail"}, {"failures", r.failures}};
}

}  // namespace fada
