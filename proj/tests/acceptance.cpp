// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// symbolic equalities; the only numeric tolerances are the runtime budgets.
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fada/suites.hpp"

using namespace fada;

namespace {

constexpr double kBudgetSeconds = 60.0;
constexpr double kDualBudgetSeconds = 300.0;

struct Run {
  std::string type;
  std::string suite;
  std::optional<int> ball;
  std::optional<mpq_class> beta;
  std::vector<std::string> ids;
  // Reported alongside, without affecting the verdict.
  std::vector<std::string> corrected = {};
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Run> runs;
  double budget = kBudgetSeconds;
};

bool evaluate(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  int checks = 0;
  std::vector<std::string> failures, notes;
  for (const auto& run : c.runs) {
    SuiteConfig cfg;
    cfg.type = run.type;
    cfg.ball = run.ball;
    cfg.beta = run.beta;
    std::map<std::string, CheckResult> by_id;
    for (auto& r : run_suite(run.suite, cfg)) by_id.emplace(r.id, r);
    for (const auto& id : run.ids) {
      ++checks;
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        failures.push_back(run.type + " " + id + ": missing");
      } else if (it->second.skipped) {
        failures.push_back(run.type + " " + id + ": skipped (" + it->second.detail + ")");
      } else if (!it->second.pass) {
        failures.push_back(run.type + " " + id + ": " + it->second.detail);
      }
    }
    for (const auto& id : run.corrected) {
      auto it = by_id.find(id);
      const bool ok = it != by_id.end() && it->second.pass && !it->second.skipped;
      notes.push_back(run.type + " " + id + ": " + (ok ? "pass" : "fail"));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > c.budget) failures.push_back("runtime " + std::to_string(secs) + " s over the budget");
  const bool pass = failures.empty();
  std::printf("%s criterion %d: %s (%d checks, %.2f s of %.0f s)\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
              checks, secs, c.budget);
  for (const auto& f : failures) std::printf("    %s\n", f.c_str());
  if (!pass)
    for (const auto& n : notes) std::printf("    corrected form %s\n", n.c_str());
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  const std::vector<std::string> projections{"twisted-pr-left",      "twisted-pr-sigma",       "twisted-psi-linear",
                                             "twisted-diamond-psi",  "twisted-diamond-action", "twisted-diamond-invariants"};
  const std::vector<std::string> section3{"twisted-y-annihilates", "twisted-sigma-y", "twisted-borel-unit",
                                          "twisted-psi-sigma-central", "twisted-x0-literal"};
  const std::vector<std::string> appendix{"weyl-ell-alpha-oracle", "weyl-length-alpha", "weyl-translation-drops",
                                          "weyl-chains"};
  const std::vector<Criterion> criteria{
      {1,
       "displayed identities for frak X_0, frak X_10, frak X_010, frak Y_0, frak Y_10, frak Y_010",
       {{"A1", "peterson", {}, {}, {"ex-comp-X0", "ex-comp-X10", "ex-comp-X010", "ex-comp-Y0", "ex-comp-Y10", "ex-comp-Y010"},
         {"ex-comp-X010-corrected"}}}},
      {2,
       "psi(X_0) = Z_theta, psi(z X_i) = 0 and the affine A2 psi formulas",
       {{"A1", "twisted", {}, {}, {"twisted-psi-x0", "twisted-psi-kills"}},
        {"A2", "twisted", {}, {}, {"twisted-psi-x0", "twisted-psi-kills", "twisted-psi-a2"}}}},
      {3,
       "quadratic relations and the A2 braid relation",
       {{"A1", "twisted", {}, {}, {"twisted-quadratic"}}, {"A2", "twisted", {}, {}, {"twisted-quadratic", "twisted-braid"}}}},
      {4, "projection formulas and diamond identities", {{"A1", "twisted", {}, {}, projections}, {"A2", "twisted", {}, {}, projections}}},
      {5, "Y, sigma, Borel unit, centrality and the X_0 identity", {{"A1", "twisted", {}, {}, section3, {"twisted-x0-corrected"}},
        {"A2", "twisted", {}, {}, section3, {"twisted-x0-corrected"}}}},
      {6,
       "Peterson relation, multiplicativity, cyclicity, kernel, presentation, localization",
       {{"A1",
         "peterson",
         {},
         {},
         {"peterson-relation", "peterson-mult", "peterson-diamond-y", "peterson-cyclic", "peterson-kernel",
          "peterson-presentation", "peterson-localization"}}}},
      {7,
       "coproduct formulas and their beta = 0, beta = 1 specializations",
       {{"A1",
         "peterson",
         {},
         {},
         {"peterson-coproduct-y0", "peterson-coproduct-y10", "peterson-coproduct-cohomology", "peterson-coproduct-ktheory"},
         {"peterson-coproduct-ktheory-corrected"}}}},
      {8, "ell_alpha oracle on ball 6, length formulas, Bruhat drops, six-term chains",
       {{"A1", "weyl", 6, {}, appendix}, {"A2", "weyl", 6, {}, appendix}}},
      {9,
       "dual actions, Hochschild witnesses, GKM, leading values, graded ranks on ball 5",
       {{"A1",
         "dual",
         5,
         {},
         {"dual-action-axioms", "dual-actions-commute", "dual-hh0-relations", "dual-hh0-witness", "dual-gkm-basis",
          "dual-gkm-negative", "dual-leading-value", "dual-graded-rank-0", "dual-graded-rank-1", "dual-graded-rank-2",
          "dual-iota-rank"},
         {"dual-leading-value-inversions"}}},
       kDualBudgetSeconds},
      {10,
       "table backend (F_beta, N = 8) against hyperbolic, 30 random identities",
       {{"A1", "scalars", {}, mpq_class(1), {"scalars-backend-coherence"}},
        {"A2", "scalars", {}, mpq_class(-2, 3), {"scalars-backend-coherence"}}}},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += !evaluate(c);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
