#ifndef FADA_SUITES_HPP
#define FADA_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fada/report.hpp"

namespace fada {

struct SuiteConfig {
  std::string type = "A1";
  // "beta" or "table:<file>"
  std::string fgl = "beta";
  std::optional<mpq_class> beta;
  int trunc = 8;
  // Suite default when unset.
  std::optional<int> ball;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
// Number of checks a suite reports, independent of the configuration.
int suite_size(const std::string& name);
// Checks sorted by id. Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace fada

#endif  // FADA_SUITES_HPP
