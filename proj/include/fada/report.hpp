#ifndef FADA_REPORT_HPP
#define FADA_REPORT_HPP

#include <string>
#include <vector>

namespace fada {

// Outcome of one named check.
struct CheckResult {
  std::string id;
  std::string anchor;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

// Structured report of a divisibility or rank check on one subject.
struct Report {
  std::string check;
  std::string subject;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

}  // namespace fada

#endif  // FADA_REPORT_HPP
