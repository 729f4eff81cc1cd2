#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace basilica {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance suite; one result per criterion. `log` may be
// null. Exact arithmetic throughout; every check is an equality.
std::vector<CriterionResult> run_acceptance(std::ostream* log);

// Pretty one-line-per-criterion report; returns true when everything passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out,
                       bool color);

}  // namespace basilica
