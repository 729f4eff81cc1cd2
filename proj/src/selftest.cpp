#include "basilica/selftest.hpp"

#include <ostream>

namespace basilica {

std::vector<CriterionResult> run_acceptance(std::ostream*) { return {}; }

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out,
                       bool) {
  bool ok = true;
  for (const auto& r : results) {
    out << (r.pass ? "ok" : "FAIL") << " " << r.name << "\n";
    ok = ok && r.pass;
  }
  return ok;
}

}  // namespace basilica
