#include "invk/report.hpp"

namespace invk {

std::string Report::summary() const {
  std::string s = suite.empty() ? "report" : suite;
  s += ": ";
  s += violations.empty() ? "ok" : std::to_string(violations.size()) + " violation(s)";
  s += ", checked " + std::to_string(checked) + "/" + std::to_string(total);
  if (!violations.empty()) {
    std::size_t shown = violations.size() < 5 ? violations.size() : 5;
    for (std::size_t i = 0; i < shown; ++i)
      s += "\n  [" + violations[i].law + "] " + violations[i].witness;
    if (violations.size() > shown)
      s += "\n  ... " + std::to_string(violations.size() - shown) + " more";
  }
  return s;
}

}  // namespace invk
