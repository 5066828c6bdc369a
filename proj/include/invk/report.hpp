#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invk {

struct Violation {
  std::string law;
  std::string witness;
};

// Outcome of a law-checking suite.  `checked` counts the instances actually
// evaluated; `total` additionally counts instances skipped because a bound
// or truncation excluded them, so coverage = checked / total.
struct Report {
  std::string suite;
  std::vector<Violation> violations;
  std::uint64_t checked = 0;
  std::uint64_t total = 0;

  bool ok() const { return violations.empty(); }

  void count(std::uint64_t n = 1) {
    checked += n;
    total += n;
  }
  void skip(std::uint64_t n = 1) { total += n; }

  void add(std::string law, std::string witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }

  void require(bool cond, const char* law, const std::string& witness) {
    count();
    if (!cond) add(law, witness);
  }

  // Hot-loop variant: the witness is built only on failure.
  template <class W>
  void require_lazy(bool cond, const char* law, W&& witness) {
    count();
    if (!cond) add(law, witness());
  }

  void merge(const Report& other) {
    checked += other.checked;
    total += other.total;
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  double coverage() const {
    return total == 0 ? 1.0
                      : static_cast<double>(checked) / static_cast<double>(total);
  }

  std::string summary() const;
};

}  // namespace invk
