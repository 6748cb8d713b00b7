#pragma once

#include <string>
#include <vector>

namespace rankone::acceptance {

struct CriterionResult {
  std::string id;
  std::string description;
  bool passed = false;
  /// Worst observed value of the checked quantity (normalized the same way
  /// as `threshold`).
  double measured = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
};

/// Ids A1 ... A9.
const std::vector<std::string>& criterion_ids();

/// Runs the selected criteria (all when `ids` is empty) in order. Numerical
/// exceptions inside a criterion mark it failed with the message as detail.
std::vector<CriterionResult> run(const std::vector<std::string>& ids = {});

/// One line per criterion: "A1 PASS measured=... threshold=... (12.3s) description".
std::string format_line(const CriterionResult& r);

}  // namespace rankone::acceptance
