#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spechtvar {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

/// Runs AC1..AC8 in order. A criterion that throws is reported as failed with
/// the error message.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One criterion by id ("AC1".."AC8").
CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& options);

std::vector<std::string> criterion_ids();

}  // namespace spechtvar
