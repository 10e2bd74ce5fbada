#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spechtvar/partitions.hpp"

namespace spechtvar {

/// One node move: eta is mu with a node removed from row b, result is eta with
/// a node added to row a. Rows are one-based.
struct PhiStepData {
  int a = 0;
  int b = 0;
  Partition eta;
  Partition result;
};

/// The unique (a, b) for mu with at most p parts and empty p-core; nullopt when
/// every part is divisible by p. Throws Error(PreconditionViolated) outside the
/// domain and Error(NonUniqueA) if a is missing or ambiguous.
std::optional<PhiStepData> find_ab(const Partition& mu, unsigned p);

/// phi(mu): mu(a) when find_ab succeeds, mu otherwise. The image is checked to
/// have empty p-core.
Partition phi_step(const Partition& mu, unsigned p);

/// mu, phi(mu), phi^2(mu), ... up to and including the fixed point.
std::vector<Partition> phi_chain(const Partition& mu, unsigned p);

/// Phi(mu), the fixed point of phi. Throws Error(NonTermination) after |mu|*p
/// steps.
Partition phi_limit(const Partition& mu, unsigned p);

enum class Hypothesis { H1, H2, H3, H4, None };

std::string_view to_string(Hypothesis h);

/// Checks run in the order H3, H2, H1, H4 and the first match is returned.
/// Requires |mu| = n p, at most p parts and empty p-core.
Hypothesis classify_hypothesis(const Partition& mu, unsigned p, unsigned n);

enum class VarietyPrediction { FullRankN, DefectDim, Unknown };

std::string_view to_string(VarietyPrediction v);

struct Prediction {
  Partition mu;
  CoreData core;
  Hypothesis hypothesis = Hypothesis::None;
  /// Partition the hypothesis was checked on (mu or its conjugate).
  std::optional<Partition> classified_on;
  VarietyPrediction variety = VarietyPrediction::Unknown;
  std::optional<int> complexity;
  /// Whether the defect-group dimension condition gcd(|D| dim / p^a, p) = 1 holds;
  /// only evaluated for weight < p.
  std::optional<bool> defect_condition;
};

/// Variety and complexity of S^mu restricted to E_n, from the abelian-defect
/// theorem (weight < p) or from the H1-H4 hypotheses; everything else is
/// reported as unknown.
Prediction predict(const Partition& mu, unsigned p);

}  // namespace spechtvar
