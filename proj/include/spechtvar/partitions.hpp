#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spechtvar {

/// Weakly decreasing sequence of positive integers; the empty partition is a
/// valid value. Serialised as "(4,3,2)" / "()".
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else out of order throws
  /// Error(PreconditionViolated).
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Accepts "(4,3,2)", "4,3,2", "()" and surrounding whitespace; throws
  /// Error(Usage) on malformed text.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  /// Number of parts.
  std::size_t length() const { return parts_.size(); }
  /// |mu|.
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Zero-based; 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& mu);

/// (row, column) -> arm + leg + 1, one-based coordinates.
std::map<std::pair<int, int>, int> hook_lengths(const Partition& mu);

/// Hook formula |mu|! / prod h_ij. Exact for |mu| <= 30.
std::uint64_t dim_specht(const Partition& mu);

/// Standard Young tableaux by exhaustive backtracking; |mu| <= 16 or
/// Error(TooLarge).
std::uint64_t syt_count(const Partition& mu);

/// |mu|! / prod mu_i!, the number of mu-tabloids.
std::uint64_t tabloid_count(const Partition& mu);

/// First-column hook lengths mu_i + (s - i), in row order.
std::vector<int> beta_numbers(const Partition& mu);
Partition from_beta_numbers(std::vector<int> beads);

struct CoreData {
  Partition core;
  int weight = 0;
};

/// Abacus with p runners: every bead slides up its runner while the position
/// above is free and non-negative.
CoreData p_core_weight(const Partition& mu, unsigned p);

/// Base-p digitwise m <= n.
bool contained_p(std::uint64_t m, std::uint64_t n, unsigned p);

/// Omega(mu): partitions obtained by removing one removable node, sorted.
std::vector<Partition> branching_set(const Partition& mu);

/// Every part divisible by p and every multiplicity divisible by p.
bool is_pxp_blocks(const Partition& mu, unsigned p);

/// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(int m);

}  // namespace spechtvar
