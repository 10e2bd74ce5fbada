#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spechtvar/field.hpp"
#include "spechtvar/spechtmod.hpp"

namespace spechtvar {

/// Ranks r_0..r_p of N^0..N^p.
struct RankVector {
  std::vector<std::size_t> r;

  /// Weakly decreasing, convex, r_p = 0.
  bool is_valid() const;
  bool operator==(const RankVector&) const = default;
};

/// Block counts of a nilpotent operator with N^p = 0: blocks[s - 1] is the
/// number of Jordan blocks of size s.
struct JordanType {
  std::vector<std::size_t> blocks;

  static JordanType from_ranks(const RankVector& ranks);
  /// Type with the given (size, count) pairs padded to length p.
  static JordanType of(unsigned p, std::initializer_list<std::pair<unsigned, std::size_t>> counts);

  unsigned p() const { return static_cast<unsigned>(blocks.size()); }
  std::size_t count(unsigned size) const { return blocks.at(size - 1); }
  std::size_t dim() const;
  bool empty() const;
  /// "(3^558,1^6)", "()" when empty.
  std::string to_string() const;
  bool operator==(const JordanType&) const = default;
};

/// Ranks of N, N^2, ... where N = sum alpha_i A_i over `field` (which must
/// contain GF(p)). Computed block by block.
RankVector rank_vector_at(const RestrictedActions& acts, const ff::Field& field, std::span<const ff::Elem> alpha);

/// Throws Error(ZeroPoint) for alpha = 0 and Error(ArityMismatch) when the
/// length differs from n.
JordanType jordan_at_point(const RestrictedActions& acts, const ff::Field& field, std::span<const ff::Elem> alpha);

struct Freeness {
  bool free = false;
  /// p does not divide the dimension, so the module is free nowhere and no
  /// ranks were computed.
  bool indivisible = false;
};

/// free iff rank(N^{p-1}) = d / p.
Freeness is_free_at(const RestrictedActions& acts, const ff::Field& field, std::span<const ff::Elem> alpha);

enum class GenericMode { Random, Exact };

std::string_view to_string(GenericMode mode);

struct GenericOptions {
  GenericMode mode = GenericMode::Random;
  std::uint64_t seed = 0;
  unsigned samples = 5;
  unsigned threads = 1;
};

struct GenericTypeReport {
  JordanType type;
  RankVector ranks;
  GenericMode mode = GenericMode::Random;
  unsigned samples = 0;
  unsigned field_p = 0;
  unsigned field_k = 0;
  bool certified_by_single_sample = false;
  /// Rank vector of every sample, in draw order.
  std::vector<RankVector> sample_ranks;
};

/// Extension degree used for random sampling: 8 first, then the retry degree
/// (12, or the largest k <= 12 within the field table limit).
unsigned retry_degree(unsigned p);

/// Random mode samples nonzero points of GF(p^8)^n, takes the entrywise maximum
/// of the rank vectors and requires one sample to attain it; otherwise retries
/// over the retry field and then throws Error(CertificationFailed). Exact mode
/// computes ranks over GF(p)(t_1..t_n) by fraction-free elimination; it is
/// limited to modules of dimension <= 32 (Error(TooLarge)).
GenericTypeReport generic_type(const RestrictedActions& acts, const GenericOptions& options);

/// Same with an explicit sampling field; no retry.
GenericTypeReport generic_type_in(const RestrictedActions& acts, const ff::Field& field, const GenericOptions& options);

/// Generic ranks over GF(p)(t_1..t_n), one polynomial matrix per block.
RankVector exact_generic_ranks(const RestrictedActions& acts);

/// Projective blocks (size p) removed.
JordanType stable_type(const JordanType& t);

/// n_{t1}(i) = n_{t2}(p - i) for i = 1..p-1.
bool complementary_check(const JordanType& t1, const JordanType& t2, unsigned p);

/// p^{n-r} divides d, the necessary condition on a module of dimension d whose
/// variety on E_n has dimension r.
bool variety_dimension_divides(std::uint64_t d, unsigned p, unsigned n, unsigned r);

/// Seed derived from the module parameters and a user seed.
std::uint64_t derive_seed(const RestrictedActions& acts, std::uint64_t user_seed);

}  // namespace spechtvar
