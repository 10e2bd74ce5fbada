#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <vector>

#include "spechtvar/matrix.hpp"
#include "spechtvar/partitions.hpp"

namespace spechtvar {

/// perm[i] is the image of letter i + 1; letters are one-based.
using Permutation = std::vector<int>;

Permutation identity_permutation(int m);
/// The cycle (c_1 c_2 ... c_r) on {1..m}.
Permutation cycle_permutation(int m, const std::vector<int>& cycle);
Permutation inverse(const Permutation& sigma);
/// The generator ((i-1)p+1, ..., ip) of E_n, i one-based.
Permutation block_cycle(int m, unsigned p, unsigned i);

/// A mu-tabloid as its sorted row sets.
struct Tabloid {
  std::vector<std::vector<int>> rows;
  auto operator<=>(const Tabloid&) const = default;
};

/// All mu-tabloids in canonical order (lexicographic on the sequence of row
/// sets), with an index for lookups. Supports |mu| <= 16 and at most 10^6
/// tabloids, Error(TooLarge) otherwise.
class TabloidSpace {
 public:
  static constexpr std::uint64_t kMaxTabloids = 1'000'000;

  explicit TabloidSpace(const Partition& mu);

  const Partition& shape() const { return mu_; }
  std::size_t size() const { return codes_.size(); }
  Tabloid tabloid(std::size_t index) const;
  /// Index of the tabloid whose letter `i` (zero-based) sits in row row_of[i].
  std::size_t index_of(const std::vector<std::uint8_t>& row_of) const;
  std::size_t act(const Permutation& sigma, std::size_t index) const;

 private:
  std::uint64_t encode(const std::vector<std::uint8_t>& row_of) const;

  Partition mu_;
  int letters_ = 0;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

std::vector<Tabloid> enumerate_tabloids(const Partition& mu);

/// Permutation matrix P with P e_t = e_{sigma t} on the tabloid basis.
ff::SparseMatrix perm_action_sparse(const Permutation& sigma, const Partition& mu);

/// Standard tableaux as rows of entries, ordered lexicographically by their
/// row reading word.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& mu);

struct SpechtBasis {
  Partition mu;
  unsigned p = 0;
  std::size_t tabloid_count = 0;
  std::size_t dim = 0;
  /// T x d, column t is the polytabloid e_t in tabloid coordinates.
  ff::SparseMatrix basis;
  std::vector<std::vector<std::vector<int>>> tableaux;
  /// Row index of the tabloid {t} for each standard tableau t; the square
  /// submatrix on these rows is unitriangular up to ordering.
  std::vector<std::uint32_t> leading_rows;
};

/// Standard polytabloid basis of S^mu over GF(p). The column-stabiliser
/// expansion is capped at 10^7 terms per polytabloid.
SpechtBasis standard_basis(const Partition& mu, unsigned p);

/// One connected piece of the supports of the A_i: the module restricted to
/// E_n is the direct sum of these coordinate blocks.
struct ActionBlock {
  std::vector<std::uint32_t> indices;
  std::vector<ff::Matrix> actions;
};

/// Matrices A_i of (g_i - 1), i = 1..n, on a module restricted to E_n, over
/// GF(p). Immutable once built.
struct RestrictedActions {
  Partition mu;
  /// mu itself, or its conjugate when the conjugate swap was taken. On E_n the
  /// swapped module is the dual of the requested one, and u^{-1} - 1 has the
  /// same power ranks as u - 1, so Jordan types agree at every point.
  Partition built_from;
  bool conjugated = false;
  bool permutation_module = false;
  unsigned n = 0;
  unsigned p = 0;
  std::size_t dim = 0;
  std::vector<ff::SparseMatrix> actions;
  std::vector<ActionBlock> blocks;
};

/// Rebuilds `blocks` from `actions`.
void compute_blocks(RestrictedActions& acts);

/// A_i solving B A_i = (g_i - 1) B on S^mu, |mu| = n p. With use_conjugate the
/// shape with fewer tabloids is used. Throws Error(NoSolution) when the column
/// space of B is not invariant.
RestrictedActions restricted_actions(const Partition& mu, unsigned n, unsigned p, bool use_conjugate);

/// (g_i - 1) on the tabloid basis of M^mu.
RestrictedActions perm_module_actions(const Partition& mu, unsigned n, unsigned p);

/// Tabloids fixed by every generator of E_n.
std::size_t fixed_tabloid_count(const Partition& mu, unsigned n, unsigned p);

/// Cache directory from SPECHTVAR_CACHE, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

/// restricted_actions / perm_module_actions backed by a binary cache keyed by a
/// content hash of the construction parameters and the code version.
RestrictedActions cached_restricted_actions(const Partition& mu, unsigned n, unsigned p, bool use_conjugate,
                                            const std::optional<std::filesystem::path>& cache_dir);
RestrictedActions cached_perm_module_actions(const Partition& mu, unsigned n, unsigned p,
                                             const std::optional<std::filesystem::path>& cache_dir);

}  // namespace spechtvar
