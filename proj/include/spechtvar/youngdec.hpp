#pragma once

#include <string>
#include <vector>

#include "spechtvar/jordan.hpp"
#include "spechtvar/partitions.hpp"

namespace spechtvar {

/// The s with Y^{(r-s,s)} a summand of M^{(r-m,m)}; each occurs once.
struct SummandSet {
  unsigned r = 0;
  unsigned m = 0;
  unsigned p = 0;
  std::vector<unsigned> s_values;  // increasing

  bool contains(unsigned s) const;
};

/// {s <= m : m - s is p-contained in r - 2s}. Requires m <= r / 2.
SummandSet young_summands(unsigned r, unsigned m, unsigned p);

/// One containment test: every summand of the smaller module is a summand of
/// the larger one.
struct CorollaryCase {
  unsigned n = 0;
  unsigned r = 0;
  /// Second parts of the two-part shapes, normalised to at most r / 2.
  unsigned m_small = 0;
  unsigned m_large = 0;
  SummandSet small;
  SummandSet large;
  bool skipped = false;
  bool holds = false;
  std::string note;
};

struct CorollaryReport {
  std::string name;
  unsigned p = 0;
  std::vector<CorollaryCase> cases;
  /// Specht factors of the complement, for reference only.
  std::vector<Partition> filtration_factors;

  bool all_hold() const;
};

/// M^{(p^2-m+p, m-p)} is a summand of M^{(p^2-m, m)} for p < m <= p^2/2.
CorollaryReport verify_cor_psquare(unsigned p);

/// M^{(np-p, p)} against M^{(np-2p, 2p)}. For n = 1 mod p the trivial summand
/// s = 0 is set aside first and must be absent from the larger module; n = 2
/// mod p is skipped. Requires odd p and n >= 2.
CorollaryCase verify_cor_multiple(unsigned n, unsigned p);

/// verify_cor_multiple for n = 2..n_max.
CorollaryReport verify_cor_multiple_sweep(unsigned p, unsigned n_max);

/// (p^a, 1^b) with b = n!/(n_1!...n_s!) and a = (dim M^mu - b)/p for
/// mu = (n_1 p, ..., n_s p). Throws Error(NotBlockMultiple) if some part is not
/// a multiple of p.
JordanType perm_generic_type_formula(const Partition& mu, unsigned n, unsigned p);

}  // namespace spechtvar
