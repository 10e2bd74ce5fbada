#include "spechtvar/youngdec.hpp"

#include <algorithm>

#include "spechtvar/error.hpp"

namespace spechtvar {

bool SummandSet::contains(unsigned s) const { return std::binary_search(s_values.begin(), s_values.end(), s); }

SummandSet young_summands(unsigned r, unsigned m, unsigned p) {
  if (2 * m > r) throw Error(ErrorCode::PreconditionViolated, "young_summands needs m <= r/2");
  SummandSet out{r, m, p, {}};
  for (unsigned s = 0; s <= m; ++s) {
    if (contained_p(m - s, r - 2 * s, p)) out.s_values.push_back(s);
  }
  return out;
}

bool CorollaryReport::all_hold() const {
  return std::all_of(cases.begin(), cases.end(), [](const CorollaryCase& c) { return c.skipped || c.holds; });
}

namespace {

void require_odd(unsigned p) {
  if (p % 2 == 0 || !ff::is_prime(p)) throw Error(ErrorCode::PreconditionViolated, "an odd prime is required");
}

// M^{(r-m,m)} and M^{(m,r-m)} are the same module.
unsigned two_part_index(unsigned r, unsigned m) { return std::min(m, r - m); }

bool subset(const SummandSet& a, const SummandSet& b, unsigned skip_s = ~0U) {
  return std::all_of(a.s_values.begin(), a.s_values.end(), [&](unsigned s) { return s == skip_s || b.contains(s); });
}

std::vector<Partition> two_part_range(unsigned r, unsigned from, unsigned to) {
  std::vector<Partition> out;
  for (unsigned j = from; j <= to; ++j) out.push_back(Partition({static_cast<int>(std::max(r - j, j)), static_cast<int>(std::min(r - j, j))}));
  return out;
}

}  // namespace

CorollaryReport verify_cor_psquare(unsigned p) {
  require_odd(p);
  CorollaryReport report;
  report.name = "psquare";
  report.p = p;
  const unsigned r = p * p;
  for (unsigned m = p + 1; 2 * m <= r; ++m) {
    CorollaryCase c;
    c.r = r;
    c.m_small = m - p;
    c.m_large = m;
    c.small = young_summands(r, c.m_small, p);
    c.large = young_summands(r, c.m_large, p);
    c.holds = subset(c.small, c.large);
    report.cases.push_back(std::move(c));
  }
  if (!report.cases.empty()) {
    const unsigned m = report.cases.front().m_large;
    report.filtration_factors = two_part_range(r, m - p + 1, m);
  }
  return report;
}

CorollaryCase verify_cor_multiple(unsigned n, unsigned p) {
  require_odd(p);
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "n >= 2 is required");
  CorollaryCase c;
  c.n = n;
  c.r = n * p;
  c.m_small = two_part_index(c.r, p);
  c.m_large = two_part_index(c.r, 2 * p);
  c.small = young_summands(c.r, c.m_small, p);
  c.large = young_summands(c.r, c.m_large, p);
  if (n % p == 2) {
    c.skipped = true;
    c.note = "n = 2 mod p is outside the hypothesis";
    return c;
  }
  if (n % p == 1) {
    const bool trivial_split = c.small.contains(0) && !c.large.contains(0);
    c.holds = trivial_split && subset(c.small, c.large, 0);
    c.note = trivial_split ? "trivial summand only in the smaller module" : "trivial summand not split off as expected";
    return c;
  }
  c.holds = subset(c.small, c.large);
  return c;
}

CorollaryReport verify_cor_multiple_sweep(unsigned p, unsigned n_max) {
  CorollaryReport report;
  report.name = "multiple";
  report.p = p;
  for (unsigned n = 2; n <= n_max; ++n) report.cases.push_back(verify_cor_multiple(n, p));
  if (n_max >= 4) report.filtration_factors = two_part_range(n_max * p, p + 1, 2 * p);
  return report;
}

JordanType perm_generic_type_formula(const Partition& mu, unsigned n, unsigned p) {
  if (mu.size() != static_cast<int>(n * p)) throw Error(ErrorCode::PreconditionViolated, mu.to_string() + " is not a partition of n*p");
  std::uint64_t b = 1;
  unsigned placed = 0;
  for (int part : mu.parts()) {
    if (part % static_cast<int>(p) != 0) throw Error(ErrorCode::NotBlockMultiple, mu.to_string() + " has a part not divisible by p");
    // Multinomial built as a product of binomials, each exact.
    const auto ni = static_cast<unsigned>(part) / p;
    for (unsigned j = 1; j <= ni; ++j) b = b * (placed + j) / j;
    placed += ni;
  }
  const std::uint64_t total = tabloid_count(mu);
  JordanType t;
  t.blocks.assign(p, 0);
  t.blocks[0] += b;
  t.blocks[p - 1] += (total - b) / p;
  return t;
}

}  // namespace spechtvar
