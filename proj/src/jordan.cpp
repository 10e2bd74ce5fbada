#include "spechtvar/jordan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "spechtvar/error.hpp"
#include "spechtvar/hash.hpp"
#include "spechtvar/multipoly.hpp"
#include "spechtvar/parallel.hpp"

namespace spechtvar {

bool RankVector::is_valid() const {
  if (r.size() < 2 || r.back() != 0) return false;
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] > r[i - 1]) return false;
  }
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (r[i - 1] - r[i] < r[i] - r[i + 1]) return false;
  }
  return true;
}

JordanType JordanType::from_ranks(const RankVector& ranks) {
  const std::size_t p = ranks.r.size() - 1;
  JordanType t;
  t.blocks.assign(p, 0);
  for (std::size_t s = 1; s <= p; ++s) {
    const auto next = s + 1 <= p ? static_cast<long long>(ranks.r[s + 1]) : 0LL;
    const long long b = static_cast<long long>(ranks.r[s - 1]) - 2 * static_cast<long long>(ranks.r[s]) + next;
    if (b < 0) throw Error(ErrorCode::InvariantViolated, "rank vector is not convex");
    t.blocks[s - 1] = static_cast<std::size_t>(b);
  }
  return t;
}

JordanType JordanType::of(unsigned p, std::initializer_list<std::pair<unsigned, std::size_t>> counts) {
  JordanType t;
  t.blocks.assign(p, 0);
  for (const auto& [size, count] : counts) t.blocks.at(size - 1) += count;
  return t;
}

std::size_t JordanType::dim() const {
  std::size_t d = 0;
  for (std::size_t s = 0; s < blocks.size(); ++s) d += (s + 1) * blocks[s];
  return d;
}

bool JordanType::empty() const {
  return std::all_of(blocks.begin(), blocks.end(), [](std::size_t b) { return b == 0; });
}

std::string JordanType::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t s = blocks.size(); s >= 1; --s) {
    if (blocks[s - 1] == 0) continue;
    if (!first) os << ',';
    first = false;
    os << s;
    if (blocks[s - 1] > 1) os << '^' << blocks[s - 1];
  }
  os << ')';
  return os.str();
}

namespace {

void check_point(const RestrictedActions& acts, const ff::Field& field, std::span<const ff::Elem> alpha) {
  if (field.characteristic() != acts.p) throw Error(ErrorCode::ArityMismatch, "field characteristic differs from p");
  if (alpha.size() != acts.n) throw Error(ErrorCode::ArityMismatch, "point has length " + std::to_string(alpha.size()) + ", expected " + std::to_string(acts.n));
  if (std::all_of(alpha.begin(), alpha.end(), [](ff::Elem a) { return a == 0; })) {
    throw Error(ErrorCode::ZeroPoint, "alpha = 0 does not define a shifted subgroup");
  }
}

ff::Matrix operator_on_block(const ActionBlock& block, const ff::Field& field, std::span<const ff::Elem> alpha) {
  const std::size_t size = block.indices.size();
  ff::Matrix n(size, size);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    for (std::size_t r = 0; r < size; ++r) field.axpy(n.row(r), alpha[i], block.actions[i].row(r));
  }
  return n;
}

/// Adds rank(N^j) for j = 1..top to ranks[j].
void accumulate_block_ranks(const ff::Matrix& n, const ff::Field& field, unsigned top, std::vector<std::size_t>& ranks) {
  ff::Matrix power = n;
  for (unsigned j = 1; j <= top; ++j) {
    if (j > 1) power = ff::multiply(field, power, n);
    const std::size_t r = ff::rank(field, power);
    ranks[j] += r;
    if (r == 0) return;
  }
}

ff::Matrix nth_power(const ff::Field& field, const ff::Matrix& n, unsigned e) {
  ff::Matrix result = ff::Matrix::identity(n.rows());
  ff::Matrix base = n;
  while (e > 0) {
    if (e & 1U) result = ff::multiply(field, result, base);
    e >>= 1U;
    if (e > 0) base = ff::multiply(field, base, base);
  }
  return result;
}

}  // namespace

RankVector rank_vector_at(const RestrictedActions& acts, const ff::Field& field, std::span<const ff::Elem> alpha) {
  check_point(acts, field, alpha);
  RankVector out;
  out.r.assign(acts.p + 1, 0);
  out.r[0] = acts.dim;
  for (const auto& block : acts.blocks) {
    accumulate_block_ranks(operator_on_block(block, field, alpha), field, acts.p - 1, out.r);
  }
  return out;
}

JordanType jordan_at_point(const RestrictedActions& acts, const ff::Field& field, std::span<const ff::Elem> alpha) {
  return JordanType::from_ranks(rank_vector_at(acts, field, alpha));
}

Freeness is_free_at(const RestrictedActions& acts, const ff::Field& field, std::span<const ff::Elem> alpha) {
  check_point(acts, field, alpha);
  if (acts.dim % acts.p != 0) return {false, true};
  // Each block contributes at most size/p to rank(N^{p-1}), so every block has
  // to be free on its own.
  for (const auto& block : acts.blocks) {
    const std::size_t size = block.indices.size();
    if (size % acts.p != 0) return {false, false};
    const ff::Matrix top = nth_power(field, operator_on_block(block, field, alpha), acts.p - 1);
    if (ff::rank(field, top) != size / acts.p) return {false, false};
  }
  return {true, false};
}

std::string_view to_string(GenericMode mode) { return mode == GenericMode::Exact ? "exact" : "randomized"; }

unsigned retry_degree(unsigned p) {
  unsigned k = 12;
  while (k > 1) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    if (q <= ff::Field::kMaxOrder) break;
    --k;
  }
  return k;
}

std::uint64_t derive_seed(const RestrictedActions& acts, std::uint64_t user_seed) {
  std::ostringstream key;
  key << acts.mu.to_string() << '|' << acts.p << '|' << acts.n << '|' << acts.permutation_module << '|' << user_seed;
  return fnv1a(key.str());
}

GenericTypeReport generic_type_in(const RestrictedActions& acts, const ff::Field& field, const GenericOptions& options) {
  if (options.samples == 0) throw Error(ErrorCode::PreconditionViolated, "at least one sample is required");
  std::mt19937_64 rng(derive_seed(acts, options.seed) ^ (std::uint64_t{field.degree()} << 56));
  std::uniform_int_distribution<ff::Elem> draw(0, field.order() - 1);
  std::vector<std::vector<ff::Elem>> points;
  while (points.size() < options.samples) {
    std::vector<ff::Elem> alpha(acts.n);
    for (auto& a : alpha) a = draw(rng);
    if (std::any_of(alpha.begin(), alpha.end(), [](ff::Elem a) { return a != 0; })) points.push_back(std::move(alpha));
  }

  GenericTypeReport report;
  report.mode = GenericMode::Random;
  report.samples = options.samples;
  report.field_p = field.characteristic();
  report.field_k = field.degree();
  report.sample_ranks.resize(points.size());
  parallel_for(points.size(), options.threads,
               [&](std::size_t i) { report.sample_ranks[i] = rank_vector_at(acts, field, points[i]); });

  report.ranks.r.assign(acts.p + 1, 0);
  for (const auto& rv : report.sample_ranks) {
    for (std::size_t j = 0; j < rv.r.size(); ++j) report.ranks.r[j] = std::max(report.ranks.r[j], rv.r[j]);
  }
  report.certified_by_single_sample =
      std::any_of(report.sample_ranks.begin(), report.sample_ranks.end(), [&](const RankVector& rv) { return rv == report.ranks; });
  if (report.certified_by_single_sample) report.type = JordanType::from_ranks(report.ranks);
  return report;
}

RankVector exact_generic_ranks(const RestrictedActions& acts) {
  if (acts.dim > 32) throw Error(ErrorCode::TooLarge, "exact mode is limited to dimension <= 32");
  // Minors are homogeneous in t, so t_1 = 1 loses nothing and saves a variable.
  const unsigned vars = acts.n - 1;
  RankVector out;
  out.r.assign(acts.p + 1, 0);
  out.r[0] = acts.dim;
  for (const auto& block : acts.blocks) {
    const std::size_t size = block.indices.size();
    ff::PolyMatrix n(size, size, vars, acts.p);
    std::vector<unsigned> exps(vars, 0);
    for (std::size_t i = 0; i < acts.n; ++i) {
      if (i > 0) exps[i - 1] = 1;
      for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
          const ff::Elem v = block.actions[i](r, c);
          if (v != 0) n(r, c).add_term(exps, v);
        }
      }
      if (i > 0) exps[i - 1] = 0;
    }
    ff::PolyMatrix power = n;
    for (unsigned j = 1; j < acts.p; ++j) {
      if (j > 1) power = ff::multiply(power, n);
      const std::size_t r = ff::fraction_free_rank(power);
      out.r[j] += r;
      if (r == 0) break;
    }
  }
  return out;
}

GenericTypeReport generic_type(const RestrictedActions& acts, const GenericOptions& options) {
  if (options.mode == GenericMode::Exact) {
    GenericTypeReport report;
    report.mode = GenericMode::Exact;
    report.field_p = acts.p;
    report.field_k = 1;
    report.ranks = exact_generic_ranks(acts);
    report.type = JordanType::from_ranks(report.ranks);
    report.certified_by_single_sample = true;
    return report;
  }
  for (unsigned k : {8U, retry_degree(acts.p)}) {
    const ff::Field field(acts.p, k);
    GenericTypeReport report = generic_type_in(acts, field, options);
    if (report.certified_by_single_sample) return report;
  }
  throw Error(ErrorCode::CertificationFailed, "no single sample attained the maximal rank vector");
}

JordanType stable_type(const JordanType& t) {
  JordanType out = t;
  if (!out.blocks.empty()) out.blocks.back() = 0;
  return out;
}

bool complementary_check(const JordanType& t1, const JordanType& t2, unsigned p) {
  auto n = [](const JordanType& t, unsigned i) -> std::size_t { return i <= t.blocks.size() ? t.blocks[i - 1] : 0; };
  for (unsigned i = 1; i < p; ++i) {
    if (n(t1, i) != n(t2, p - i)) return false;
  }
  return true;
}

bool variety_dimension_divides(std::uint64_t d, unsigned p, unsigned n, unsigned r) {
  if (r > n) return false;
  std::uint64_t power = 1;
  for (unsigned i = r; i < n; ++i) power *= p;
  return d % power == 0;
}

}  // namespace spechtvar
