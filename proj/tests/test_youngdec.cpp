#include "doctest.h"
#include "oracles.hpp"

#include "spechtvar/error.hpp"
#include "spechtvar/youngdec.hpp"

using namespace spechtvar;

namespace {

/// Summands by the binomial form of p-containment.
std::vector<unsigned> summands_by_binomials(unsigned r, unsigned m, unsigned p) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s <= m; ++s) {
    if (oracle::binomial(static_cast<int>(r - 2 * s), static_cast<int>(m - s)) % p != 0) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("summand examples") {
  const auto s = young_summands(9, 4, 3);
  CHECK(s.contains(1));
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(0));
  CHECK(young_summands(7, 0, 3).s_values == std::vector<unsigned>{0});
}

TEST_CASE("summand sets agree with binomials and always contain m") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned r = 0; r <= 40; ++r) {
      for (unsigned m = 0; 2 * m <= r; ++m) {
        const auto s = young_summands(r, m, p);
        CHECK(s.s_values == summands_by_binomials(r, m, p));
        CHECK(s.contains(m));
      }
    }
  }
}

TEST_CASE("p squared corollary") {
  auto rep = verify_cor_psquare(3);
  REQUIRE(rep.cases.size() == 1);
  CHECK(rep.cases[0].m_large == 4);
  CHECK(rep.all_hold());
  // The larger module has the extra summand s = 4.
  CHECK(rep.cases[0].large.contains(4));
  CHECK_FALSE(rep.cases[0].small.contains(4));
  rep = verify_cor_psquare(5);
  CHECK(rep.cases.size() == 7);
  CHECK(rep.all_hold());
  for (const auto& c : rep.cases) {
    for (unsigned s : c.small.s_values) CHECK(c.large.contains(s));
  }
}

TEST_CASE("multiple corollary") {
  auto c = verify_cor_multiple(3, 3);
  CHECK_FALSE(c.skipped);
  CHECK(c.holds);
  c = verify_cor_multiple(4, 3);
  CHECK(c.holds);
  CHECK(c.small.contains(0));
  CHECK_FALSE(c.large.contains(0));
  c = verify_cor_multiple(5, 3);
  CHECK(c.skipped);
  const auto rep = verify_cor_multiple_sweep(3, 12);
  CHECK(rep.all_hold());
  for (unsigned p : {5u, 7u}) CHECK(verify_cor_multiple_sweep(p, 20).all_hold());
}

TEST_CASE("permutation module generic types") {
  CHECK(perm_generic_type_formula({3, 3, 3}, 3, 3) == JordanType::of(3, {{3, 558}, {1, 6}}));
  CHECK(perm_generic_type_formula({9}, 3, 3) == JordanType::of(3, {{1, 1}}));
  CHECK(perm_generic_type_formula({6, 3}, 3, 3) == JordanType::of(3, {{3, 27}, {1, 3}}));
  try {
    perm_generic_type_formula({7, 2}, 3, 3);
    FAIL("expected NotBlockMultiple");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBlockMultiple);
  }
  const std::vector<std::pair<Partition, unsigned>> cases{{{9}, 3}, {{6, 3}, 3}, {{3, 3, 3}, 3}, {{4, 2}, 2}, {{2, 2, 2}, 2}, {{4, 4}, 2}, {{4, 2, 2}, 2}};
  for (const auto& [mu, p] : cases) {
    CAPTURE(mu.to_string());
    const unsigned n = static_cast<unsigned>(mu.size()) / p;
    const auto formula = perm_generic_type_formula(mu, n, p);
    const auto acts = perm_module_actions(mu, n, p);
    CHECK(generic_type(acts, GenericOptions{}).type == formula);
    CHECK(formula.count(1) == fixed_tabloid_count(mu, n, p));
    // b is the multinomial of the block counts.
    oracle::BigInt b = oracle::factorial(static_cast<int>(n));
    for (int part : mu.parts()) b /= oracle::factorial(part / static_cast<int>(p));
    CHECK(oracle::BigInt(formula.count(1)) == b);
  }
}
