#include "doctest.h"
#include "oracles.hpp"

#include "spechtvar/error.hpp"
#include "spechtvar/partitions.hpp"

using namespace spechtvar;

namespace {

oracle::Parts parts_of(const Partition& mu) { return {mu.parts().begin(), mu.parts().end()}; }

std::vector<Partition> all_up_to(int m) {
  std::vector<Partition> out;
  for (int i = 1; i <= m; ++i) {
    for (auto& mu : partitions_of(i)) out.push_back(mu);
  }
  return out;
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(Partition::parse("(4,3,2)") == Partition{4, 3, 2});
  CHECK(Partition::parse(" 4, 3 ,2 ") == Partition{4, 3, 2});
  CHECK(Partition::parse("()").empty());
  CHECK(Partition{7, 2}.to_string() == "(7,2)");
  CHECK(Partition().to_string() == "()");
  CHECK(Partition(std::vector<int>{3, 1, 0, 0}) == Partition{3, 1});
  for (const char* bad : {"(3,x)", "(1,2)", "(3,,1)", "((3)", "(-1)"}) {
    try {
      Partition::parse(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Usage);
    }
  }
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("conjugate examples and involution") {
  CHECK(conjugate({3, 3, 3}) == Partition{3, 3, 3});
  CHECK(conjugate({7, 2}) == Partition{2, 2, 1, 1, 1, 1, 1});
  CHECK(conjugate(Partition()) == Partition());
  for (const auto& mu : all_up_to(10)) CHECK(conjugate(conjugate(mu)) == mu);
}

TEST_CASE("hook length examples") {
  CHECK(hook_lengths({2, 1}) == std::map<std::pair<int, int>, int>{{{1, 1}, 3}, {{1, 2}, 1}, {{2, 1}, 1}});
  const auto h = hook_lengths({3, 3, 3});
  const int expected[3][3] = {{5, 4, 3}, {4, 3, 2}, {3, 2, 1}};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(h.at({i, j}) == expected[i - 1][j - 1]);
  }
  const auto h81 = hook_lengths({8, 1});
  const int row1[8] = {9, 7, 6, 5, 4, 3, 2, 1};
  for (int j = 1; j <= 8; ++j) CHECK(h81.at({1, j}) == row1[j - 1]);
  CHECK(h81.at({2, 1}) == 1);
}

TEST_CASE("dimension examples") {
  CHECK(dim_specht({2, 1}) == 2);
  CHECK(dim_specht({3, 3, 3}) == 42);
  CHECK(dim_specht({8, 1}) == 8);
  CHECK(dim_specht({3, 3, 2}) == 42);
  CHECK(syt_count({2, 1}) == 2);
  CHECK(syt_count({12}) == 1);
  CHECK(syt_count({1, 1, 1}) == 1);
  CHECK_THROWS_AS(syt_count({17}), Error);
  CHECK(tabloid_count({6, 3}) == 84);
  CHECK(tabloid_count({3, 3, 3}) == 1680);
}

TEST_CASE("hook formula agrees with tableau counts") {
  std::map<oracle::Parts, oracle::BigInt> memo;
  for (const auto& mu : all_up_to(9)) {
    CHECK(dim_specht(mu) == syt_count(mu));
    CHECK(oracle::BigInt(dim_specht(mu)) == oracle::tableaux_by_branching(parts_of(mu), memo));
  }
  // Larger shapes against the branching recursion only.
  for (const auto& mu : partitions_of(16)) {
    CHECK(oracle::BigInt(dim_specht(mu)) == oracle::tableaux_by_branching(parts_of(mu), memo));
  }
}

TEST_CASE("branching dimension identity") {
  for (int m = 2; m <= 12; ++m) {
    for (const auto& mu : partitions_of(m)) {
      std::uint64_t sum = 0;
      for (const auto& lambda : branching_set(mu)) sum += dim_specht(lambda);
      CHECK(sum == dim_specht(mu));
    }
  }
}

TEST_CASE("branching set examples") {
  CHECK(branching_set({3, 3, 3}) == std::vector<Partition>{{3, 3, 2}});
  CHECK(branching_set({2, 1}) == std::vector<Partition>{{1, 1}, {2}});
  CHECK(branching_set({7, 2}) == std::vector<Partition>{{6, 2}, {7, 1}});
}

TEST_CASE("p-core examples") {
  auto c = p_core_weight({3, 3, 2}, 3);
  CHECK(c.core == Partition{3, 1, 1});
  CHECK(c.weight == 1);
  c = p_core_weight({3, 3, 3}, 3);
  CHECK(c.core.empty());
  CHECK(c.weight == 3);
  c = p_core_weight({7, 2}, 3);
  CHECK(c.core == Partition{4, 2});
  CHECK(c.weight == 1);
  CHECK(beta_numbers({7, 2}) == std::vector<int>{8, 2});
}

TEST_CASE("p-core agrees with rim hook removal and hook counts") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (const auto& mu : all_up_to(12)) {
      const auto c = p_core_weight(mu, p);
      const auto [core, removed] = oracle::core_by_rim_hooks(parts_of(mu), static_cast<int>(p));
      CHECK(parts_of(c.core) == core);
      CHECK(c.weight == removed);
      CHECK(mu.size() == c.core.size() + static_cast<int>(p) * c.weight);
      int divisible = 0;
      for (const auto& [node, h] : hook_lengths(mu)) divisible += (h % static_cast<int>(p) == 0);
      CHECK(c.weight == divisible);
      CHECK(p_core_weight(conjugate(mu), p).core == conjugate(c.core));
    }
  }
}

TEST_CASE("beta numbers round trip") {
  for (const auto& mu : all_up_to(10)) CHECK(from_beta_numbers(beta_numbers(mu)) == mu);
  // Extra leading beads 0..t-1 do not change the partition.
  CHECK(from_beta_numbers({0, 1, 5, 9}) == Partition{6, 3});
}

TEST_CASE("p-containment examples and Lucas") {
  CHECK(contained_p(3, 7, 2));
  CHECK_FALSE(contained_p(1, 2, 2));
  CHECK_FALSE(contained_p(8, 5, 3));
  for (unsigned p : {2u, 3u, 5u}) {
    for (int n = 0; n <= 200; ++n) {
      for (int m = 0; m <= n + 2; ++m) {
        const bool nonzero = oracle::binomial(n, m) % p != 0;
        CHECK(contained_p(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n), p) == nonzero);
      }
    }
  }
}

TEST_CASE("block partitions") {
  CHECK(is_pxp_blocks({3, 3, 3}, 3));
  CHECK_FALSE(is_pxp_blocks({6, 3}, 3));
  CHECK(is_pxp_blocks(Partition(), 5));
  CHECK(is_pxp_blocks({4, 4, 2, 2}, 2));
}

TEST_CASE("partition enumeration") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int m = 1; m <= 12; ++m) CHECK(partitions_of(m).size() == static_cast<std::size_t>(counts[m]));
  const auto nine = partitions_of(9);
  CHECK(nine.front() == Partition{9});
  CHECK(nine.back() == Partition{1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(std::is_sorted(nine.rbegin(), nine.rend()));
}
