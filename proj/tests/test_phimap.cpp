#include "doctest.h"

#include <algorithm>

#include "spechtvar/error.hpp"
#include "spechtvar/phimap.hpp"

using namespace spechtvar;

namespace {

bool empty_core_small(const Partition& mu, unsigned p) {
  return mu.length() <= p && p_core_weight(mu, p).core.empty();
}

}  // namespace

TEST_CASE("find_ab examples") {
  auto ab = find_ab({4, 3, 2}, 3);
  REQUIRE(ab);
  CHECK(ab->a == 2);
  CHECK(ab->b == 3);
  CHECK(ab->eta == Partition{4, 3, 1});
  CHECK_FALSE(find_ab({3, 3, 3}, 3));
  ab = find_ab({5, 2, 2}, 3);
  REQUIRE(ab);
  CHECK(ab->a == 1);
  CHECK(ab->b == 3);
}

TEST_CASE("find_ab preconditions") {
  try {
    find_ab({7, 2}, 3);  // nonempty core
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  try {
    find_ab({1, 1, 1, 1, 1, 1}, 3);  // too many parts
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("phi examples") {
  CHECK(phi_step({4, 3, 2}, 3) == Partition{4, 4, 1});
  CHECK(phi_step({5, 2, 2}, 3) == Partition{6, 2, 1});
  CHECK(phi_step({6, 3}, 3) == Partition{6, 3});
  CHECK(phi_limit({4, 3, 2}, 3) == Partition{6, 3});
  CHECK(phi_limit({9}, 3) == Partition{9});
  CHECK(phi_chain({4, 3, 2}, 3) == std::vector<Partition>{{4, 3, 2}, {4, 4, 1}, {5, 4}, {6, 3}});
}

TEST_CASE("the (u, v, 2^m) family") {
  // u = p - m - 1 and v = p - m + 1 mod p, 0 <= m <= p - 2.
  for (int p : {3, 5, 7}) {
    for (int m = 0; m <= p - 2; ++m) {
      const int ur = ((p - m - 1) % p + p) % p;
      const int vr = ((p - m + 1) % p + p) % p;
      for (int v = std::max(vr, 2); v <= 4 * p; v += p) {
        if (v % p != vr) continue;
        for (int u = v; u <= v + 3 * p; ++u) {
          if (u % p != ur) continue;
          std::vector<int> parts{u, v};
          parts.insert(parts.end(), static_cast<std::size_t>(m), 2);
          const Partition mu(parts);
          const auto up = static_cast<unsigned>(p);
          REQUIRE(empty_core_small(mu, up));
          const auto chain = phi_chain(mu, up);
          REQUIRE(chain.size() > static_cast<std::size_t>(2 * m + 1));
          const Partition mid = chain[static_cast<std::size_t>(2 * m)];
          REQUIRE(mid.length() == 2);
          const int big = mid.part(0), small = mid.part(1);
          CHECK(big % p == p - 1);
          CHECK(small % p == 1);
          CHECK(big + small == mu.size());
          CHECK(chain[static_cast<std::size_t>(2 * m + 1)] == Partition{big + 1, small - 1});
          CHECK(chain.back() == Partition{big + 1, small - 1});
        }
      }
    }
  }
}

TEST_CASE("phi limit properties") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (int m = 1; m <= 12; ++m) {
      for (const auto& mu : partitions_of(m)) {
        if (!empty_core_small(mu, p)) continue;
        const auto chain = phi_chain(mu, p);
        for (const auto& step : chain) CHECK(p_core_weight(step, p).core.empty());
        const Partition limit = chain.back();
        CHECK(phi_limit(limit, p) == limit);
        CHECK(limit.size() == mu.size());
        CHECK(limit.length() <= mu.length());
        for (int part : limit.parts()) CHECK(part % static_cast<int>(p) == 0);
      }
    }
  }
}

TEST_CASE("hypothesis examples") {
  CHECK(classify_hypothesis({4, 3, 2}, 3, 3) == Hypothesis::H2);
  CHECK(classify_hypothesis({9}, 3, 3) == Hypothesis::H3);
  CHECK(classify_hypothesis({3, 3, 3}, 3, 3) == Hypothesis::None);
  CHECK(to_string(Hypothesis::H4) == "H4");
  CHECK_THROWS_AS(classify_hypothesis({7, 2}, 3, 3), Error);
}

TEST_CASE("predict examples") {
  auto pr = predict({7, 2}, 3);
  REQUIRE(pr.complexity);
  CHECK(*pr.complexity == 1);
  CHECK(pr.variety == VarietyPrediction::DefectDim);
  pr = predict({5, 3, 1}, 3);
  REQUIRE(pr.complexity);
  CHECK(*pr.complexity == 0);
  pr = predict({3, 3, 3}, 3);
  CHECK(pr.variety == VarietyPrediction::Unknown);
  CHECK_FALSE(pr.complexity);
  pr = predict({4, 3, 2}, 3);
  CHECK(pr.variety == VarietyPrediction::FullRankN);
  REQUIRE(pr.complexity);
  CHECK(*pr.complexity == 3);
  // Too many parts: classified through the conjugate.
  pr = predict(conjugate({4, 3, 2}), 3);
  CHECK(pr.variety == VarietyPrediction::FullRankN);
  REQUIRE(pr.classified_on);
  CHECK(*pr.classified_on == Partition{4, 3, 2});
}

TEST_CASE("predictions never contradict the p = 3 table") {
  // Full for every weight-3 class except (3,3,3); weight 1 classes have
  // complexity 1, weight 0 complexity 0.
  for (const auto& mu : partitions_of(9)) {
    const auto pr = predict(mu, 3);
    const int w = p_core_weight(mu, 3).weight;
    if (w < 3) {
      REQUIRE(pr.complexity);
      CHECK(*pr.complexity == w);
    } else if (mu == Partition{3, 3, 3}) {
      CHECK(pr.variety == VarietyPrediction::Unknown);
    } else if (pr.variety != VarietyPrediction::Unknown) {
      CHECK(pr.variety == VarietyPrediction::FullRankN);
      CHECK(*pr.complexity == 3);
    }
  }
}
