#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "spechtvar/error.hpp"
#include "spechtvar/variety.hpp"

using namespace spechtvar;
using ff::Elem;
using ff::Field;
using ff::MultiPoly;

namespace {

MultiPoly from_terms(unsigned n, unsigned p, std::initializer_list<std::pair<std::vector<unsigned>, long long>> terms) {
  MultiPoly f(n, p);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

MultiPoly quartic() { return from_terms(3, 3, {{{2, 2, 0}, 1}, {{0, 2, 2}, 1}, {{2, 0, 2}, 1}}); }

/// Projective zeros of the quartic by brute force: every affine point with
/// first nonzero coordinate one, evaluated with schoolbook arithmetic.
std::vector<Point> quartic_zeros(unsigned k) {
  const oracle::NaiveField f(3, static_cast<int>(k));
  const std::uint32_t q = f.order();
  std::vector<Point> zeros;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        const std::vector<std::uint32_t> x{a, b, c};
        const auto lead = std::find_if(x.begin(), x.end(), [](std::uint32_t v) { return v != 0; });
        if (lead == x.end() || *lead != 1) continue;
        std::uint32_t v = 0;
        for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}) {
          v = f.add(v, f.mul(f.pow(x[static_cast<std::size_t>(i)], 2), f.pow(x[static_cast<std::size_t>(j)], 2)));
        }
        if (v == 0) zeros.push_back(Point(x.begin(), x.end()));
      }
    }
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

const RestrictedActions& module(const Partition& mu) {
  static std::map<Partition, RestrictedActions> store;
  auto it = store.find(mu);
  if (it == store.end()) it = store.emplace(mu, restricted_actions(mu, 3, 3, true)).first;
  return it->second;
}

}  // namespace

TEST_CASE("projective points") {
  const Field f(3);
  const auto pts = projective_points(f, 3);
  CHECK(pts.size() == 13);
  CHECK(projective_count(3, 3) == 13);
  CHECK(projective_count(27, 3) == 757);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (const auto& pt : pts) CHECK(normalize(f, pt) == pt);
  const Field f9(3, 2);
  CHECK(projective_points(f9, 2).size() == 10);
  CHECK(normalize(f, {0, 2, 1}) == Point{0, 1, 2});
}

TEST_CASE("locus of (3,3,3) is the quartic's zero set") {
  for (unsigned k : {1u, 2u, 3u}) {
    CAPTURE(k);
    const auto sample = enumerate_locus(module({3, 3, 3}), k, 2);
    CHECK(sample.points == quartic_zeros(k));
    CHECK(cuts_out(quartic(), sample));
  }
  const auto s1 = enumerate_locus(module({3, 3, 3}), 1);
  CHECK(std::find(s1.points.begin(), s1.points.end(), Point{1, 1, 1}) != s1.points.end());
}

TEST_CASE("empty and full loci") {
  const auto empty = enumerate_locus(module({5, 3, 1}), 3, 4);
  CHECK(empty.points.empty());
  CHECK(empty.total_projective == 757);
  CHECK(empty.affine_count() == 1);
  CHECK(classify(empty).kind == VarietyKind::Zero);
  for (unsigned k : {1u, 2u}) {
    const auto full = enumerate_locus(module({9}), k);
    CHECK(full.points.size() == full.total_projective);
    CHECK(classify(full).kind == VarietyKind::Full);
  }
}

TEST_CASE("classification examples") {
  auto c = classify(enumerate_locus(module({7, 2}), 3, 4));
  CHECK(c.kind == VarietyKind::AxesUnion);
  CHECK(c.est_dim == 1);
  c = classify(enumerate_locus(module({3, 3, 3}), 3, 4));
  CHECK(c.kind == VarietyKind::Hypersurface);
  CHECK(c.est_dim == 2);
  REQUIRE(c.form);
  CHECK(*c.form == quartic());
  c = classify(enumerate_locus(module({4, 3, 2}), 3, 4));
  CHECK(c.kind == VarietyKind::Full);
  CHECK(c.est_dim == 3);
  CHECK(to_string(VarietyKind::AxesUnion) == "axes-union");
}

TEST_CASE("stable classification") {
  const auto s = classify_stable(module({3, 3, 3}), 3, 4);
  CHECK(s.stable);
  CHECK(s.previous.k == 2);
  const auto axes = classify_stable(module({7, 2}), 3, 4);
  CHECK(axes.stable);
  CHECK(axes.cls.kind == VarietyKind::AxesUnion);
}

TEST_CASE("conjugate modules have equal loci") {
  for (const auto& mu : std::vector<Partition>{{7, 2}, {6, 3}, {5, 3, 1}}) {
    CAPTURE(mu.to_string());
    const auto a = enumerate_locus(restricted_actions(mu, 3, 3, false), 2, 4);
    const auto b = enumerate_locus(restricted_actions(conjugate(mu), 3, 3, false), 2, 4);
    CHECK(a.points == b.points);
  }
}

TEST_CASE("zero locus exactly when generically free and free everywhere") {
  for (const auto& mu : partitions_of(9)) {
    CAPTURE(mu.to_string());
    const auto& acts = module(mu);
    const auto sample = enumerate_locus(acts, 2, 4);
    const auto t = generic_type(acts, GenericOptions{}).type;
    bool generically_free = true;
    for (unsigned s = 1; s < 3; ++s) generically_free = generically_free && t.count(s) == 0;
    CHECK((classify(sample).kind == VarietyKind::Zero) == (generically_free && sample.points.empty()));
    const auto sweep = sweep_points(acts, 2, 4);
    std::vector<Point> non_free;
    for (const auto& rec : sweep) {
      if (!rec.free) non_free.push_back(rec.point);
    }
    CHECK(non_free == sample.points);
  }
}

TEST_CASE("dimension estimates") {
  auto e = estimate_dimension({3, 3, 3}, 3, 3, {1, 2, 3}, 4);
  CHECK(e.dim == 2);
  CHECK(e.affine_counts == std::vector<std::uint64_t>{15, 57, 807});
  CHECK(e.divides);
  e = estimate_dimension({7, 2}, 3, 3, {1, 2, 3}, 4);
  CHECK(e.dim == 1);
  e = estimate_dimension({9}, 3, 3, {1, 2, 3}, 4);
  CHECK(e.dim == 3);
  e = estimate_dimension({5, 3, 1}, 3, 3, {1, 2, 3}, 4);
  CHECK(e.dim == 0);
  try {
    // Finest pair slope near 3 against a fitted slope near 1.
    estimate_dimension_from_counts(3, 3, 42, {1, 2, 3}, {1000, 1000, 27000});
    FAIL("expected InconsistentCounts");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InconsistentCounts);
  }
}

TEST_CASE("interpolation") {
  auto forms = interpolate_forms(enumerate_locus(module({3, 3, 3}), 3, 4), 4);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0] == quartic());
  forms = interpolate_forms(enumerate_locus(module({5, 3, 1}), 1), 1);
  CHECK(forms.size() == 3);
  forms = interpolate_forms(enumerate_locus(module({9}), 3), 4);
  CHECK(forms.empty());
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == std::vector<unsigned>{2, 0, 0});
}

TEST_CASE("template check") {
  auto t = template_check(quartic(), 3);
  CHECK(t.ok());
  CHECK(t.n == 1);
  REQUIRE(t.ftilde);
  CHECK(t.ftilde->is_zero());
  CHECK_FALSE(template_check(from_terms(3, 3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}), 3).matches);
  CHECK_FALSE(template_check(from_terms(3, 3, {{{3, 3, 3}, 1}}), 3).matches);
  // p = 5, n = 1: the five degree-16 hatted monomials.
  MultiPoly f5(5, 5);
  for (unsigned i = 0; i < 5; ++i) {
    std::vector<unsigned> e(5, 4);
    e[i] = 0;
    f5.add_term(e, 1);
  }
  t = template_check(f5, 5);
  CHECK(t.ok());
  CHECK(t.n == 1);
  // n = 2 at p = 3, where ftilde has degree 2.
  const MultiPoly n2 = from_terms(3, 3, {{{4, 4, 0}, 1}, {{0, 4, 4}, 1}, {{4, 0, 4}, 1}});
  t = template_check(n2, 3);
  CHECK(t.ok());
  CHECK(t.n == 2);
  const MultiPoly g = n2.scaled(2) + from_terms(3, 3, {{{4, 2, 2}, 1}});
  t = template_check(g, 3);
  CHECK(t.ok());
  CHECK(t.n == 2);
  REQUIRE(t.ftilde);
  CHECK(*t.ftilde == from_terms(3, 3, {{{2, 0, 0}, 2}}));
  // Unequal hatted coefficients.
  CHECK_FALSE(template_check(from_terms(3, 3, {{{2, 2, 0}, 1}, {{0, 2, 2}, 2}, {{2, 0, 2}, 1}}), 3).matches);
}

TEST_CASE("enumeration limits") {
  try {
    enumerate_locus(module({9}), 7);
    FAIL("expected TooManyPoints");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::TooManyPoints);
  }
}
