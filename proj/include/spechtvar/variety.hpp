#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "spechtvar/field.hpp"
#include "spechtvar/jordan.hpp"
#include "spechtvar/multipoly.hpp"
#include "spechtvar/spechtmod.hpp"

namespace spechtvar {

using Point = std::vector<ff::Elem>;

/// (q^n - 1) / (q - 1).
std::uint64_t projective_count(std::uint64_t q, unsigned n);

/// One representative per projective point of GF(q)^n, first nonzero
/// coordinate equal to one, in lexicographic order.
std::vector<Point> projective_points(const ff::Field& field, unsigned n);

/// Scales a nonzero point so its first nonzero coordinate is one.
Point normalize(const ff::Field& field, Point point);

/// Non-free projective points of a restricted module over GF(p^k).
struct LocusSample {
  Partition mu;
  unsigned p = 0;
  unsigned n = 0;
  unsigned k = 0;
  bool conjugated = false;
  std::vector<Point> points;  // sorted
  std::uint64_t total_projective = 0;

  /// Non-free affine points including the origin: 1 + (q - 1) |points|.
  std::uint64_t affine_count() const;
};

struct PointRecord {
  Point point;
  bool free = false;
  RankVector ranks;
};

inline constexpr std::uint64_t kMaxProjectivePoints = 1'000'000;

/// Tests freeness at every projective point over GF(p^k). Throws
/// Error(TooManyPoints) above 10^6 points, and Error(InvariantViolated) when
/// the locus is not closed under permuting coordinates (or, for mu = (p^p),
/// under scaling single coordinates by GF(p)^x).
LocusSample enumerate_locus(const RestrictedActions& acts, unsigned k, unsigned threads = 1);

/// Full rank vectors at every projective point, same order as projective_points.
std::vector<PointRecord> sweep_points(const RestrictedActions& acts, unsigned k, unsigned threads = 1);

enum class VarietyKind { Zero, AxesUnion, Hypersurface, Full, Other };

std::string_view to_string(VarietyKind kind);

struct VarietyClass {
  VarietyKind kind = VarietyKind::Other;
  /// Defining form for hypersurfaces.
  std::optional<ff::MultiPoly> form;
  int est_dim = 0;
};

/// Zero, full, axes-union (points with exactly one nonzero coordinate), or a
/// hypersurface when the forms of least degree vanishing on the locus span one
/// line and that form vanishes nowhere else. Degrees up to 2(p-1)^2 are tried.
VarietyClass classify(const LocusSample& sample);

/// f(P) = 0 exactly at the sample's points, over the sample's field.
bool cuts_out(const ff::MultiPoly& f, const LocusSample& sample);

struct StableClass {
  VarietyClass cls;
  LocusSample sample;
  LocusSample previous;
  /// Same class one extension degree lower. A hypersurface counts as stable
  /// when its form also cuts out the lower locus exactly; smaller fields can
  /// be too coarse for interpolation to recover the form on their own.
  bool stable = false;
};

/// classify at degree k, checked against degree k - 1 (k >= 2).
StableClass classify_stable(const RestrictedActions& acts, unsigned k, unsigned threads = 1);

struct DimensionEstimate {
  int dim = 0;
  std::vector<unsigned> ks;
  std::vector<std::uint64_t> affine_counts;
  /// Least-squares slope of log(count) against log(p^k).
  double fitted_slope = 0;
  /// Slopes between consecutive degrees.
  std::vector<double> pair_slopes;
  /// p^{n - dim} divides the module dimension.
  bool divides = false;
};

/// dim = round(fitted slope). The finest pair must round to the same value,
/// otherwise Error(InconsistentCounts): coarse fields are dominated by
/// lower-order terms of the point count and are only used through the fit.
DimensionEstimate estimate_dimension_from_counts(unsigned p, unsigned n, std::uint64_t module_dim,
                                                 const std::vector<unsigned>& ks,
                                                 const std::vector<std::uint64_t>& affine_counts);
DimensionEstimate estimate_dimension(const RestrictedActions& acts, const std::vector<unsigned>& ks,
                                     unsigned threads = 1);
DimensionEstimate estimate_dimension(const Partition& mu, unsigned p, unsigned n, const std::vector<unsigned>& ks,
                                     unsigned threads = 1);

/// Monomials of exact total degree `degree` in n variables, descending lex.
std::vector<std::vector<unsigned>> monomials_of_degree(unsigned n, unsigned degree);

/// Basis of the GF(p)-space of forms of the given degree vanishing at every
/// locus point, in reduced echelon form (leading coefficient one, leading
/// monomials strictly decreasing).
std::vector<ff::MultiPoly> interpolate_forms(const LocusSample& sample, unsigned degree);

struct TemplateResult {
  bool matches = false;
  /// deg f is divisible by (p-1)^2.
  bool degree_divisible = false;
  int n = 0;
  std::optional<ff::MultiPoly> ftilde;

  bool ok() const { return matches && degree_divisible; }
};

/// Whether f, after scaling, equals (x_1...x_p)^{p-1} g + sum_i prod_{j != i}
/// x_j^{n(p-1)} for some n >= 1 and some g.
TemplateResult template_check(const ff::MultiPoly& f, unsigned p);

}  // namespace spechtvar
