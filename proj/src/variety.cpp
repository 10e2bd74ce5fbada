#include "spechtvar/variety.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "spechtvar/error.hpp"
#include "spechtvar/matrix.hpp"
#include "spechtvar/parallel.hpp"

namespace spechtvar {

std::uint64_t projective_count(std::uint64_t q, unsigned n) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (unsigned i = 0; i < n; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::vector<Point> projective_points(const ff::Field& field, unsigned n) {
  const std::uint64_t count = projective_count(field.order(), n);
  if (count > kMaxProjectivePoints) {
    throw Error(ErrorCode::TooManyPoints, std::to_string(count) + " projective points exceed the limit of 10^6");
  }
  std::vector<Point> out;
  out.reserve(count);
  const ff::Elem q = field.order();
  // More leading zeros sort first; tails run as base-q counters.
  for (unsigned lead = n; lead-- > 0;) {
    Point point(n, 0);
    point[lead] = 1;
    while (true) {
      out.push_back(point);
      unsigned i = n;
      while (i > lead + 1 && ++point[i - 1] == q) point[--i] = 0;
      if (i == lead + 1) break;
    }
  }
  return out;
}

Point normalize(const ff::Field& field, Point point) {
  const auto lead = std::find_if(point.begin(), point.end(), [](ff::Elem a) { return a != 0; });
  if (lead == point.end()) throw Error(ErrorCode::ZeroPoint, "cannot normalise the zero vector");
  const ff::Elem inv = field.inv(*lead);
  for (auto& a : point) a = field.mul(a, inv);
  return point;
}

std::uint64_t LocusSample::affine_count() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  return 1 + (q - 1) * points.size();
}

namespace {

bool contains(const std::vector<Point>& sorted, const Point& point) {
  return std::binary_search(sorted.begin(), sorted.end(), point);
}

bool is_square_blocks(const Partition& mu, unsigned p) {
  return mu.length() == p && std::all_of(mu.parts().begin(), mu.parts().end(), [&](int part) { return part == static_cast<int>(p); });
}

void check_closure(const RestrictedActions& acts, const ff::Field& field, const std::vector<Point>& locus) {
  for (const auto& point : locus) {
    for (std::size_t i = 0; i + 1 < point.size(); ++i) {
      Point swapped = point;
      std::swap(swapped[i], swapped[i + 1]);
      if (!contains(locus, normalize(field, swapped))) {
        throw Error(ErrorCode::InvariantViolated, "locus not closed under permuting coordinates");
      }
    }
  }
  if (!is_square_blocks(acts.mu, acts.p)) return;
  for (const auto& point : locus) {
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (ff::Elem c = 2; c < acts.p; ++c) {
        Point scaled = point;
        scaled[i] = field.mul(scaled[i], c);
        if (!contains(locus, normalize(field, scaled))) {
          throw Error(ErrorCode::InvariantViolated, "locus not closed under scaling a coordinate");
        }
      }
    }
  }
}

}  // namespace

LocusSample enumerate_locus(const RestrictedActions& acts, unsigned k, unsigned threads) {
  const ff::Field field(acts.p, k);
  const auto points = projective_points(field, acts.n);
  std::vector<char> non_free(points.size(), 0);
  parallel_for(points.size(), threads, [&](std::size_t i) { non_free[i] = !is_free_at(acts, field, points[i]).free; });

  LocusSample sample;
  sample.mu = acts.mu;
  sample.p = acts.p;
  sample.n = acts.n;
  sample.k = k;
  sample.conjugated = acts.conjugated;
  sample.total_projective = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (non_free[i]) sample.points.push_back(points[i]);
  }
  check_closure(acts, field, sample.points);
  return sample;
}

std::vector<PointRecord> sweep_points(const RestrictedActions& acts, unsigned k, unsigned threads) {
  const ff::Field field(acts.p, k);
  const auto points = projective_points(field, acts.n);
  std::vector<PointRecord> out(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    out[i].point = points[i];
    out[i].ranks = rank_vector_at(acts, field, points[i]);
    out[i].free = acts.dim % acts.p == 0 && out[i].ranks.r[acts.p - 1] == acts.dim / acts.p;
  });
  return out;
}

std::string_view to_string(VarietyKind kind) {
  switch (kind) {
    case VarietyKind::Zero: return "zero";
    case VarietyKind::AxesUnion: return "axes-union";
    case VarietyKind::Hypersurface: return "hypersurface";
    case VarietyKind::Full: return "full";
    case VarietyKind::Other: return "other";
  }
  return "other";
}

bool cuts_out(const ff::MultiPoly& f, const LocusSample& sample) {
  const ff::Field field(sample.p, sample.k);
  for (const auto& point : projective_points(field, sample.n)) {
    if ((ff::poly_eval(field, f, point) == 0) != contains(sample.points, point)) return false;
  }
  return true;
}

VarietyClass classify(const LocusSample& sample) {
  VarietyClass out;
  const auto n = static_cast<int>(sample.n);
  if (sample.points.empty()) {
    out.kind = VarietyKind::Zero;
    out.est_dim = 0;
    return out;
  }
  if (sample.points.size() == sample.total_projective) {
    out.kind = VarietyKind::Full;
    out.est_dim = n;
    return out;
  }
  const bool axes = sample.points.size() == sample.n && std::all_of(sample.points.begin(), sample.points.end(), [](const Point& pt) {
    return std::count_if(pt.begin(), pt.end(), [](ff::Elem a) { return a != 0; }) == 1;
  });
  if (axes) {
    out.kind = VarietyKind::AxesUnion;
    out.est_dim = 1;
    return out;
  }
  const unsigned max_degree = 2 * (sample.p - 1) * (sample.p - 1);
  for (unsigned degree = 1; degree <= max_degree; ++degree) {
    const auto forms = interpolate_forms(sample, degree);
    if (forms.empty()) continue;
    if (forms.size() == 1 && cuts_out(forms.front(), sample)) {
      out.kind = VarietyKind::Hypersurface;
      out.form = forms.front();
      out.est_dim = n - 1;
      return out;
    }
    break;
  }
  out.kind = VarietyKind::Other;
  const double q = std::pow(static_cast<double>(sample.p), sample.k);
  out.est_dim = static_cast<int>(std::lround(std::log(static_cast<double>(sample.affine_count())) / std::log(q)));
  return out;
}

StableClass classify_stable(const RestrictedActions& acts, unsigned k, unsigned threads) {
  if (k < 2) throw Error(ErrorCode::PreconditionViolated, "stability needs an extension degree of at least 2");
  StableClass out;
  out.sample = enumerate_locus(acts, k, threads);
  out.previous = enumerate_locus(acts, k - 1, threads);
  out.cls = classify(out.sample);
  if (out.cls.kind == VarietyKind::Hypersurface) {
    out.stable = cuts_out(*out.cls.form, out.previous);
  } else {
    out.stable = classify(out.previous).kind == out.cls.kind;
  }
  return out;
}

DimensionEstimate estimate_dimension_from_counts(unsigned p, unsigned n, std::uint64_t module_dim,
                                                 const std::vector<unsigned>& ks,
                                                 const std::vector<std::uint64_t>& affine_counts) {
  if (ks.size() < 2 || ks.size() != affine_counts.size()) {
    throw Error(ErrorCode::PreconditionViolated, "dimension estimate needs counts at two or more extension degrees");
  }
  DimensionEstimate out;
  out.ks = ks;
  out.affine_counts = affine_counts;
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    x.push_back(ks[i] * std::log(static_cast<double>(p)));
    y.push_back(std::log(static_cast<double>(affine_counts[i])));
  }
  for (std::size_t i = 1; i < ks.size(); ++i) out.pair_slopes.push_back((y[i] - y[i - 1]) / (x[i] - x[i - 1]));

  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  out.fitted_slope = sxy / sxx;
  out.dim = static_cast<int>(std::lround(out.fitted_slope));
  if (std::lround(out.pair_slopes.back()) != out.dim) {
    throw Error(ErrorCode::InconsistentCounts, "fitted slope " + std::to_string(out.fitted_slope) +
                                                   " disagrees with the finest pair slope " + std::to_string(out.pair_slopes.back()));
  }
  out.divides = out.dim >= 0 && variety_dimension_divides(module_dim, p, n, static_cast<unsigned>(out.dim));
  return out;
}

DimensionEstimate estimate_dimension(const RestrictedActions& acts, const std::vector<unsigned>& ks, unsigned threads) {
  std::vector<std::uint64_t> counts;
  for (unsigned k : ks) counts.push_back(enumerate_locus(acts, k, threads).affine_count());
  return estimate_dimension_from_counts(acts.p, acts.n, acts.dim, ks, counts);
}

DimensionEstimate estimate_dimension(const Partition& mu, unsigned p, unsigned n, const std::vector<unsigned>& ks,
                                     unsigned threads) {
  return estimate_dimension(restricted_actions(mu, n, p, true), ks, threads);
}

std::vector<std::vector<unsigned>> monomials_of_degree(unsigned n, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> exps(n, 0);
  std::function<void(unsigned, unsigned)> fill = [&](unsigned var, unsigned left) {
    if (var + 1 == n) {
      exps[var] = left;
      out.push_back(exps);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[var] = e;
      fill(var + 1, left - e);
    }
  };
  if (n > 0) fill(0, degree);
  return out;
}

std::vector<ff::MultiPoly> interpolate_forms(const LocusSample& sample, unsigned degree) {
  const ff::Field big(sample.p, sample.k);
  const ff::Field base(sample.p);
  const auto monos = monomials_of_degree(sample.n, degree);

  // Each point gives one equation per coordinate of GF(p^k) over GF(p).
  ff::Matrix system(sample.points.size() * sample.k, monos.size());
  for (std::size_t i = 0; i < sample.points.size(); ++i) {
    const auto& point = sample.points[i];
    for (std::size_t m = 0; m < monos.size(); ++m) {
      ff::Elem value = 1;
      for (std::size_t v = 0; v < point.size(); ++v) value = big.mul(value, big.pow(point[v], monos[m][v]));
      const auto digits = big.coeffs(value);
      for (unsigned j = 0; j < sample.k; ++j) system(i * sample.k + j, m) = j < digits.size() ? digits[j] : 0;
    }
  }
  ff::Matrix basis = ff::nullspace(base, system);
  const auto pivots = ff::reduce_row_echelon(base, basis);

  std::vector<ff::MultiPoly> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    ff::MultiPoly f(sample.n, sample.p);
    for (std::size_t m = 0; m < monos.size(); ++m) {
      if (basis(r, m) != 0) f.add_term(monos[m], basis(r, m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

TemplateResult template_check(const ff::MultiPoly& f, unsigned p) {
  TemplateResult out;
  if (f.is_zero() || f.nvars() != p || f.characteristic() != p || !f.is_homogeneous()) return out;
  const auto degree = static_cast<unsigned>(f.total_degree());
  out.degree_divisible = degree % ((p - 1) * (p - 1)) == 0;
  if (p < 2 || degree % (p - 1) != 0) return out;
  const unsigned e = degree / (p - 1);
  if (e == 0 || e % (p - 1) != 0) return out;

  std::vector<std::vector<unsigned>> hatted;
  for (unsigned i = 0; i < p; ++i) {
    std::vector<unsigned> exps(p, e);
    exps[i] = 0;
    hatted.push_back(std::move(exps));
  }
  const unsigned c = f.coefficient(hatted.front());
  if (c == 0) return out;
  for (const auto& h : hatted) {
    if (f.coefficient(h) != c) return out;
  }

  const ff::Field field(p);
  ff::MultiPoly sum(p, p);
  for (const auto& h : hatted) sum.add_term(h, 1);
  const ff::MultiPoly rest = f.scaled(field.inv(c)) - sum;
  for (const auto& term : rest.terms()) {
    const auto exps = rest.exponents(term.mono);
    if (std::any_of(exps.begin(), exps.end(), [&](unsigned x) { return x < p - 1; })) return out;
  }
  ff::MultiPoly corner(p, p);
  corner.add_term(std::vector<unsigned>(p, p - 1), 1);
  out.ftilde = ff::exact_divide(rest, corner);
  out.n = static_cast<int>(e / (p - 1));
  out.matches = true;
  return out;
}

}  // namespace spechtvar
