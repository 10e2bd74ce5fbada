#include "spechtvar/table9.hpp"

#include <sstream>

namespace spechtvar {

const std::vector<Table9Reference>& table9_reference() {
  using K = VarietyKind;
  static const std::vector<Table9Reference> rows = {
      {Partition({9}), K::Full, 3},          {Partition({8, 1}), K::Full, 3},
      {Partition({7, 2}), K::AxesUnion, 1},  {Partition({6, 3}), K::Full, 3},
      {Partition({5, 4}), K::Full, 3},       {Partition({7, 1, 1}), K::Full, 3},
      {Partition({6, 2, 1}), K::Full, 3},    {Partition({5, 3, 1}), K::Zero, 0},
      {Partition({4, 4, 1}), K::Full, 3},    {Partition({5, 2, 2}), K::Full, 3},
      {Partition({4, 3, 2}), K::Full, 3},    {Partition({5, 2, 1, 1}), K::AxesUnion, 1},
      {Partition({4, 3, 1, 1}), K::AxesUnion, 1}, {Partition({3, 3, 3}), K::Hypersurface, 2},
      {Partition({6, 1, 1, 1}), K::Full, 3}, {Partition({5, 1, 1, 1, 1}), K::Full, 3},
  };
  return rows;
}

std::vector<Table9Row> compute_table9(unsigned threads) {
  std::vector<Table9Row> out;
  for (const auto& ref : table9_reference()) {
    const RestrictedActions acts = restricted_actions(ref.mu, 3, 3, true);
    const StableClass sc = classify_stable(acts, 3, threads);
    const LocusSample coarse = enumerate_locus(acts, 1, threads);

    Table9Row row;
    row.mu = ref.mu;
    row.conjugate = conjugate(ref.mu);
    row.expected = ref.kind;
    row.expected_dim = ref.dim;
    row.observed = sc.cls;
    row.stable = sc.stable;
    row.conjugated = acts.conjugated;
    row.locus_points = sc.sample.points.size();
    row.total_points = sc.sample.total_projective;
    row.estimate = estimate_dimension_from_counts(3, 3, acts.dim, {1, 2, 3},
                                                  {coarse.affine_count(), sc.previous.affine_count(), sc.sample.affine_count()});
    row.agrees = row.stable && row.observed.kind == ref.kind && row.estimate.dim == ref.dim && row.observed.est_dim == ref.dim;
    out.push_back(std::move(row));
  }
  return out;
}

std::string class_label(const VarietyClass& cls) {
  std::string label(to_string(cls.kind));
  if (cls.form) label += "(" + cls.form->to_string() + ")";
  return label;
}

std::string table9_tsv(const std::vector<Table9Row>& rows) {
  std::ostringstream os;
  os << "mu\tconjugate\tclass\test_dim\tagrees_with_published\n";
  for (const auto& row : rows) {
    os << row.mu.to_string() << '\t' << row.conjugate.to_string() << '\t' << class_label(row.observed) << '\t'
       << row.estimate.dim << '\t' << (row.agrees ? "yes" : "no") << '\n';
  }
  return os.str();
}

}  // namespace spechtvar
