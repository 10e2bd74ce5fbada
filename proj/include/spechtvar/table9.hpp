#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spechtvar/multipoly.hpp"
#include "spechtvar/partitions.hpp"
#include "spechtvar/variety.hpp"

namespace spechtvar {

/// Published variety class of one conjugate pair of partitions of 9 at p = 3.
struct Table9Reference {
  Partition mu;
  VarietyKind kind;
  int dim;
};

/// The sixteen classes in published order.
const std::vector<Table9Reference>& table9_reference();

struct Table9Row {
  Partition mu;
  Partition conjugate;
  VarietyKind expected = VarietyKind::Other;
  int expected_dim = 0;
  VarietyClass observed;
  bool stable = false;
  DimensionEstimate estimate;
  std::size_t locus_points = 0;
  std::size_t total_points = 0;
  bool conjugated = false;
  bool agrees = false;
};

/// Classifies every class over GF(27), checked against GF(9), with dimensions
/// estimated from GF(3), GF(9) and GF(27) point counts.
std::vector<Table9Row> compute_table9(unsigned threads = 1);

/// Class name as printed, with the form for hypersurfaces.
std::string class_label(const VarietyClass& cls);

/// Header plus one line per row: mu, conjugate, class, est_dim, agrees.
std::string table9_tsv(const std::vector<Table9Row>& rows);

}  // namespace spechtvar
