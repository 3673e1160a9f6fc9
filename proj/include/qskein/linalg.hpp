// Exact linear algebra: dense Gauss-Jordan over Q(v) and a sparse
// fraction-free echelon form over Z[v^{+-1}].
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qskein/scalar.hpp"

namespace qskein {

using RMatrix = std::vector<std::vector<Rational>>;

std::optional<RMatrix> invert(RMatrix m);
std::size_t dense_rank(RMatrix m);
// basis of {x : m x = 0}
std::vector<std::vector<Rational>> nullspace(RMatrix m);

using SparseRow = std::map<int, Laurent>;

// divides a row by the gcd of its entries and makes the leading entry's
// top coefficient positive
void strip_content(SparseRow& row);

// Rows are kept with distinct leading (largest) columns.
class Echelon {
 public:
  // reduces the row against the stored pivots; returns true and stores it if
  // it is independent
  bool insert(SparseRow row);
  // reduced form of a row against the pivots (zero iff in the span)
  SparseRow reduce(SparseRow row) const;
  bool in_span(const SparseRow& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int col) const { return rows_.count(col) != 0; }
  const std::map<int, SparseRow>& rows() const { return rows_; }

 private:
  std::map<int, SparseRow> rows_;  // keyed by leading column
};

}  // namespace qskein
