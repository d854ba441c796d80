#pragma once

#include <frontcalc/rational.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace frontcalc {

using SparseRow = std::map<std::size_t, Rational>;

/// Incrementally built row-echelon basis over the rationals.
class EchelonBasis {
 public:
  /// Reduces `row` against the basis; keeps it if it is independent.
  /// Returns true when the rank grew.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  // pivot column -> row whose leading entry sits in that column (== 1)
  std::map<std::size_t, SparseRow> pivots_;
};

std::size_t rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace frontcalc
