#include <frontcalc/linear_algebra.hpp>

namespace frontcalc {

bool EchelonBasis::insert(SparseRow row) {
  for (;;) {
    while (!row.empty() && row.begin()->second == 0) row.erase(row.begin());
    if (row.empty()) return false;
    auto pivot = pivots_.find(row.begin()->first);
    if (pivot == pivots_.end()) break;
    const Rational factor = row.begin()->second;
    for (const auto& [c, v] : pivot->second) {
      Rational& slot = row[c];
      slot -= factor * v;
      if (slot == 0) row.erase(c);
    }
  }
  const Rational lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  const std::size_t col = row.begin()->first;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::size_t rank(const std::vector<std::vector<Rational>>& rows) {
  EchelonBasis basis;
  for (const auto& r : rows) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) s.emplace(c, r[c]);
    }
    basis.insert(std::move(s));
  }
  return basis.rank();
}

}  // namespace frontcalc
