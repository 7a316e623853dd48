#include "wcw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcw {

void RationalMatrix::add_row(RationalVector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("row of length " + std::to_string(row.size()) + " in a matrix with " +
                                std::to_string(cols_) + " columns");
  }
  rows_.push_back(std::move(row));
}

void RowEchelon::reduce(RationalVector& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = row[pivots_[r]];
    if (factor == 0) continue;
    const auto& basis_row = rows_[r];
    for (std::size_t c = 0; c < cols_; ++c) {
      if (basis_row[c] != 0) row[c] -= factor * basis_row[c];
    }
  }
}

bool RowEchelon::add(RationalVector row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  reduce(row);
  auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
  if (lead == row.end()) return false;
  const auto pivot = static_cast<std::size_t>(lead - row.begin());
  const Rational scale = row[pivot];
  for (auto& x : row) x /= scale;
  for (auto& existing : rows_) {
    const Rational factor = existing[pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0) existing[c] -= factor * row[c];
    }
  }
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto index = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + index, std::move(row));
  return true;
}

bool RowEchelon::in_span(RationalVector row) const {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; });
}

WeightSpace WeightSpace::spanned_by(std::size_t ambient, const std::vector<RationalVector>& vectors) {
  WeightSpace space(ambient);
  for (const auto& v : vectors) space.echelon_.add(v);
  return space;
}

bool WeightSpace::contains(const RationalVector& v) const { return echelon_.in_span(v); }

WeightSpace nullspace(const RationalMatrix& m) {
  RowEchelon reduced(m.cols());
  for (const auto& row : m.rows()) reduced.add(row);
  return nullspace(reduced);
}

WeightSpace nullspace(const RowEchelon& reduced) {
  const std::size_t n = reduced.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : reduced.pivots()) is_pivot[p] = true;

  // One solution per free column: set it to 1, other free columns to 0,
  // and solve each pivot variable from its row.
  std::vector<RationalVector> solutions;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.rank(); ++r) {
      v[reduced.pivots()[r]] = -reduced.rows()[r][free];
    }
    solutions.push_back(std::move(v));
  }
  return WeightSpace::spanned_by(n, solutions);
}

std::string serialize_space(const WeightSpace& space) {
  std::string out = "dim " + std::to_string(space.dim()) + " " + std::to_string(space.ambient()) + "\n";
  for (const auto& row : space.basis()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      out += format_rational(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace wcw
