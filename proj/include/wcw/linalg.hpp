#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wcw/rational.hpp"

namespace wcw {

using RationalVector = std::vector<Rational>;

/// Constraint rows over a fixed number of columns.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t cols) : cols_(cols) {}

  void add_row(RationalVector row);

  std::size_t cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<RationalVector>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<RationalVector> rows_;
};

/// Reduced row-echelon form maintained under row insertion.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Adds a row; returns true when the rank grew.
  bool add(RationalVector row);
  bool in_span(RationalVector row) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Rows ordered by pivot column; every pivot is 1 and is the only nonzero
  /// entry in its column.
  const std::vector<RationalVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  /// Subtracts multiples of the stored rows; what is left is zero in every
  /// pivot column.
  void reduce(RationalVector& row) const;

  std::size_t cols_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/**
 * Subspace of ℚ^n with a canonical basis: the nonzero rows of the reduced
 * row-echelon form of any spanning set. Two spaces are equal exactly when
 * their canonical bases are equal.
 */
class WeightSpace {
 public:
  explicit WeightSpace(std::size_t ambient) : echelon_(ambient) {}

  static WeightSpace spanned_by(std::size_t ambient, const std::vector<RationalVector>& vectors);

  std::size_t ambient() const { return echelon_.cols(); }
  std::size_t dim() const { return echelon_.rank(); }
  const std::vector<RationalVector>& basis() const { return echelon_.rows(); }

  bool contains(const RationalVector& v) const;

  friend bool operator==(const WeightSpace& a, const WeightSpace& b) {
    return a.ambient() == b.ambient() && a.basis() == b.basis();
  }

 private:
  RowEchelon echelon_;
};

/// {w : M·w = 0}; dim = cols − rank(M).
WeightSpace nullspace(const RationalMatrix& m);
WeightSpace nullspace(const RowEchelon& reduced);

/// "dim d n" followed by d lines of n space-separated rationals.
std::string serialize_space(const WeightSpace& space);

}  // namespace wcw
