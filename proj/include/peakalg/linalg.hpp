#pragma once

#include <optional>
#include <vector>

#include "peakalg/rational.hpp"

namespace peakalg {

/* Exact Gaussian elimination over the rationals for the small dense
 * systems that arise here (dimension <= 2^{n-1} with n <= 12 or so).
 * Rows are given once; solve() then expresses targets as exact linear
 * combinations or reports that none exists. */
class ExactSolver {
 public:
  explicit ExactSolver(std::vector<std::vector<Rational>> rows);

  int rank() const { return rank_; }
  size_t dim() const { return dim_; }

  /* Coordinates c with sum_i c_i * rows[i] = target, if target lies in
   * the row span. */
  std::optional<std::vector<Rational>> solve(
      const std::vector<Rational>& target) const;

 private:
  size_t dim_ = 0;
  int rank_ = 0;
  /* echelon rows paired with their expression in the original rows */
  std::vector<std::vector<Rational>> echelon_;
  std::vector<std::vector<Rational>> combo_;
  std::vector<int> pivot_col_;
};

/* Exact inverse of a square matrix; throws std::invalid_argument if
 * singular or not square. */
std::vector<std::vector<Rational>> invert_matrix(
    const std::vector<std::vector<Rational>>& m);

}  // namespace peakalg
