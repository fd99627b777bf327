#include "peakalg/linalg.hpp"

#include <stdexcept>

namespace peakalg {

ExactSolver::ExactSolver(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return;
  dim_ = rows[0].size();
  const size_t count = rows.size();
  for (size_t i = 0; i < count; ++i) {
    if (rows[i].size() != dim_)
      throw std::invalid_argument("solver rows of unequal length");
    std::vector<Rational> combo(count);
    combo[i] = 1;
    std::vector<Rational> row = std::move(rows[i]);
    /* reduce against existing echelon rows */
    for (size_t j = 0; j < echelon_.size(); ++j) {
      const Rational& lead = row[static_cast<size_t>(pivot_col_[j])];
      if (lead == 0) continue;
      Rational f = lead;  // echelon rows are pivot-normalized
      for (size_t k = 0; k < dim_; ++k)
        if (echelon_[j][k] != 0) row[k] -= f * echelon_[j][k];
      for (size_t k = 0; k < count; ++k)
        if (combo_[j][k] != 0) combo[k] -= f * combo_[j][k];
    }
    size_t piv = dim_;
    for (size_t k = 0; k < dim_; ++k)
      if (row[k] != 0) {
        piv = k;
        break;
      }
    if (piv == dim_) continue;  // dependent row
    const Rational inv = 1 / row[piv];
    for (auto& x : row) x *= inv;
    for (auto& x : combo) x *= inv;
    echelon_.push_back(std::move(row));
    combo_.push_back(std::move(combo));
    pivot_col_.push_back(static_cast<int>(piv));
    ++rank_;
  }
}

std::optional<std::vector<Rational>> ExactSolver::solve(
    const std::vector<Rational>& target) const {
  if (target.size() != dim_)
    throw std::invalid_argument("solve target of wrong dimension");
  std::vector<Rational> rem = target;
  std::vector<Rational> coords(combo_.empty() ? 0 : combo_[0].size());
  for (size_t j = 0; j < echelon_.size(); ++j) {
    const Rational f = rem[static_cast<size_t>(pivot_col_[j])];
    if (f == 0) continue;
    for (size_t k = 0; k < dim_; ++k)
      if (echelon_[j][k] != 0) rem[k] -= f * echelon_[j][k];
    for (size_t k = 0; k < coords.size(); ++k)
      if (combo_[j][k] != 0) coords[k] += f * combo_[j][k];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  if (coords.empty() ) {
    for (const auto& x : target)
      if (x != 0) return std::nullopt;
  }
  return coords;
}

std::vector<std::vector<Rational>> invert_matrix(
    const std::vector<std::vector<Rational>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix not square");
  /* Gauss-Jordan on [m | I] */
  std::vector<std::vector<Rational>> a = m;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = 1 / a[col][col];
    for (size_t k = 0; k < n; ++k) {
      a[col][k] *= d;
      inv[col][k] *= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace peakalg
