#include "conormal/linalg.hpp"

#include <algorithm>

#include "conormal/error.hpp"

namespace conormal {

EchelonSpace::EchelonSpace(const PrimeField& field, std::size_t dim, std::optional<std::size_t> pivot_limit)
    : field_(&field), dim_(dim), limit_(pivot_limit.value_or(dim)) {
  if (limit_ > dim_) throw Error("pivot limit exceeds dimension");
}

Vector EchelonSpace::reduce(Vector v) const {
  if (v.size() != dim_) throw Error("vector length mismatch");
  const auto& F = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Coeff c = v[pivots_[r]];
    if (!c) continue;
    const auto& row = rows_[r];
    Coeff neg = F.neg(c);
    for (std::size_t k = pivots_[r]; k < dim_; ++k)
      if (row[k]) v[k] = F.add(v[k], F.mul(neg, row[k]));
  }
  return v;
}

bool EchelonSpace::contains(const Vector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(limit_), [](Coeff c) { return c == 0; });
}

bool EchelonSpace::insert(Vector v) {
  v = reduce(std::move(v));
  const auto& F = *field_;
  std::size_t piv = 0;
  while (piv < limit_ && v[piv] == 0) ++piv;
  if (piv == limit_) return false;
  Coeff inv = F.inv(v[piv]);
  for (std::size_t k = piv; k < dim_; ++k) v[k] = F.mul(v[k], inv);
  // clear the new pivot column from the existing rows
  for (auto& row : rows_) {
    Coeff c = row[piv];
    if (!c) continue;
    Coeff neg = F.neg(c);
    for (std::size_t k = piv; k < dim_; ++k)
      if (v[k]) row[k] = F.add(row[k], F.mul(neg, v[k]));
  }
  // keep rows ordered by pivot so reduce() only touches columns >= pivot
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, std::vector<Vector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Coeff inv = F.inv(m[r][col]);
    for (std::size_t k = col; k < cols; ++k) m[r][k] = F.mul(m[r][k], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      Coeff neg = F.neg(m[i][col]);
      for (std::size_t k = col; k < cols; ++k)
        if (m[r][k]) m[i][k] = F.add(m[i][k], F.mul(neg, m[r][k]));
    }
    pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

std::vector<Vector> nullspace(const PrimeField& field, std::span<const Vector> rows, std::size_t cols) {
  std::vector<Vector> m(rows.begin(), rows.end());
  for (const auto& row : m)
    if (row.size() != cols) throw Error("matrix row length mismatch");
  auto pivots = rref(field, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const PrimeField& field, std::span<const Vector> rows, std::size_t cols) {
  std::vector<Vector> m(rows.begin(), rows.end());
  return rref(field, m, cols).size();
}

}  // namespace conormal
