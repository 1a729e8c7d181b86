#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "conormal/field.hpp"

namespace conormal {

using Vector = std::vector<Coeff>;

/// Row space kept in fully reduced echelon form. Pivots are only chosen
/// among the first `pivot_limit` coordinates; trailing coordinates ride
/// along as bookkeeping (e.g. to record which combination produced a row).
class EchelonSpace {
 public:
  EchelonSpace(const PrimeField& field, std::size_t dim, std::optional<std::size_t> pivot_limit = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces v against the rows; the pivot coordinates of the result are zero.
  Vector reduce(Vector v) const;
  /// True iff the pivot part of v lies in the span.
  bool contains(const Vector& v) const;
  /// Adds v; returns false (and leaves the space unchanged) if v is dependent.
  bool insert(Vector v);

  std::span<const Vector> rows() const noexcept { return rows_; }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

 private:
  const PrimeField* field_;
  std::size_t dim_;
  std::size_t limit_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of { v : A v = 0 } for a rows x cols matrix given row by row.
std::vector<Vector> nullspace(const PrimeField& field, std::span<const Vector> rows, std::size_t cols);

std::size_t rank(const PrimeField& field, std::span<const Vector> rows, std::size_t cols);

}  // namespace conormal
