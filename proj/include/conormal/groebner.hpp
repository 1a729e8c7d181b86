#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conormal/polynomial.hpp"

namespace conormal {

/// Ideal given by generators; zero generators are dropped and an ideal with
/// no generators left is rejected.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Polynomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_homogeneous() const noexcept;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct BuchbergerOptions {
  std::uint64_t step_budget = 10'000'000;
};

/// Reduced, monic Groebner basis sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  MonomialOrder order() const noexcept { return ring_->order(); }
  std::span<const Polynomial> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_homogeneous() const noexcept;
  bool is_unit_ideal() const noexcept;
  std::vector<Monomial> leading_monomials() const;
  Ideal ideal() const { return Ideal(ring_, elements_); }
  /// Reduction steps spent building this basis.
  std::uint64_t steps() const noexcept { return steps_; }

  /// Wraps elements already known to form a reduced Groebner basis; the
  /// claim is verified (throws Error otherwise).
  static GroebnerBasis from_reduced(RingPtr ring, std::vector<Polynomial> elements);

 private:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, std::uint64_t steps);

  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::uint64_t steps_ = 0;

  friend GroebnerBasis buchberger(const Ideal&, MonomialOrder, BuchbergerOptions);
};

/// Buchberger with the normal selection strategy and Gebauer-Moeller pair
/// elimination. Throws BudgetExceeded when the step budget runs out.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, BuchbergerOptions options = {});
GroebnerBasis buchberger(const Ideal& ideal, BuchbergerOptions options = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const Polynomial& f);
/// Every generator of `ideal` lies in the ideal of `gb`.
bool contains(const GroebnerBasis& gb, const Ideal& ideal);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Generators g_i g_j for i <= j, duplicates (up to scalars) removed.
Ideal ideal_square(const Ideal& a);

/// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& gb);
/// Monomials outside the leading-term ideal, by increasing degree and,
/// within a degree, increasing order. Throws NotZeroDimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Post-hoc check that every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Minimal homogeneous generating set, found degree by degree with linear
/// algebra. Precondition: homogeneous ideal.
std::vector<Polynomial> minimal_generators(const Ideal& ideal);

/// Generators kept in input order, skipping each one already in the ideal of
/// those kept before it. Works for inhomogeneous ideals; not minimal in general.
std::vector<Polynomial> irredundant_generators(const Ideal& ideal, MonomialOrder order,
                                               BuchbergerOptions options = {});

/// All monomials of the given degree in `num_vars` variables, increasing in `order`.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree, MonomialOrder order);

/// "order <name>" followed by one polynomial per line.
std::string write_basis(const GroebnerBasis& gb);
GroebnerBasis read_basis(const RingPtr& ring, std::string_view text);

}  // namespace conormal
