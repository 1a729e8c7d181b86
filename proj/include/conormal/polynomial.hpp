#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conormal/field.hpp"
#include "conormal/monomial.hpp"

namespace conormal {

/// Polynomial ring GF(p)[names...] with a fixed monomial order.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  MonomialOrder order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::degrevlex);
RingPtr with_order(const RingPtr& ring, MonomialOrder order);
/// {prefix0, prefix1, ...}
std::vector<std::string> indexed_names(std::string_view prefix, std::size_t count);
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

struct Term {
  Coeff coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

inline constexpr int kZeroDegree = INT_MIN;

/// Sparse polynomial; terms are nonzero and strictly decreasing in the ring's order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges duplicates and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  /// Precondition: terms already canonical (nonzero, strictly decreasing).
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Coeff c, const Monomial& m);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; kZeroDegree for the zero polynomial.
  int degree() const noexcept;
  /// Smallest total degree among the terms; kZeroDegree for zero.
  int low_degree() const noexcept;
  bool is_homogeneous() const noexcept;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  Coeff lead_coeff() const { return terms_.front().coeff; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(Coeff c) const;
  /// c * m * this
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  Polynomial monic() const;
  /// Homogeneous component of the given degree.
  Polynomial component(int degree) const;

  /// Same polynomial viewed in a ring with identical variables and field
  /// but possibly a different order.
  Polynomial in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Grammar: sums of products such as `3*x^2*y - y + 7`; integer
/// coefficients are reduced mod p; whitespace is insignificant.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1);

/// Image of f under the ring map sending each source variable (by name)
/// to the given polynomial of `target`. Throws if a variable occurring in
/// f has no image.
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::map<std::string, Polynomial>& assignment);

/// Deterministic nonzero linear form with coefficients drawn from the seed.
Polynomial random_linear_form(const RingPtr& ring, std::uint64_t seed);

}  // namespace conormal
