#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

namespace conormal {

inline constexpr std::size_t kMaxVars = 32;

enum class MonomialOrder { degrevlex, deglex, lex };

std::string_view to_string(MonomialOrder order) noexcept;
/// Throws Error for an unknown name.
MonomialOrder parse_order(std::string_view name);

/// Exponent vector with fixed capacity; unused slots stay zero, so two
/// monomials of the same ring compare correctly without knowing the ring.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const noexcept { return exp_[i]; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const noexcept;
  /// Highest variable index with a nonzero exponent plus one.
  std::size_t used_vars() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  /// Precondition: divides(numerator).
  Monomial divide_into(const Monomial& numerator) const noexcept;

  Monomial operator*(const Monomial& other) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint16_t degree_ = 0;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace conormal
