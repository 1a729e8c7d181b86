#pragma once

#include <cstdint>

namespace conormal {

/// Canonical residue in [0, p).
using Coeff = std::uint32_t;

/// GF(p) for an odd prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws DivisionByZero for a == 0.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  Coeff from_int(std::int64_t v) const noexcept;
  /// Symmetric lift into (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace conormal
