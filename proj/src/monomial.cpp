#include "conormal/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "conormal/error.hpp"

namespace conormal {

std::string_view to_string(MonomialOrder order) noexcept {
  switch (order) {
    case MonomialOrder::degrevlex: return "degrevlex";
    case MonomialOrder::deglex: return "deglex";
    case MonomialOrder::lex: return "lex";
  }
  return "degrevlex";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "degrevlex") return MonomialOrder::degrevlex;
  if (name == "deglex") return MonomialOrder::deglex;
  if (name == "lex") return MonomialOrder::lex;
  throw Error("unknown monomial order '" + std::string(name) + "'");
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw Error("too many variables for a monomial");
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw Error("exponent out of range [0, 255]");
    exp_[i] = static_cast<std::uint8_t>(exponents[i]);
    total += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(total);
}

Monomial Monomial::variable(std::size_t index, int power) {
  if (index >= kMaxVars) throw Error("variable index out of range");
  if (power < 0 || power > 255) throw Error("exponent out of range [0, 255]");
  Monomial m;
  m.exp_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i]) mask |= 1u << i;
  return mask;
}

std::size_t Monomial::used_vars() const noexcept {
  for (std::size_t i = kMaxVars; i > 0; --i)
    if (exp_[i - 1]) return i;
  return 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const noexcept {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    q.exp_[i] = static_cast<std::uint8_t>(numerator.exp_[i] - exp_[i]);
  q.degree_ = static_cast<std::uint16_t>(numerator.degree_ - degree_);
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > 255) throw Error("exponent overflow in monomial product");
    r.exp_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  int total = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    total += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(total);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  int total = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    total += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(total);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp_[i] && b.exp_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent bytes
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
  if (order != MonomialOrder::lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (order == MonomialOrder::degrevlex) {
    for (std::size_t i = kMaxVars; i > 0; --i) {
      int ea = a[i - 1], eb = b[i - 1];
      if (ea != eb) return eb <=> ea;
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int ea = a[i], eb = b[i];
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

}  // namespace conormal
