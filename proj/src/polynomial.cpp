#include "conormal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <unordered_map>

#include "conormal/error.hpp"

namespace conormal {

Ring::Ring(PrimeField field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars) throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw Error("invalid variable name '" + n + "'");
    for (char ch : n)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw Error("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw Error("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(PrimeField(p), std::move(names), order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return std::make_shared<const Ring>(ring->field(), ring->names(), order);
}

std::vector<std::string> indexed_names(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || *a == *b; }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& F = ring_->field();
  const auto order = ring_->order();
  const std::size_t nv = ring_->num_vars();
  for (auto& t : terms) {
    if (t.mono.used_vars() > nv) throw Error("monomial uses variables outside the ring");
    t.coeff %= F.modulus();
  }
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
    else
      terms_.push_back(t);
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  return Polynomial(std::move(ring), {Term{c, Monomial()}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) throw Error("variable index out of range");
  return Polynomial(std::move(ring), {Term{1, Monomial::variable(index)}});
}

Polynomial Polynomial::monomial(RingPtr ring, Coeff c, const Monomial& m) {
  return Polynomial(std::move(ring), {Term{c, m}});
}

int Polynomial::degree() const noexcept {
  int d = kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::low_degree() const noexcept {
  if (terms_.empty()) return kZeroDegree;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  auto out = terms_;
  for (auto& t : out) t.coeff = field().neg(t.coeff);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  const auto& F = field();
  const auto order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto cmp = compare(a->mono, b->mono, order);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(*b++);
    } else {
      Coeff c = F.add(a->coeff, b->coeff);
      if (c) out.push_back(Term{c, a->mono});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, other.terms_.end());
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const auto& F = field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      auto& slot = acc[a.mono * b.mono];
      slot = F.add(slot, F.mul(a.coeff, b.coeff));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) out.push_back(Term{c, m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= field().modulus();
  if (c == 0) return Polynomial(ring_);
  auto out = terms_;
  for (auto& t : out) t.coeff = field().mul(t.coeff, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  c %= field().modulus();
  if (c == 0) return Polynomial(ring_);
  auto out = terms_;
  for (auto& t : out) {
    t.coeff = field().mul(t.coeff, c);
    t.mono = t.mono * m;
  }
  // multiplication by a monomial preserves the order
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead_coeff()));
}

Polynomial Polynomial::component(int degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.degree() == degree) out.push_back(t);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) return from_sorted(target, terms_);
  if (target->names() != ring_->names() || !(target->field() == ring_->field())) throw RingMismatch();
  return Polynomial(target, terms_);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field().to_signed(t.coeff);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    bool need_star = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      int e = t.mono[i];
      if (!e) continue;
      if (need_star) os << '*';
      os << ring_->names()[i];
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, std::size_t line)
      : ring_(ring), text_(text), line_(line) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
      skip_ws();
    }
    terms.push_back(parse_term(negate));
    skip_ws();
    while (pos_ < text_.size()) {
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      skip_ws();
      terms.push_back(parse_term(op == '-'));
      skip_ws();
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Term parse_term(bool negate) {
    const auto& F = ring_->field();
    Coeff coeff = 1;
    std::vector<int> exps(ring_->num_vars(), 0);
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) fail("expected a coefficient or variable");
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = F.mul(coeff, parse_integer_mod());
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = ring_->index_of(name);
        if (!idx) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        int power = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = parse_exponent();
        }
        exps[*idx] += power;
        if (exps[*idx] > 255) fail("exponent too large");
      } else {
        fail(std::string("expected a coefficient or variable, found '") + ch + "'");
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (negate) coeff = F.neg(coeff);
    return Term{coeff, Monomial(exps)};
  }

  Coeff parse_integer_mod() {
    const auto& F = ring_->field();
    Coeff v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek())))
      v = F.add(F.mul(v, 10), static_cast<Coeff>(get() - '0'));
    return v;
  }

  int parse_exponent() {
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 255) fail("exponent too large");
    }
    return static_cast<int>(v);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line) {
  return PolyParser(ring, text, line).parse();
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::map<std::string, Polynomial>& assignment) {
  const auto& src = *f.ring();
  std::vector<const Polynomial*> images(src.num_vars(), nullptr);
  for (std::size_t i = 0; i < src.num_vars(); ++i) {
    auto it = assignment.find(src.names()[i]);
    if (it != assignment.end()) {
      if (!same_ring(it->second.ring(), target)) throw RingMismatch();
      images[i] = &it->second;
    }
  }
  // power cache per variable
  std::vector<std::vector<Polynomial>> powers(src.num_vars());
  auto power_of = [&](std::size_t var, int e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *images[var]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.num_vars(); ++i) {
      if (!t.mono[i]) continue;
      if (!images[i]) throw Error("variable '" + src.names()[i] + "' has no image");
      term = term * power_of(i, t.mono[i]);
    }
    result = result + term;
  }
  return result;
}

Polynomial random_linear_form(const RingPtr& ring, std::uint64_t seed) {
  if (ring->num_vars() == 0) throw Error("no linear forms in a ring without variables");
  std::mt19937_64 rng(seed);
  const auto p = ring->field().modulus();
  for (;;) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < ring->num_vars(); ++i)
      terms.push_back(Term{static_cast<Coeff>(rng() % p), Monomial::variable(i)});
    Polynomial f(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

}  // namespace conormal
