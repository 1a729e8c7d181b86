#include <algorithm>
#include <random>

#include "conormal/error.hpp"
#include "conormal/groebner.hpp"
#include "conormal/polynomial.hpp"
#include "doctest.h"

using namespace conormal;

TEST_CASE("prime field basics") {
  PrimeField big(31991);
  CHECK(big.inv(2) == 15996);
  CHECK(big.mul(2, 15996) == 1);
  PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  PrimeField f7(7);
  CHECK(f7.neg(0) == 0);
  CHECK_THROWS_AS(f7.inv(0), DivisionByZero);
  CHECK(f7.from_int(-1) == 6);
}

TEST_CASE("prime field rejects bad moduli") {
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(0), Error);
  CHECK_NOTHROW(PrimeField(2147483647u));
}

TEST_CASE("field axioms on random samples") {
  PrimeField F(31991);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20000; ++k) {
    Coeff a = rng() % 31991, b = rng() % 31991, c = rng() % 31991;
    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
    REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    REQUIRE(F.add(a, F.neg(a)) == 0);
    REQUIRE(F.sub(a, b) == F.add(a, F.neg(b)));
    if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
  }
}

namespace {

// Independent order oracle working on plain exponent vectors.
bool oracle_greater(const std::vector<int>& a, const std::vector<int>& b, MonomialOrder order) {
  int da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  std::vector<int> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  switch (order) {
    case MonomialOrder::lex:
      for (int d : diff)
        if (d) return d > 0;
      return false;
    case MonomialOrder::deglex:
      if (da != db) return da > db;
      for (int d : diff)
        if (d) return d > 0;
      return false;
    case MonomialOrder::degrevlex:
      if (da != db) return da > db;
      for (std::size_t i = diff.size(); i > 0; --i)
        if (diff[i - 1]) return diff[i - 1] < 0;
      return false;
  }
  return false;
}

void all_exponents(std::size_t nvars, int max_deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == nvars) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (auto e : cur) used += e;
  for (int e = 0; e + used <= max_deg; ++e) {
    cur.push_back(e);
    all_exponents(nvars, max_deg, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("monomial orders agree with a brute-force oracle") {
  for (auto order : {MonomialOrder::degrevlex, MonomialOrder::deglex, MonomialOrder::lex}) {
    for (std::size_t nv = 1; nv <= 4; ++nv) {
      std::vector<std::vector<int>> exps;
      std::vector<int> cur;
      all_exponents(nv, 4, cur, exps);
      auto by_oracle = exps;
      std::sort(by_oracle.begin(), by_oracle.end(),
                [order](const auto& a, const auto& b) { return oracle_greater(b, a, order); });
      std::vector<Monomial> monos;
      for (const auto& e : exps) monos.emplace_back(std::span<const int>(e));
      std::sort(monos.begin(), monos.end(), [order](const Monomial& a, const Monomial& b) { return compare(a, b, order) < 0; });
      REQUIRE(monos.size() == by_oracle.size());
      for (std::size_t i = 0; i < monos.size(); ++i) REQUIRE(monos[i] == Monomial(std::span<const int>(by_oracle[i])));
      // multiplicativity on a sample
      for (std::size_t i = 0; i + 1 < monos.size(); i += 3) {
        Monomial c = monos[(i * 7) % monos.size()];
        REQUIRE(compare(monos[i] * c, monos[i + 1] * c, order) < 0);
      }
    }
  }
}

TEST_CASE("monomial compare examples") {
  Monomial xz{1, 0, 1}, y2{0, 2, 0};
  CHECK(compare(y2, xz, MonomialOrder::degrevlex) > 0);
  CHECK(compare(xz, y2, MonomialOrder::deglex) > 0);
  CHECK(compare(xz, xz, MonomialOrder::degrevlex) == 0);
  CHECK(compare(Monomial{0, 3}, Monomial{2, 0}, MonomialOrder::deglex) > 0);
}

TEST_CASE("polynomial arithmetic") {
  auto R7 = make_ring(7, {"x", "y"});
  auto x = Polynomial::variable(R7, 0), y = Polynomial::variable(R7, 1);
  CHECK(((x + y) * (x - y)) == parse_polynomial(R7, "x^2 - y^2"));
  CHECK(((x + y) * Polynomial(R7)).is_zero());
  auto R = make_ring(31991, {"x", "y"});
  CHECK(parse_polynomial(R, "x^2 + 2*x*y + y^2") ==
        (Polynomial::variable(R, 0) + Polynomial::variable(R, 1)) * (Polynomial::variable(R, 0) + Polynomial::variable(R, 1)));
  CHECK_THROWS_AS(x + Polynomial::variable(R, 0), RingMismatch);
  CHECK(Polynomial(R7).degree() == kZeroDegree);
}

TEST_CASE("ring axioms and degree law on random polynomials") {
  auto R = make_ring(31991, {"a", "b", "c"});
  std::mt19937_64 rng(11);
  auto random_poly = [&] {
    std::vector<Term> terms;
    int n = 1 + rng() % 5;
    for (int i = 0; i < n; ++i)
      terms.push_back(Term{static_cast<Coeff>(1 + rng() % 31990),
                           Monomial{int(rng() % 3), int(rng() % 3), int(rng() % 3)}});
    return Polynomial(R, terms);
  };
  for (int k = 0; k < 200; ++k) {
    auto f = random_poly(), g = random_poly(), h = random_poly();
    REQUIRE(f * g == g * f);
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * (g + h) == f * g + f * h);
    if (!f.is_zero() && !g.is_zero()) REQUIRE((f * g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("parsing and printing") {
  auto R = make_ring(31991, {"x", "y"});
  auto f = parse_polynomial(R, " 3*x^2*y - y + 7 ");
  CHECK(f.to_string() == "3*x^2*y - y + 7");
  CHECK(parse_polynomial(R, f.to_string()) == f);
  CHECK(parse_polynomial(R, "31992*x") == Polynomial::variable(R, 0));
  CHECK(parse_polynomial(R, "-x") == -Polynomial::variable(R, 0));
  try {
    parse_polynomial(R, "x^2 + + y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_polynomial(R, "z"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, ""), ParseError);
}

TEST_CASE("substitute") {
  auto P = make_ring(31991, {"x0", "x1"});
  auto R = make_ring(31991, {"x"});
  auto x = Polynomial::variable(R, 0);
  auto f = parse_polynomial(P, "x0*x1");
  CHECK(substitute(f, R, {{"x0", x}, {"x1", x}}) == parse_polynomial(R, "x^2"));
  CHECK(substitute(x, R, {{"x", x}}) == x);
  auto T = make_ring(31991, {"x", "t"});
  auto g = parse_polynomial(T, "x^4 + x^2*t^2");
  auto one = Polynomial::constant(T, 1);
  CHECK(substitute(g, T, {{"x", Polynomial::variable(T, 0)}, {"t", one}}) == parse_polynomial(T, "x^4 + x^2"));
  CHECK_THROWS_AS(substitute(f, R, {{"x0", x}}), Error);
}

TEST_CASE("random linear forms") {
  auto R = make_ring(31991, indexed_names("x", 6));
  auto a = random_linear_form(R, 5), b = random_linear_form(R, 5);
  CHECK(a == b);
  CHECK(a.is_homogeneous());
  CHECK(a.degree() == 1);
  for (const auto& t : a.terms()) CHECK(t.coeff < 31991u);
  int differing = 0;
  for (std::uint64_t s = 0; s < 100; ++s)
    if (!(random_linear_form(R, 2 * s) == random_linear_form(R, 2 * s + 1))) ++differing;
  CHECK(differing == 100);
}
