#include <random>

#include "conormal/error.hpp"
#include "conormal/invariants.hpp"
#include "doctest.h"

using namespace conormal;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(R, g));
  return Ideal(R, std::move(ps));
}

GroebnerBasis gb_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  return buchberger(ideal_of(R, gens));
}

std::vector<int> hf_values(const GroebnerBasis& gb) { return hilbert_function(gb).values; }

// lambda(R / (I + m^d)) by a fresh Groebner basis
int truncated_length(const Ideal& I, int d) {
  std::vector<Polynomial> gens(I.generators().begin(), I.generators().end());
  for (const auto& m : monomials_of_degree(I.ring()->num_vars(), d, I.ring()->order()))
    gens.push_back(Polynomial::monomial(I.ring(), 1, m));
  return length(buchberger(Ideal(I.ring(), gens)));
}

// HF(d) = lambda(R/(I+m^{d+1})) - lambda(R/(I+m^d))
std::vector<int> hf_oracle(const Ideal& I, int max_degree) {
  std::vector<int> out;
  int prev = 0;
  for (int d = 0; d <= max_degree; ++d) {
    int cur = truncated_length(I, d + 1);
    out.push_back(cur - prev);
    prev = cur;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int low, int high, int terms) {
  const std::size_t n = R->num_vars();
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    int deg = low + int(rng() % (high - low + 1));
    auto mons = monomials_of_degree(n, deg, R->order());
    ts.push_back(Term{static_cast<Coeff>(1 + rng() % (R->field().modulus() - 1)), mons[rng() % mons.size()]});
  }
  return Polynomial(R, ts);
}

}  // namespace

TEST_CASE("hilbert function examples") {
  auto R = make_ring(31991, {"x", "y"});
  CHECK(hf_values(gb_of(R, {"x^2", "x*y", "y^2"})) == std::vector<int>{1, 2});
  CHECK(hf_values(gb_of(R, {"x^3", "y"})) == std::vector<int>{1, 1, 1});
  CHECK(hf_values(gb_of(R, {"x^2", "y^2"})) == std::vector<int>{1, 2, 1});
  CHECK(length(gb_of(R, {"x^2", "y^2"})) == 4);
  CHECK(hilbert_function(gb_of(R, {"x^2", "y^2"})).length() == 4);
  // inhomogeneous: x^2 - y^3 with x*y, y^4 is stretched (1,2,1,1)
  CHECK(hf_values(gb_of(R, {"x^2 - y^3", "x*y", "y^4"})) == std::vector<int>{1, 2, 1, 1});
  CHECK_THROWS_AS(hilbert_function(gb_of(R, {"x^2"})), NotZeroDimensional);
  // x(x-1), y: two points, not local
  CHECK_THROWS_AS(hilbert_function(gb_of(R, {"x^2 - x", "y"})), Error);
}

TEST_CASE("graded and filtration Hilbert functions agree on homogeneous input") {
  auto R = make_ring(101, indexed_names("x", 3));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_poly(R, rng, 2, 2, 3));
    for (const auto& m : monomials_of_degree(3, 4, R->order())) gens.push_back(Polynomial::monomial(R, 1, m));
    auto gb = buchberger(Ideal(R, gens));
    CHECK(hilbert_function(gb) == hilbert_function_by_filtration(gb));
  }
}

TEST_CASE("local Hilbert function matches truncation oracle") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 2; n <= 3; ++n) {
    auto R = make_ring(101, indexed_names("x", n));
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < int(n); ++k) gens.push_back(random_poly(R, rng, 2, 4, 3));
      for (const auto& m : monomials_of_degree(n, 5, R->order())) gens.push_back(Polynomial::monomial(R, 1, m));
      Ideal I(R, gens);
      auto gb = buchberger(I);
      auto hf = hilbert_function(gb);
      CHECK(hf.values == hf_oracle(I, 6));
      CHECK(hf.length() == length(gb));
    }
  }
}

TEST_CASE("socle of monomial ideals matches brute force") {
  std::mt19937_64 rng(3);
  auto R = make_ring(31991, indexed_names("x", 3));
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < 3; ++i) gens.push_back(Polynomial::monomial(R, 1, Monomial::variable(i, 2 + int(rng() % 3))));
    for (int k = 0; k < 3; ++k) gens.push_back(Polynomial::monomial(R, 1, random_poly(R, rng, 2, 4, 1).lead_monomial()));
    auto gb = buchberger(Ideal(R, gens));
    // a standard monomial is in the socle iff every x_i * m is in the ideal
    std::vector<int> expected;
    for (const auto& m : standard_monomials(gb)) {
      bool soc = true;
      for (std::size_t i = 0; i < 3; ++i)
        if (!contains(gb, Polynomial::monomial(R, 1, m * Monomial::variable(i)))) soc = false;
      if (soc) expected.push_back(m.degree());
    }
    std::sort(expected.begin(), expected.end());
    CHECK(invariant_report(gb).socle_degrees == expected);
    for (const auto& e : socle(gb))
      for (std::size_t i = 0; i < 3; ++i) CHECK(contains(gb, Polynomial::variable(R, i) * e.representative));
  }
}

TEST_CASE("socle examples") {
  auto R = make_ring(31991, {"x", "y"});
  auto r = invariant_report(gb_of(R, {"x^2", "x*y", "y^2"}));
  CHECK(r.type == 2);
  CHECK(r.socle_degrees == std::vector<int>{1, 1});
  CHECK(r.level);
  CHECK_FALSE(r.gorenstein);

  auto g = invariant_report(gb_of(R, {"x^4", "y"}));
  CHECK(g.gorenstein);
  CHECK(g.stretched);

  // (x^2, xy, y^3): socle spanned by x (degree 1) and y^2 (degree 2)
  auto t = invariant_report(gb_of(R, {"x^2", "x*y", "y^3"}));
  CHECK(t.socle_degrees == std::vector<int>{1, 2});
  CHECK_FALSE(t.level);

  // socle degree of x^2 + y^3-type element is its initial degree
  auto s = socle(gb_of(R, {"x^2 - y^3", "x*y", "y^4"}));
  REQUIRE(s.size() == 1);
  CHECK(s[0].degree == 3);
}

TEST_CASE("complete intersections are Gorenstein") {
  std::mt19937_64 rng(5);
  auto R = make_ring(31991, indexed_names("x", 3));
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(R, rng, 2, 2, 6));
    auto gb = buchberger(Ideal(R, gens));
    if (!is_zero_dimensional(gb)) continue;
    auto r = invariant_report(gb);
    CHECK(r.gorenstein);
    CHECK(r.hf.values == std::vector<int>{1, 3, 3, 1});
    CHECK(r.socle_degrees == std::vector<int>{3});
  }
}

TEST_CASE("classify from numbers") {
  auto st = classify(HilbertFunction{{1, 3, 1, 1}}, {1, 1, 3});
  CHECK(st.stretched);
  CHECK(st.length == 6);
  CHECK(st.embdim == 3);
  CHECK(st.socle_degree == 3);
  CHECK_FALSE(st.short_algebra);
  CHECK_FALSE(st.level);

  auto sh = classify(HilbertFunction{{1, 5, 4}}, {2, 2, 2, 2});
  CHECK(sh.short_algebra);
  CHECK_FALSE(sh.stretched);
  CHECK(sh.level);
  CHECK(sh.type == 4);

  auto tiny = classify(HilbertFunction{{1, 4}}, {1, 1, 1, 1});
  CHECK(tiny.stretched);
  CHECK(tiny.short_algebra);

  auto kv = to_key_value(sh);
  CHECK(kv.find("hf: 1 5 4\n") != std::string::npos);
  CHECK(kv.find("short: true\n") != std::string::npos);
  CHECK(kv.find("socle_degrees: 2 2 2 2\n") != std::string::npos);
}

TEST_CASE("quotient by a socle element") {
  auto R = make_ring(31991, {"x", "y"});
  auto gb = gb_of(R, {"x^2", "x*y", "y^3"});
  CHECK(hf_values(quotient_by_socle_element(gb, parse_polynomial(R, "x"))) == std::vector<int>{1, 1, 1});
  CHECK(hf_values(quotient_by_socle_element(gb, parse_polynomial(R, "y^2"))) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(quotient_by_socle_element(gb, parse_polynomial(R, "y")), Error);
  CHECK_THROWS_AS(quotient_by_socle_element(gb, parse_polynomial(R, "x^2")), Error);
}

TEST_CASE("eliminating linear forms") {
  auto R = make_ring(31991, {"x", "y", "z"});
  auto e = eliminate_linear_forms(ideal_of(R, {"x - y", "x^2", "z^3"}));
  CHECK(e.eliminated == 1);
  CHECK(e.ring->num_vars() == 2);
  auto gb = buchberger(e.ideal());
  CHECK(hf_values(gb) == hf_values(gb_of(R, {"x - y", "x^2", "z^3"})));

  auto none = eliminate_linear_forms(ideal_of(R, {"x^2", "y^2", "z^2"}));
  CHECK(none.eliminated == 0);
  CHECK(none.generators.size() == 3);

  auto R2 = make_ring(31991, {"x", "y"});
  auto all = eliminate_linear_forms(ideal_of(R2, {"x + y", "x - y"}));
  CHECK(all.eliminated == 2);
  CHECK(all.ring->num_vars() == 0);
  CHECK(all.generators.empty());

  CHECK_THROWS_AS(eliminate_linear_forms(ideal_of(R, {"x - y^2"})), Error);
}
