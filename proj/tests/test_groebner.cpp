#include <random>

#include "conormal/error.hpp"
#include "conormal/groebner.hpp"
#include "oracles.hpp"
#include "doctest.h"

using namespace conormal;
using namespace conormal::oracle;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(R, g));
  return Ideal(R, std::move(ps));
}

std::vector<std::string> printed(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.elements()) out.push_back(g.to_string());
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto R = make_ring(31991, {"x", "y", "z"});
  CHECK(printed(buchberger(ideal_of(R, {"x", "y"}))) == std::vector<std::string>{"y", "x"});
  CHECK(printed(buchberger(ideal_of(R, {"x^2", "x*y + y^2"}))) ==
        std::vector<std::string>{"x*y + y^2", "x^2", "y^3"});
  CHECK(printed(buchberger(ideal_of(R, {"x*y", "x*z", "y*z"}))) == std::vector<std::string>{"y*z", "x*z", "x*y"});
  CHECK(buchberger(ideal_of(R, {"x + 1", "x"})).is_unit_ideal());
}

TEST_CASE("normal form and membership") {
  auto R = make_ring(31991, {"x", "y"});
  auto gx = buchberger(ideal_of(R, {"x"}));
  CHECK(normal_form(parse_polynomial(R, "x^2"), gx).is_zero());
  auto gb = buchberger(ideal_of(R, {"x^2", "x*y + y^2"}));
  CHECK(normal_form(parse_polynomial(R, "y^3 + x"), gb) == parse_polynomial(R, "x"));
  CHECK(contains(gx, parse_polynomial(R, "x*y")));
  CHECK_FALSE(contains(gx, parse_polynomial(R, "y")));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    std::vector<Term> terms;
    for (int t = 0; t < 6; ++t) terms.push_back(Term{Coeff(rng() % 31991), Monomial{int(rng() % 4), int(rng() % 4)}});
    Polynomial f(R, terms);
    auto nf = normal_form(f, gb);
    REQUIRE(normal_form(nf, gb) == nf);
    REQUIRE(contains(gb, f - nf));
  }
}

TEST_CASE("ideal arithmetic") {
  auto R = make_ring(31991, {"x", "y"});
  auto sq = ideal_square(ideal_of(R, {"x", "y"}));
  std::vector<std::string> gens;
  for (const auto& g : sq.generators()) gens.push_back(g.to_string());
  CHECK(gens == std::vector<std::string>{"x^2", "x*y", "y^2"});
  CHECK_THROWS_AS(Ideal(R, {Polynomial(R)}), Error);
  auto sum = ideal_sum(ideal_of(R, {"x"}), ideal_of(R, {"y^2"}));
  CHECK(sum.size() == 2);

  auto I = ideal_of(R, {"x^2 + y", "x*y - 1", "y^3"});
  auto s = buchberger(ideal_square(I));
  auto p = buchberger(ideal_product(I, I));
  CHECK(contains(s, ideal_product(I, I)));
  CHECK(contains(p, ideal_square(I)));
}

TEST_CASE("zero-dimensionality and standard monomials") {
  auto R = make_ring(31991, {"x", "y"});
  auto a = buchberger(ideal_of(R, {"x^2", "y^2"}));
  CHECK(is_zero_dimensional(a));
  auto sm = standard_monomials(a);
  CHECK(sm == std::vector<Monomial>{Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}, Monomial{1, 1}});
  CHECK_FALSE(is_zero_dimensional(buchberger(ideal_of(R, {"x*y"}))));
  CHECK_THROWS_AS(standard_monomials(buchberger(ideal_of(R, {"x*y"}))), NotZeroDimensional);
  CHECK(standard_monomials(buchberger(ideal_square(ideal_of(R, {"x", "y"})))).size() == 3);
}

TEST_CASE("buchberger criterion and order independence on random ideals") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = 1 + k % 3;
    auto R = make_ring(31991, indexed_names("x", n));
    auto I = random_zero_dim_ideal(R, rng);
    auto g1 = buchberger(I, MonomialOrder::degrevlex);
    auto g2 = buchberger(I, MonomialOrder::deglex);
    auto g3 = buchberger(I, MonomialOrder::lex);
    REQUIRE(satisfies_buchberger_criterion(g1));
    REQUIRE(satisfies_buchberger_criterion(g2));
    REQUIRE(satisfies_buchberger_criterion(g3));
    REQUIRE(contains(g1, I));
    REQUIRE(contains(g3, I));
    auto c1 = standard_monomials(g1).size();
    REQUIRE(c1 == standard_monomials(g2).size());
    REQUIRE(c1 == standard_monomials(g3).size());
    for (const auto& g : g1.elements()) REQUIRE(g.lead_coeff() == 1);
  }
}

TEST_CASE("budget exhaustion is reported") {
  auto R = make_ring(31991, indexed_names("x", 4));
  // cyclic-4
  auto I = ideal_of(R, {"x0 + x1 + x2 + x3", "x0*x1 + x1*x2 + x2*x3 + x3*x0",
                        "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1", "x0*x1*x2*x3 - 1"});
  auto full = buchberger(I);
  REQUIRE(full.steps() > 10);
  CHECK_THROWS_AS(buchberger(I, BuchbergerOptions{full.steps() / 2}), BudgetExceeded);
}

TEST_CASE("basis serialization") {
  auto R = make_ring(31991, {"x", "y"});
  auto gb = buchberger(ideal_of(R, {"x^2", "x*y + y^2"}));
  auto text = write_basis(gb);
  CHECK(text == "order degrevlex\nx*y + y^2\nx^2\ny^3\n");
  auto back = read_basis(R, text);
  CHECK(write_basis(back) == text);
  CHECK_THROWS_AS(read_basis(R, "order degrevlex\nx^2\nx*y + y^2\n"), Error);  // not a basis
  CHECK_THROWS_AS(read_basis(R, "x^2\n"), ParseError);
}

TEST_CASE("minimal generators of homogeneous ideals") {
  auto R = make_ring(31991, {"x", "y", "z"});
  auto gens = minimal_generators(ideal_of(R, {"x^2", "x*y", "x^2*y", "x^3 + x*y*z", "z^3"}));
  CHECK(gens.size() == 3);
}
