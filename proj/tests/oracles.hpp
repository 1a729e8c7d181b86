#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <random>

#include "conormal/groebner.hpp"
#include "conormal/linalg.hpp"
#include "conormal/points.hpp"

namespace conormal::oracle {

// All forms of degree <= D vanishing on the points, by one nullspace per degree.
inline GroebnerBasis vanishing_oracle(const PointSet& ps, const RingPtr& R, int D) {
  const auto& F = R->field();
  std::vector<Polynomial> gens;
  for (int d = 0; d <= D; ++d) {
    auto monos = monomials_of_degree(R->num_vars(), d, R->order());
    std::vector<Vector> rows(ps.points.size(), Vector(monos.size()));
    for (std::size_t k = 0; k < ps.points.size(); ++k)
      for (std::size_t j = 0; j < monos.size(); ++j) rows[k][j] = evaluate(Polynomial::monomial(R, 1, monos[j]), ps.points[k]);
    for (const auto& v : nullspace(F, rows, monos.size())) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < monos.size(); ++j)
        if (v[j]) terms.push_back(Term{v[j], monos[j]});
      gens.emplace_back(R, std::move(terms));
    }
  }
  return buchberger(Ideal(R, gens));
}

// Pure powers plus lower-order noise, so the ideal is zero-dimensional.
inline Ideal random_zero_dim_ideal(const RingPtr& R, std::mt19937_64& rng) {
  const std::size_t n = R->num_vars();
  const Coeff p = R->field().modulus();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms{Term{1, Monomial::variable(i, 2 + int(rng() % 2))}};
    for (int k = 0; k < 2; ++k) {
      std::vector<int> e(n, 0);
      for (auto& x : e) x = rng() % 2;
      terms.push_back(Term{static_cast<Coeff>(rng() % p), Monomial(std::span<const int>(e))});
    }
    gens.emplace_back(R, terms);
  }
  std::vector<Term> extra;
  for (int k = 0; k < 3; ++k) {
    std::vector<int> e(n, 0);
    for (auto& x : e) x = rng() % 3;
    int deg = 0;
    for (auto x : e) deg += x;
    if (deg > 3) continue;
    extra.push_back(Term{static_cast<Coeff>(rng() % p), Monomial(std::span<const int>(e))});
  }
  gens.emplace_back(R, extra);
  return Ideal(R, gens);
}

}  // namespace conormal::oracle
