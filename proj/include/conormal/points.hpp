#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conormal/groebner.hpp"

namespace conormal {

/// Distinct points of P^c over GF(p), each stored with first nonzero coordinate 1.
struct PointSet {
  int c = 0;
  std::uint32_t p = 0;
  std::vector<std::vector<Coeff>> points;
  std::optional<std::uint64_t> seed;

  int size() const noexcept { return static_cast<int>(points.size()); }
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Normalizes and validates; throws Error on a zero vector, a wrong
/// coordinate count, an empty set or a repeated point.
PointSet make_point_set(int c, std::uint32_t p, std::vector<std::vector<std::int64_t>> coordinates);

/// n distinct uniformly random points, deterministic in the seed.
/// Throws Error when P^c(GF(p)) has fewer than n points.
PointSet random_points(int c, int n, std::uint32_t p, std::uint64_t seed);

/// Ring in x0..xc over GF(p).
RingPtr point_ring(const PointSet& ps, MonomialOrder order = MonomialOrder::degrevlex);

/// Value of f at a point (f must live in a ring with c + 1 variables).
Coeff evaluate(const Polynomial& f, const std::vector<Coeff>& point);

/// Reduced Groebner basis of the homogeneous vanishing ideal, found degree
/// by degree from evaluation vectors, completed with Buchberger and checked
/// to vanish on every point.
GroebnerBasis vanishing_ideal(const PointSet& ps, MonomialOrder order = MonomialOrder::degrevlex);
GroebnerBasis vanishing_ideal(const PointSet& ps, const RingPtr& ring);

/// HF of the coordinate ring, by rank of the evaluation map in each degree,
/// through the first degree where it reaches the number of points.
std::vector<int> coordinate_ring_hf(const PointSet& ps);

struct GeneralPositionCertificate {
  std::vector<int> expected_hf;  // min(C(c+i, i), n)
  std::vector<int> achieved_hf;
  bool achieved = false;
};
GeneralPositionCertificate general_position_check(const PointSet& ps);

struct GeneralPoints {
  PointSet points;
  GeneralPositionCertificate certificate;
  int redraws = 0;
};

/// Draws with seed, seed+1, ... until the certificate holds; throws Error
/// after max_redraws failed re-draws.
GeneralPoints random_general_points(int c, int n, std::uint32_t p, std::uint64_t seed, int max_redraws = 10);

/// "P <c> <p> <n>" then one point per line.
std::string write_point_set(const PointSet& ps);
PointSet read_point_set(std::string_view text);

}  // namespace conormal
