#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conormal/groebner.hpp"

namespace conormal {

/// Stretched ideal of socle degree s and type r + 1 in c variables
/// x_1..x_c (ring variables 0..c-1).
struct StretchedSpec {
  int c = 0;
  int s = 0;
  int r = 0;
  /// u_{r+1}, ..., u_{c-1}; empty means all ones. Must be empty when r = c - 1.
  std::vector<Coeff> units;
};

/// Throws Error on an invalid spec.
void validate(const StretchedSpec& spec);

/// (x_1 m, ..., x_r m) + J + m^{s+1}, where J is spanned by the products
/// x_{r+i} x_{r+j} and the binomials x_c^s - u_{r+i} x_{r+i}^2, or is
/// (x_c^{s+1}) when r = c - 1.
Ideal stretched_ideal(const StretchedSpec& spec, const RingPtr& ring);

/// (x_1..x_{c-1}) H + (x_1..x_{c-1}) x_c^{s+1} + (x_c^{2s}), H = all cubics but x_c^3.
Ideal ideal_L(int c, int s, const RingPtr& ring);

/// Every monomial of degree d.
std::vector<Polynomial> truncation(const RingPtr& ring, int d);

struct Polarization {
  Ideal ideal;
  /// new variable -> original variable
  std::map<std::string, Polynomial> assignment;
};

/// Squarefree deformation: x^a becomes x_0 x_1 ... x_{a-1}. Throws Error on
/// a non-monomial generator.
Polarization polarize(const Ideal& monomial_ideal);

/// The 15 published generators of the ten-point example over a..f, as text.
std::span<const std::string_view> example61_generators();
std::uint64_t transcription_checksum(std::span<const std::string_view> generators);
/// Ring over GF(31991) in a, b, c, d, e, f.
RingPtr example61_ring(MonomialOrder order = MonomialOrder::degrevlex);
/// Parses the listing after comparing its checksum to the frozen value.
Ideal example61_ideal(const RingPtr& ring);
Ideal example61_ideal(const RingPtr& ring, std::span<const std::string_view> generators);

}  // namespace conormal
