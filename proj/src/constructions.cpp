#include "conormal/constructions.hpp"

#include <array>

#include "conormal/error.hpp"

namespace conormal {

namespace {

constexpr std::array<std::string_view, 15> kExample61 = {
    "e^2*f + 2963*b*f^2 + 4964*c*f^2 + 5333*d*f^2 - 13261*e*f^2",
    "a*f - 13894*b*f + 12842*c*f + 4036*d*f - 2985*e*f",
    "d*e + 3056*b*f + 12160*c*f + 971*d*f + 15803*e*f",
    "c*e - 2357*b*f - 14460*c*f + 3040*d*f + 13776*e*f",
    "b*e - 8504*b*f + 1159*c*f - 1581*d*f + 8925*e*f",
    "a*e - 9147*b*f + 1379*c*f + 4167*d*f + 3600*e*f",
    "c*d + 7380*b*f + 5885*c*f + 6255*d*f + 12470*e*f",
    "b*d - 11676*b*f - 2833*c*f - 13277*d*f - 4206*e*f",
    "a*d + 5555*b*f + 2017*c*f + 2100*d*f - 9673*e*f",
    "b*c + 5653*b*f - 6596*c*f - 8208*d*f + 9150*e*f",
    "a*c - 2335*b*f - 10387*c*f + 514*d*f + 12207*e*f",
    "a*b - 8324*b*f - 7688*c*f - 4252*d*f - 11728*e*f",
    "b^2*f + 15536*b*f^2 + 1265*c*f^2 + 9888*d*f^2 + 5301*e*f^2",
    "d^2*f + 10625*b*f^2 - 11725*c*f^2 + 9514*d*f^2 - 8415*e*f^2",
    "c^2*f + 11390*b*f^2 + 7112*c*f^2 - 10319*d*f^2 - 8184*e*f^2",
};
constexpr std::uint64_t kExample61Checksum = 0x8fa90108b62bc0dcull;
constexpr std::uint32_t kExample61Prime = 31991;

Polynomial mono(const RingPtr& ring, const Monomial& m) { return Polynomial::monomial(ring, 1, m); }

}  // namespace

void validate(const StretchedSpec& spec) {
  if (spec.c < 1) throw Error("stretched spec: c must be positive");
  if (spec.s < 2) throw Error("stretched spec: s must be at least 2");
  if (spec.r < 0 || spec.r > spec.c - 1) throw Error("stretched spec: r must lie in [0, c-1]");
  const auto expected = static_cast<std::size_t>(spec.c - 1 - spec.r);
  if (!spec.units.empty() && spec.units.size() != expected)
    throw Error("stretched spec: expected " + std::to_string(expected) + " units, got " +
                std::to_string(spec.units.size()));
  for (auto u : spec.units)
    if (u == 0) throw Error("stretched spec: units must be nonzero");
}

Ideal stretched_ideal(const StretchedSpec& spec, const RingPtr& ring) {
  validate(spec);
  const int c = spec.c, s = spec.s, r = spec.r;
  if (static_cast<int>(ring->num_vars()) != c) throw Error("stretched ideal: ring must have c variables");
  const auto& F = ring->field();
  for (auto u : spec.units)
    if (u >= F.modulus()) throw Error("stretched spec: unit is not reduced modulo p");
  auto x = [&](int i) { return Monomial::variable(static_cast<std::size_t>(i - 1)); };  // 1-based

  std::vector<Polynomial> gens;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= c; ++j) gens.push_back(mono(ring, x(i) * x(j)));
  if (r == c - 1) {
    gens.push_back(mono(ring, Monomial::variable(c - 1, s + 1)));
  } else {
    for (int i = 1; i <= c - r; ++i)
      for (int j = i + 1; j <= c - r; ++j) gens.push_back(mono(ring, x(r + i) * x(r + j)));
    for (int i = 1; i <= c - r - 1; ++i) {
      const Coeff u = spec.units.empty() ? 1 : spec.units[i - 1];
      gens.emplace_back(ring, std::vector<Term>{Term{1, Monomial::variable(c - 1, s)},
                                                Term{F.neg(u), Monomial::variable(r + i - 1, 2)}});
    }
  }
  for (auto& m : truncation(ring, s + 1)) gens.push_back(std::move(m));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_L(int c, int s, const RingPtr& ring) {
  if (c < 2 || s < 2) throw Error("ideal L needs c >= 2 and s >= 2");
  if (static_cast<int>(ring->num_vars()) != c) throw Error("ideal L: ring must have c variables");
  const auto last = static_cast<std::size_t>(c - 1);
  const Monomial xc_cubed = Monomial::variable(last, 3);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < last; ++i) {
    const Monomial xi = Monomial::variable(i);
    for (const auto& h : monomials_of_degree(c, 3, ring->order()))
      if (!(h == xc_cubed)) gens.push_back(mono(ring, xi * h));
    gens.push_back(mono(ring, xi * Monomial::variable(last, s + 1)));
  }
  gens.push_back(mono(ring, Monomial::variable(last, 2 * s)));
  // x_i * H repeats monomials; the Ideal keeps them, minimal_generators would not
  return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> truncation(const RingPtr& ring, int d) {
  if (d < 1) throw Error("truncation degree must be positive");
  std::vector<Polynomial> out;
  for (const auto& m : monomials_of_degree(ring->num_vars(), d, ring->order())) out.push_back(mono(ring, m));
  return out;
}

Polarization polarize(const Ideal& monomial_ideal) {
  const auto& ring = monomial_ideal.ring();
  const std::size_t n = ring->num_vars();
  std::vector<int> top(n, 0);
  for (const auto& g : monomial_ideal.generators()) {
    if (g.size() != 1) throw Error("polarize: generator is not a monomial: " + g.to_string());
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g.lead_monomial()[i]);
  }
  std::vector<std::string> names;
  std::vector<std::size_t> first(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = names.size();
    for (int j = 0; j < top[i]; ++j) names.push_back(ring->names()[i] + "_" + std::to_string(j));
  }
  if (names.size() > kMaxVars) throw Error("polarize: too many variables");
  auto target = std::make_shared<const Ring>(ring->field(), names, ring->order());
  std::vector<Polynomial> gens;
  for (const auto& g : monomial_ideal.generators()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < g.lead_monomial()[i]; ++j) m = m * Monomial::variable(first[i] + j);
    gens.push_back(Polynomial::monomial(target, g.lead_coeff(), m));
  }
  Polarization out{Ideal(target, std::move(gens)), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < top[i]; ++j) out.assignment.emplace(names[first[i] + j], Polynomial::variable(ring, i));
  return out;
}

std::span<const std::string_view> example61_generators() { return kExample61; }

std::uint64_t transcription_checksum(std::span<const std::string_view> generators) {
  // FNV-1a over the lines joined by '\n'
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](unsigned char b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k) mix('\n');
    for (char ch : generators[k]) mix(static_cast<unsigned char>(ch));
  }
  return h;
}

RingPtr example61_ring(MonomialOrder order) {
  return make_ring(kExample61Prime, {"a", "b", "c", "d", "e", "f"}, order);
}

Ideal example61_ideal(const RingPtr& ring) { return example61_ideal(ring, kExample61); }

Ideal example61_ideal(const RingPtr& ring, std::span<const std::string_view> generators) {
  if (transcription_checksum(generators) != kExample61Checksum)
    throw Error("example ideal: transcription checksum mismatch");
  if (ring->field().modulus() != kExample61Prime) throw Error("example ideal: needs p = 31991");
  if (ring->names() != std::vector<std::string>{"a", "b", "c", "d", "e", "f"})
    throw Error("example ideal: needs variables a, b, c, d, e, f");
  std::vector<Polynomial> gens;
  std::size_t line = 1;
  for (auto g : generators) gens.push_back(parse_polynomial(ring, g, line++));
  return Ideal(ring, std::move(gens));
}

}  // namespace conormal
