#include "conormal/points.hpp"

#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "conormal/error.hpp"
#include "conormal/linalg.hpp"

namespace conormal {

namespace {

std::vector<Coeff> normalize(const PrimeField& F, std::vector<Coeff> v) {
  for (auto x : v)
    if (x != 0) {
      const Coeff inv = F.inv(x);
      for (auto& y : v) y = F.mul(y, inv);
      return v;
    }
  throw Error("point with all coordinates zero");
}

// number of points of P^c(GF(p)), saturated
std::uint64_t projective_count(int c, std::uint32_t p) {
  std::uint64_t total = 0, power = 1;
  for (int i = 0; i <= c; ++i) {
    total += power;
    if (total > (1ull << 40)) return total;
    power *= p;
  }
  return total;
}

Coeff eval_monomial(const PrimeField& F, const Monomial& m, const std::vector<Coeff>& point) {
  Coeff v = 1;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (m[i]) v = F.mul(v, F.pow(point[i], m[i]));
  return v;
}

Vector eval_vector(const PrimeField& F, const Monomial& m, const PointSet& ps) {
  Vector v(ps.points.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = eval_monomial(F, m, ps.points[k]);
  return v;
}

void check_ring(const PointSet& ps, const RingPtr& ring) {
  if (static_cast<int>(ring->num_vars()) != ps.c + 1 || ring->field().modulus() != ps.p)
    throw Error("ring does not match the point set");
}

}  // namespace

PointSet make_point_set(int c, std::uint32_t p, std::vector<std::vector<std::int64_t>> coordinates) {
  if (c < 1) throw Error("point set: c must be positive");
  if (coordinates.empty()) throw Error("point set: no points");
  PrimeField F(p);
  PointSet ps{c, p, {}, std::nullopt};
  std::set<std::vector<Coeff>> seen;
  for (const auto& raw : coordinates) {
    if (static_cast<int>(raw.size()) != c + 1)
      throw Error("point set: expected " + std::to_string(c + 1) + " coordinates per point");
    std::vector<Coeff> v;
    for (auto x : raw) v.push_back(F.from_int(x));
    v = normalize(F, std::move(v));
    if (!seen.insert(v).second) throw Error("point set: repeated point");
    ps.points.push_back(std::move(v));
  }
  return ps;
}

PointSet random_points(int c, int n, std::uint32_t p, std::uint64_t seed) {
  if (c < 1 || n < 1) throw Error("random points: c and n must be positive");
  PrimeField F(p);
  if (projective_count(c, p) < static_cast<std::uint64_t>(n))
    throw Error("random points: P^" + std::to_string(c) + " over GF(" + std::to_string(p) + ") has fewer than " +
                std::to_string(n) + " points");
  std::mt19937_64 rng(seed);
  PointSet ps{c, p, {}, seed};
  std::set<std::vector<Coeff>> seen;
  while (ps.size() < n) {
    std::vector<Coeff> v(c + 1);
    bool zero = true;
    for (auto& x : v) {
      x = static_cast<Coeff>(rng() % p);
      zero = zero && x == 0;
    }
    if (zero) continue;
    v = normalize(F, std::move(v));
    if (seen.insert(v).second) ps.points.push_back(std::move(v));
  }
  return ps;
}

RingPtr point_ring(const PointSet& ps, MonomialOrder order) {
  return make_ring(ps.p, indexed_names("x", static_cast<std::size_t>(ps.c + 1)), order);
}

Coeff evaluate(const Polynomial& f, const std::vector<Coeff>& point) {
  const auto& F = f.ring()->field();
  if (f.ring()->num_vars() != point.size()) throw Error("evaluate: coordinate count mismatch");
  Coeff sum = 0;
  for (const auto& t : f.terms()) sum = F.add(sum, F.mul(t.coeff, eval_monomial(F, t.mono, point)));
  return sum;
}

GroebnerBasis vanishing_ideal(const PointSet& ps, MonomialOrder order) {
  return vanishing_ideal(ps, point_ring(ps, order));
}

GroebnerBasis vanishing_ideal(const PointSet& ps, const RingPtr& ring) {
  check_ring(ps, ring);
  const auto& F = ring->field();
  const std::size_t nvars = ring->num_vars();
  const std::size_t n = ps.points.size();
  std::vector<Polynomial> found;
  std::vector<Monomial> leads;
  int previous = -1;
  for (int d = 0;; ++d) {
    std::vector<Monomial> candidates;
    for (const auto& m : monomials_of_degree(nvars, d, ring->order())) {
      bool standard = true;
      for (const auto& l : leads) standard = standard && !l.divides(m);
      if (standard) candidates.push_back(m);
    }
    // [evaluations | which candidate], candidates in increasing order
    const std::size_t K = candidates.size();
    EchelonSpace space(F, n + K, n);
    std::vector<Monomial> new_leads;
    for (std::size_t k = 0; k < K; ++k) {
      Vector v = eval_vector(F, candidates[k], ps);
      v.resize(n + K, 0);
      v[n + k] = 1;
      Vector r = space.reduce(v);
      bool dependent = std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n), [](Coeff x) { return x == 0; });
      if (!dependent) {
        space.insert(std::move(v));
        continue;
      }
      std::vector<Term> terms;
      for (std::size_t j = 0; j < K; ++j)
        if (r[n + j]) terms.push_back(Term{r[n + j], candidates[j]});
      found.emplace_back(ring, std::move(terms));
      new_leads.push_back(candidates[k]);
    }
    leads.insert(leads.end(), new_leads.begin(), new_leads.end());
    const int hf = static_cast<int>(space.rank());
    if (hf == static_cast<int>(n) && previous == hf) break;
    previous = hf;
  }
  auto gb = buchberger(Ideal(ring, found));
  for (const auto& g : gb.elements())
    for (const auto& pt : ps.points)
      if (evaluate(g, pt) != 0) throw Error("vanishing ideal: basis element does not vanish at a point");
  return gb;
}

std::vector<int> coordinate_ring_hf(const PointSet& ps) {
  PrimeField F(ps.p);
  const int n = ps.size();
  std::vector<int> hf;
  for (int d = 0; hf.empty() || hf.back() < n; ++d) {
    std::vector<Vector> rows;
    for (const auto& m : monomials_of_degree(static_cast<std::size_t>(ps.c + 1), d, MonomialOrder::degrevlex))
      rows.push_back(eval_vector(F, m, ps));
    hf.push_back(static_cast<int>(rank(F, rows, static_cast<std::size_t>(n))));
  }
  return hf;
}

GeneralPositionCertificate general_position_check(const PointSet& ps) {
  GeneralPositionCertificate cert;
  cert.achieved_hf = coordinate_ring_hf(ps);
  const std::int64_t n = ps.size();
  for (std::size_t i = 0; i < cert.achieved_hf.size() || cert.expected_hf.empty() || cert.expected_hf.back() < n;
       ++i) {
    // C(c+i, i), capped at n
    std::int64_t b = 1;
    for (std::size_t j = 1; j <= i && b < n; ++j) b = b * static_cast<std::int64_t>(ps.c + j) / static_cast<std::int64_t>(j);
    cert.expected_hf.push_back(static_cast<int>(std::min(b, n)));
  }
  cert.achieved = true;
  for (std::size_t i = 0; i < cert.expected_hf.size(); ++i) {
    const int got = i < cert.achieved_hf.size() ? cert.achieved_hf[i] : static_cast<int>(n);
    if (got != cert.expected_hf[i]) cert.achieved = false;
  }
  return cert;
}

GeneralPoints random_general_points(int c, int n, std::uint32_t p, std::uint64_t seed, int max_redraws) {
  for (int k = 0; k <= max_redraws; ++k) {
    auto ps = random_points(c, n, p, seed + static_cast<std::uint64_t>(k));
    auto cert = general_position_check(ps);
    if (cert.achieved) return GeneralPoints{std::move(ps), std::move(cert), k};
  }
  throw Error("no general point set after " + std::to_string(max_redraws) + " re-draws");
}

std::string write_point_set(const PointSet& ps) {
  std::ostringstream os;
  os << "P " << ps.c << ' ' << ps.p << ' ' << ps.size() << '\n';
  for (const auto& pt : ps.points) {
    for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? " " : "") << pt[i];
    os << '\n';
  }
  return os.str();
}

PointSet read_point_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty point file", 1, 1);
  std::istringstream header(line);
  std::string tag;
  long long c = 0, p = 0, n = 0;
  if (!(header >> tag >> c >> p >> n) || tag != "P" || c < 1 || p < 3 || p > 2147483647 || n < 1)
    throw ParseError("expected header 'P <c> <p> <n>'", line_no, 1);
  std::vector<std::vector<std::int64_t>> coords;
  while (static_cast<long long>(coords.size()) < n) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) + " points", line_no + 1, 1);
    std::istringstream row(line);
    std::vector<std::int64_t> v;
    std::int64_t x;
    while (row >> x) v.push_back(x);
    if (!row.eof() || static_cast<long long>(v.size()) != c + 1)
      throw ParseError("expected " + std::to_string(c + 1) + " integer coordinates", line_no, 1);
    coords.push_back(std::move(v));
  }
  if (next_line()) throw ParseError("trailing content after the points", line_no, 1);
  return make_point_set(static_cast<int>(c), static_cast<std::uint32_t>(p), std::move(coords));
}

}  // namespace conormal
