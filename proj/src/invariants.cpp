#include "conormal/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "conormal/error.hpp"
#include "conormal/linalg.hpp"

namespace conormal {

int HilbertFunction::length() const { return std::accumulate(values.begin(), values.end(), 0); }

namespace {

// The Artinian algebra R/I on its standard-monomial basis.
class Quotient {
 public:
  explicit Quotient(const GroebnerBasis& gb) : gb_(gb), basis_(standard_monomials(gb)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
    const std::size_t n = gb.ring()->num_vars();
    images_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto x = Polynomial::variable(gb.ring(), i);
      for (const auto& b : basis_) images_[i].push_back(coords(x.mul_term(1, b)));
    }
  }

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t num_vars() const noexcept { return images_.size(); }
  const PrimeField& field() const noexcept { return gb_.ring()->field(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }

  Vector coords(const Polynomial& f) const {
    Vector v(dim(), 0);
    const Polynomial nf = normal_form(f, gb_);
    for (const auto& t : nf.terms()) v[index_.at(t.mono)] = t.coeff;
    return v;
  }

  Polynomial element(const Vector& v) const {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) terms.push_back(Term{v[k], basis_[k]});
    return Polynomial(gb_.ring(), std::move(terms));
  }

  /// x_var * v
  Vector multiply(std::size_t var, const Vector& v) const {
    const auto& F = field();
    Vector out(dim(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k]) continue;
      const auto& col = images_[var][k];
      for (std::size_t r = 0; r < col.size(); ++r)
        if (col[r]) out[r] = F.add(out[r], F.mul(v[k], col[r]));
    }
    return out;
  }

  /// Bases of m^d A for d = 0, 1, ... until the zero space (inclusive).
  std::vector<std::vector<Vector>> filtration() const {
    std::vector<std::vector<Vector>> levels;
    std::vector<Vector> current;
    for (std::size_t k = 0; k < dim(); ++k) {
      Vector e(dim(), 0);
      e[k] = 1;
      current.push_back(std::move(e));
    }
    levels.push_back(current);
    while (!current.empty()) {
      EchelonSpace next(field(), dim());
      for (const auto& v : current)
        for (std::size_t i = 0; i < num_vars(); ++i) next.insert(multiply(i, v));
      if (next.rank() == current.size())
        throw Error("quotient is not local: the maximal-ideal filtration does not reach zero");
      current.assign(next.rows().begin(), next.rows().end());
      levels.push_back(current);
    }
    return levels;
  }

  /// Basis of { v in span(space) : x_i v = 0 for all i }.
  std::vector<Vector> annihilated_part(const std::vector<Vector>& space) const {
    if (space.empty()) return {};
    std::vector<Vector> rows;
    std::vector<std::vector<Vector>> images(space.size());
    for (std::size_t k = 0; k < space.size(); ++k)
      for (std::size_t i = 0; i < num_vars(); ++i) images[k].push_back(multiply(i, space[k]));
    for (std::size_t i = 0; i < num_vars(); ++i)
      for (std::size_t r = 0; r < dim(); ++r) {
        Vector row(space.size());
        for (std::size_t k = 0; k < space.size(); ++k) row[k] = images[k][i][r];
        rows.push_back(std::move(row));
      }
    const auto& F = field();
    std::vector<Vector> out;
    for (const auto& a : nullspace(F, rows, space.size())) {
      Vector v(dim(), 0);
      for (std::size_t k = 0; k < space.size(); ++k)
        if (a[k])
          for (std::size_t r = 0; r < dim(); ++r) v[r] = F.add(v[r], F.mul(a[k], space[k][r]));
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  const GroebnerBasis& gb_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<std::vector<Vector>> images_;  // images_[var][k] = coords of x_var * basis_k
};

HilbertFunction from_filtration(const std::vector<std::vector<Vector>>& levels) {
  HilbertFunction hf;
  for (std::size_t d = 0; d + 1 < levels.size(); ++d)
    hf.values.push_back(static_cast<int>(levels[d].size() - levels[d + 1].size()));
  return hf;
}

int initial_degree(const Vector& v, const PrimeField& F, const std::vector<std::vector<Vector>>& levels) {
  int deg = 0;
  for (std::size_t d = 1; d < levels.size(); ++d) {
    EchelonSpace s(F, v.size());
    for (const auto& w : levels[d]) s.insert(w);
    if (!s.contains(v)) break;
    deg = static_cast<int>(d);
  }
  return deg;
}

}  // namespace

HilbertFunction hilbert_function_by_filtration(const GroebnerBasis& gb) {
  Quotient q(gb);
  return from_filtration(q.filtration());
}

HilbertFunction hilbert_function(const GroebnerBasis& gb) {
  if (!gb.is_homogeneous()) return hilbert_function_by_filtration(gb);
  HilbertFunction hf;
  for (const auto& m : standard_monomials(gb)) {
    if (static_cast<int>(hf.values.size()) <= m.degree()) hf.values.resize(m.degree() + 1, 0);
    ++hf.values[m.degree()];
  }
  return hf;
}

int length(const GroebnerBasis& gb) { return static_cast<int>(standard_monomials(gb).size()); }

std::vector<SocleElement> socle(const GroebnerBasis& gb) {
  Quotient q(gb);
  const auto levels = q.filtration();
  EchelonSpace seen(q.field(), q.dim());
  std::vector<SocleElement> out;
  for (std::size_t d = levels.size(); d-- > 0;) {
    for (const auto& v : q.annihilated_part(levels[d]))
      if (seen.insert(v)) out.push_back(SocleElement{q.element(v), static_cast<int>(d)});
  }
  return out;
}

InvariantReport classify(const HilbertFunction& hf, std::vector<int> socle_degrees) {
  InvariantReport r;
  r.hf = hf;
  r.length = hf.length();
  r.embdim = hf.at(1);
  r.socle_degree = hf.socle_degree();
  std::sort(socle_degrees.begin(), socle_degrees.end());
  r.socle_degrees = std::move(socle_degrees);
  r.type = static_cast<int>(r.socle_degrees.size());
  r.gorenstein = r.type == 1;
  r.level = !r.socle_degrees.empty() &&
            std::all_of(r.socle_degrees.begin(), r.socle_degrees.end(), [&](int d) { return d == r.socle_degree; });
  r.stretched = true;
  for (int i = 2; i <= r.socle_degree; ++i)
    if (hf.at(i) != 1) r.stretched = false;
  r.short_algebra = true;
  // HF(j) = C(c-1+j, j) for j < s
  long long binom = 1;
  for (int j = 0; j < r.socle_degree; ++j) {
    if (j > 0) binom = binom * (r.embdim - 1 + j) / j;
    if (hf.at(j) != binom) r.short_algebra = false;
  }
  return r;
}

InvariantReport invariant_report(const GroebnerBasis& gb) {
  auto hf = hilbert_function(gb);
  std::vector<int> degrees;
  for (const auto& e : socle(gb)) degrees.push_back(e.degree);
  return classify(hf, std::move(degrees));
}

GroebnerBasis quotient_by_socle_element(const GroebnerBasis& gb, const Polynomial& f) {
  Polynomial nf = normal_form(f, gb);
  if (nf.is_zero()) throw Error("element already lies in the ideal");
  for (std::size_t i = 0; i < gb.ring()->num_vars(); ++i)
    if (!contains(gb, Polynomial::variable(gb.ring(), i) * nf)) throw Error("element is not in the socle");
  Quotient q(gb);
  const auto levels = q.filtration();
  const int j = initial_degree(q.coords(nf), q.field(), levels);
  const auto before = from_filtration(levels);

  std::vector<Polynomial> gens(gb.elements().begin(), gb.elements().end());
  gens.push_back(nf);
  auto result = buchberger(Ideal(gb.ring(), std::move(gens)));
  auto after = gb.is_homogeneous() && nf.is_homogeneous() ? hilbert_function(result) : hilbert_function_by_filtration(result);
  auto expected = before;
  --expected.values[j];
  while (!expected.values.empty() && expected.values.back() == 0) expected.values.pop_back();
  if (!(after == expected)) throw Error("Hilbert function did not drop by one at the socle degree");
  return result;
}

LinearElimination eliminate_linear_forms(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Error("linear-form elimination needs a homogeneous ideal");
  const auto& ring = ideal.ring();
  const auto& F = ring->field();
  const std::size_t n = ring->num_vars();
  EchelonSpace forms(F, n);
  for (const auto& g : ideal.generators()) {
    if (g.degree() != 1) continue;
    Vector v(n, 0);
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (t.mono[i]) v[i] = t.coeff;
    forms.insert(std::move(v));
  }
  std::vector<bool> pivot(n, false);
  for (auto p : forms.pivots()) pivot[p] = true;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) kept.push_back(ring->names()[i]);
  LinearElimination out;
  out.ring = std::make_shared<const Ring>(F, kept, ring->order());
  out.eliminated = static_cast<int>(forms.rank());

  std::map<std::string, Polynomial> assignment;
  for (std::size_t i = 0, k = 0; i < n; ++i)
    if (!pivot[i]) assignment.emplace(ring->names()[i], Polynomial::variable(out.ring, k++));
  for (std::size_t r = 0; r < forms.rank(); ++r) {
    // x_pivot = -(sum of the non-pivot part)
    const auto& row = forms.rows()[r];
    std::vector<Term> terms;
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (pivot[i]) continue;
      if (row[i]) terms.push_back(Term{F.neg(row[i]), Monomial::variable(k)});
      ++k;
    }
    assignment.emplace(ring->names()[forms.pivots()[r]], Polynomial(out.ring, std::move(terms)));
  }
  for (const auto& g : ideal.generators()) {
    auto h = substitute(g, out.ring, assignment);
    if (!h.is_zero()) out.generators.push_back(std::move(h));
  }
  return out;
}

std::string to_key_value(const InvariantReport& r) {
  std::ostringstream os;
  auto join = [&os](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  };
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << "hf: ";
  join(r.hf.values);
  os << "\nlambda: " << r.length << "\nc: " << r.embdim << "\ns: " << r.socle_degree << "\ntau: " << r.type
     << "\ngorenstein: " << flag(r.gorenstein) << "\nlevel: " << flag(r.level) << "\nstretched: " << flag(r.stretched)
     << "\nshort: " << flag(r.short_algebra) << "\nsocle_degrees: ";
  join(r.socle_degrees);
  os << '\n';
  return os.str();
}

}  // namespace conormal
