#include "conormal/groebner.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "conormal/error.hpp"
#include "conormal/linalg.hpp"

namespace conormal {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) throw Error("an ideal needs at least one nonzero generator");
}

bool Ideal::is_homogeneous() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, std::uint64_t steps)
    : ring_(std::move(ring)), elements_(std::move(elements)), steps_(steps) {}

bool GroebnerBasis::is_homogeneous() const noexcept {
  return std::all_of(elements_.begin(), elements_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool GroebnerBasis::is_unit_ideal() const noexcept {
  return elements_.size() == 1 && elements_.front().lead_monomial().is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.lead_monomial());
  return out;
}

namespace {

// out = a[a_from..] + c * m * b[b_from..], all inputs sorted decreasingly.
void merge_scaled(const PrimeField& F, MonomialOrder order, std::span<const Term> a, Coeff c, const Monomial& m,
                  std::span<const Term> b, std::vector<Term>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term pending{};
  bool have = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have) {
      pending = Term{F.mul(c, b[j].coeff), b[j].mono * m};
      have = true;
    }
    if (i == a.size()) {
      out.push_back(pending);
      have = false;
      ++j;
      continue;
    }
    if (!have) {
      out.push_back(a[i++]);
      continue;
    }
    auto cmp = compare(a[i].mono, pending.mono, order);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(pending);
      have = false;
      ++j;
    } else {
      Coeff s = F.add(a[i].coeff, pending.coeff);
      if (s) out.push_back(Term{s, a[i].mono});
      ++i;
      ++j;
      have = false;
    }
  }
}

struct Divisor {
  Monomial lead;
  std::uint32_t mask;
  const Polynomial* poly;
};

class Reducer {
 public:
  Reducer(RingPtr ring, std::uint64_t budget, std::uint64_t& steps)
      : ring_(std::move(ring)), budget_(budget), steps_(steps) {}

  void add(const Polynomial* p) { divisors_.push_back(Divisor{p->lead_monomial(), p->lead_monomial().support(), p}); }
  void remove(const Polynomial* p) {
    std::erase_if(divisors_, [p](const Divisor& d) { return d.poly == p; });
  }

  const Divisor* find(const Monomial& m) const {
    const auto mask = m.support();
    for (const auto& d : divisors_)
      if ((d.mask & ~mask) == 0 && d.lead.divides(m)) return &d;
    return nullptr;
  }

  /// Full reduction; the divisors must be monic.
  Polynomial reduce(const Polynomial& f) {
    const auto& F = ring_->field();
    const auto order = ring_->order();
    std::vector<Term> work(f.terms().begin(), f.terms().end());
    std::vector<Term> next;
    std::vector<Term> result;
    std::size_t pos = 0;
    while (pos < work.size()) {
      const Term t = work[pos];
      const Divisor* d = find(t.mono);
      if (!d) {
        result.push_back(t);
        ++pos;
        continue;
      }
      if (++steps_ > budget_) throw BudgetExceeded(steps_);
      auto tail = d->poly->terms().subspan(1);
      merge_scaled(F, order, std::span<const Term>(work).subspan(pos + 1), F.neg(t.coeff), d->lead.divide_into(t.mono),
                   tail, next);
      std::swap(work, next);
      pos = 0;
    }
    return Polynomial::from_sorted(ring_, std::move(result));
  }

 private:
  RingPtr ring_;
  std::uint64_t budget_;
  std::uint64_t& steps_;
  std::vector<Divisor> divisors_;
};

struct Item {
  int i;
  int j;  // -1 marks an input generator
  Monomial lcm;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const auto& F = f.field();
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial a = f.mul_term(F.inv(f.lead_coeff()), f.lead_monomial().divide_into(l));
  Polynomial b = g.mul_term(F.inv(g.lead_coeff()), g.lead_monomial().divide_into(l));
  return a - b;
}

GroebnerBasis buchberger(const Ideal& ideal, BuchbergerOptions options) {
  return buchberger(ideal, ideal.ring()->order(), options);
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, BuchbergerOptions options) {
  RingPtr ring = with_order(ideal.ring(), order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ring));

  std::uint64_t steps = 0;
  Reducer reducer(ring, options.step_budget, steps);
  // stable addresses: reserve is not enough once the basis grows, so hold by index
  std::vector<std::unique_ptr<Polynomial>> basis;
  std::vector<Monomial> leads;
  std::vector<char> active;

  std::vector<Item> queue;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) queue.push_back(Item{i, -1, gens[i].lead_monomial()});

  auto before = [order](const Item& a, const Item& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = compare(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;  // input generators first
    return a.i < b.i;
  };

  auto update = [&](int t) {
    const Monomial& lt = leads[t];
    std::vector<Item> candidates;
    for (int i = 0; i < t; ++i)
      if (active[i]) candidates.push_back(Item{i, t, lcm(leads[i], lt)});
    std::vector<Item> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Item& p = candidates[k];
      bool keep = coprime(leads[p.i], lt);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < candidates.size() && keep; ++q)
          if (candidates[q].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : kept)
          if (!keep || q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(queue, [&](const Item& it) {
      if (it.j < 0 || !lt.divides(it.lcm)) return false;
      return lcm(leads[it.i], lt) != it.lcm && lcm(leads[it.j], lt) != it.lcm;
    });
    for (const auto& p : kept)
      if (!coprime(leads[p.i], lt)) queue.push_back(p);
    for (int i = 0; i < t; ++i)
      if (active[i] && lt.divides(leads[i])) {
        active[i] = 0;
        reducer.remove(basis[i].get());
      }
    active[t] = 1;
    reducer.add(basis[t].get());
  };

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), before);
    Item item = *it;
    *it = queue.back();
    queue.pop_back();

    Polynomial h = item.j < 0 ? gens[item.i] : s_polynomial(*basis[item.i], *basis[item.j]);
    h = reducer.reduce(h);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.lead_monomial().is_one()) {
      return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, steps);
    }
    basis.push_back(std::make_unique<Polynomial>(std::move(h)));
    leads.push_back(basis.back()->lead_monomial());
    active.push_back(0);
    update(static_cast<int>(basis.size()) - 1);
  }

  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!active[i]) continue;
    const Polynomial& g = *basis[i];
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    Polynomial t = reducer.reduce(Polynomial::from_sorted(ring, std::move(tail)));
    std::vector<Term> terms{g.leading_term()};
    terms.insert(terms.end(), t.terms().begin(), t.terms().end());
    reduced.push_back(Polynomial::from_sorted(ring, std::move(terms)));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead_monomial(), b.lead_monomial(), order) < 0;
  });
  return GroebnerBasis(ring, std::move(reduced), steps);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::uint64_t steps = 0;
  Reducer reducer(gb.ring(), UINT64_MAX, steps);
  for (const auto& g : gb.elements()) reducer.add(&g);
  return reducer.reduce(f.in_ring(gb.ring()));
}

bool contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

bool contains(const GroebnerBasis& gb, const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Polynomial& g) { return contains(gb, g); });
}

GroebnerBasis GroebnerBasis::from_reduced(RingPtr ring, std::vector<Polynomial> elements) {
  const auto order = ring->order();
  for (auto& g : elements) {
    g = g.in_ring(ring);
    if (g.is_zero() || g.lead_coeff() != 1) throw Error("basis elements must be nonzero and monic");
  }
  std::sort(elements.begin(), elements.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead_monomial(), b.lead_monomial(), order) < 0;
  });
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : elements[j].terms())
        if (elements[i].lead_monomial().divides(t.mono)) throw Error("basis is not reduced");
    }
  GroebnerBasis gb(std::move(ring), std::move(elements), 0);
  if (!satisfies_buchberger_criterion(gb)) throw Error("elements do not form a Groebner basis");
  return gb;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Polynomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_square(const Ideal& a) {
  auto gens = a.generators();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      Polynomial p = (gens[i] * gens[j]).monic();
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  return Ideal(a.ring(), std::move(out));
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->num_vars();
  if (gb.is_unit_ideal()) return true;
  std::vector<bool> seen(n, false);
  for (const auto& g : gb.elements()) {
    const auto& m = g.lead_monomial();
    auto s = m.support();
    if (s && (s & (s - 1)) == 0) {
      for (std::size_t i = 0; i < n; ++i)
        if (m[i]) seen[i] = true;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) throw NotZeroDimensional();
  if (gb.is_unit_ideal()) return {};
  const auto leads = gb.leading_monomials();
  const auto order = gb.order();
  const std::size_t n = gb.ring()->num_vars();
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> result{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  while (!layer.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : layer)
      for (std::size_t i = 0; i < n; ++i) {
        Monomial c = m * Monomial::variable(i);
        if (standard(c)) next.push_back(c);
      }
    std::sort(next.begin(), next.end(), [order](const Monomial& a, const Monomial& b) { return compare(a, b, order) < 0; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    result.insert(result.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return result;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  auto els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (coprime(els[i].lead_monomial(), els[j].lead_monomial())) continue;
      if (!normal_form(s_polynomial(els[i], els[j]), gb).is_zero()) return false;
    }
  return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree, MonomialOrder order) {
  std::vector<Monomial> out;
  if (degree < 0 || num_vars == 0) return out;
  std::vector<int> exps(num_vars, 0);
  // enumerate compositions of `degree` into num_vars parts
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == num_vars) {
      exps[var] = left;
      out.emplace_back(std::span<const int>(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) { return compare(a, b, order) < 0; });
  return out;
}

std::vector<Polynomial> irredundant_generators(const Ideal& ideal, MonomialOrder order, BuchbergerOptions options) {
  std::vector<Polynomial> kept;
  std::optional<GroebnerBasis> gb;
  for (const auto& g : ideal.generators()) {
    if (gb && contains(*gb, g)) continue;
    kept.push_back(g);
    gb = buchberger(Ideal(ideal.ring(), kept), order, options);
  }
  return kept;
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Error("minimal generators are only computed for homogeneous ideals");
  const auto& ring = ideal.ring();
  const auto& F = ring->field();
  const std::size_t n = ring->num_vars();
  std::vector<Polynomial> gens(ideal.generators().begin(), ideal.generators().end());
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  for (const auto& g : gens)
    if (g.degree() == 0) return {Polynomial::constant(ring, 1)};

  std::vector<Polynomial> chosen;
  std::size_t k = 0;
  while (k < gens.size()) {
    const int d = gens[k].degree();
    auto monos = monomials_of_degree(n, d, ring->order());
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    auto to_vec = [&](const Polynomial& p) {
      Vector v(monos.size(), 0);
      for (const auto& t : p.terms()) v[index.at(t.mono)] = t.coeff;
      return v;
    };
    EchelonSpace space(F, monos.size());
    for (const auto& c : chosen)
      for (const auto& u : monomials_of_degree(n, d - c.degree(), ring->order())) space.insert(to_vec(c.mul_term(1, u)));
    for (; k < gens.size() && gens[k].degree() == d; ++k)
      if (space.insert(to_vec(gens[k]))) chosen.push_back(gens[k]);
  }
  return chosen;
}

std::string write_basis(const GroebnerBasis& gb) {
  std::ostringstream os;
  os << "order " << to_string(gb.order()) << '\n';
  for (const auto& g : gb.elements()) os << g.to_string() << '\n';
  return os.str();
}

GroebnerBasis read_basis(const RingPtr& ring, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<RingPtr> target;
  std::vector<Polynomial> elements;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!target) {
      std::istringstream hs(line);
      std::string kw, name;
      hs >> kw >> name;
      if (kw != "order") throw ParseError("expected 'order <name>'", lineno, 1);
      target = with_order(ring, parse_order(name));
      continue;
    }
    elements.push_back(parse_polynomial(*target, line, lineno));
  }
  if (!target) throw ParseError("missing order declaration", lineno + 1, 1);
  return GroebnerBasis::from_reduced(*target, std::move(elements));
}

}  // namespace conormal
