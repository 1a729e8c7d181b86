#include "conormal/cm_checks.hpp"

#include <algorithm>
#include <sstream>

#include "conormal/error.hpp"

namespace conormal {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<Polynomial> generators_of(const GroebnerBasis& gb) {
  if (!gb.is_homogeneous()) throw Error("positive-dimensional input must be homogeneous");
  return minimal_generators(gb.ideal());
}

LinearElimination cut_by_form(const RingPtr& ring, std::span<const Polynomial> gens, const Polynomial& form) {
  const std::size_t n = ring->num_vars();
  if (n < 2) throw Error("need at least two variables to cut by a linear form");
  std::vector<Coeff> a(n, 0);
  for (const auto& t : form.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) a[i] = t.coeff;
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;)
    if (a[i]) {
      k = i;
      break;
    }
  if (k == n) throw Error("zero linear form");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) names.push_back(ring->names()[i]);
  const auto& F = ring->field();
  LinearElimination out;
  out.ring = std::make_shared<const Ring>(F, names, ring->order());
  out.eliminated = 1;
  std::map<std::string, Polynomial> assignment;
  std::vector<Term> solved;
  const Coeff scale = F.neg(F.inv(a[k]));
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (i == k) continue;
    assignment.emplace(ring->names()[i], Polynomial::variable(out.ring, j));
    if (a[i]) solved.push_back(Term{F.mul(scale, a[i]), Monomial::variable(j)});
    ++j;
  }
  assignment.emplace(ring->names()[k], Polynomial(out.ring, std::move(solved)));
  for (const auto& g : gens) {
    auto h = substitute(g, out.ring, assignment);
    if (!h.is_zero()) out.generators.push_back(std::move(h));
  }
  return out;
}

struct Cut {
  Polynomial form;
  LinearElimination image;
  std::optional<GroebnerBasis> gb;  // empty when the cut is not zero-dimensional
};

Cut cut(const GroebnerBasis& gb, std::span<const Polynomial> gens, std::uint64_t seed, BuchbergerOptions options) {
  auto form = random_linear_form(gb.ring(), seed);
  auto image = cut_by_form(gb.ring(), gens, form);
  Cut c{std::move(form), std::move(image), std::nullopt};
  if (c.image.generators.empty()) return c;
  auto reduced = buchberger(c.image.ideal(), options);
  if (is_zero_dimensional(reduced)) c.gb = std::move(reduced);
  return c;
}

int count_degree(const GroebnerBasis& gb, int d) {
  return static_cast<int>(std::count_if(gb.elements().begin(), gb.elements().end(),
                                        [d](const Polynomial& g) { return g.degree() == d; }));
}

}  // namespace

std::string_view to_string(CmStatus status) noexcept {
  switch (status) {
    case CmStatus::CM: return "CM";
    case CmStatus::NotCM: return "NotCM";
    case CmStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

int quotient_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) throw Error("unit ideal has an empty quotient");
  if (is_zero_dimensional(gb)) return 0;
  auto gens = generators_of(gb);
  // a general hyperplane cuts dimension by one
  if (cut(gb, gens, trial_seed(0, 0), {}).gb) return 1;
  throw Error("quotient has dimension at least 2; only points are supported");
}

ArtinianReduction artinian_reduction(const GroebnerBasis& gb, std::uint64_t seed, int trials,
                                     BuchbergerOptions options) {
  if (trials < 1) throw Error("trials must be positive");
  if (quotient_dimension(gb) != 1) throw Error("artinian reduction needs a one-dimensional quotient");
  auto gens = generators_of(gb);
  std::optional<ArtinianReduction> best;
  for (int t = 0; t < trials; ++t) {
    auto c = cut(gb, gens, trial_seed(seed, t), options);
    if (!c.gb) continue;
    const int len = static_cast<int>(standard_monomials(*c.gb).size());
    if (!best || len < best->length) best = ArtinianReduction{std::move(c.form), std::move(c.image), std::move(*c.gb), len};
  }
  if (!best) throw Error("no random linear form gave a zero-dimensional cut");
  return std::move(*best);
}

int multiplicity(const GroebnerBasis& gb, std::uint64_t seed, int trials) {
  if (quotient_dimension(gb) == 0) return length(gb);
  return artinian_reduction(gb, seed, trials).length;
}

CmVerdict is_cm_square(const GroebnerBasis& gb, std::uint64_t seed, int trials, std::uint64_t budget) {
  if (trials < 1) throw Error("trials must be positive");
  CmVerdict v;
  const BuchbergerOptions options{budget};
  try {
    if (quotient_dimension(gb) == 0) {
      const int len = length(buchberger(ideal_square(gb.ideal()), options));
      v.status = CmStatus::CM;
      v.lambda_min = len;
      v.e_expected = len;
      v.diagnostics = "zero-dimensional: every Artinian module is Cohen-Macaulay";
      return v;
    }
    auto gens = generators_of(gb);
    std::vector<Cut> cuts;
    int e = 0;
    for (int t = 0; t < trials; ++t) {
      auto c = cut(gb, gens, trial_seed(seed, t), options);
      if (!c.gb) continue;
      const int len = static_cast<int>(standard_monomials(*c.gb).size());
      if (e == 0 || len < e) e = len;
      cuts.push_back(std::move(c));
    }
    if (cuts.empty()) throw Error("no random linear form gave a zero-dimensional cut");
    v.e_expected = static_cast<int>(gb.ring()->num_vars()) * e;
    for (auto& c : cuts) {
      ++v.trials;
      auto square = buchberger(ideal_square(c.image.ideal()), options);
      const int len = static_cast<int>(standard_monomials(square).size());
      if (len < v.e_expected)
        throw Error("length " + std::to_string(len) + " below the multiplicity bound " + std::to_string(v.e_expected));
      if (!v.lambda_min || len < *v.lambda_min) v.lambda_min = len;
      if (len == v.e_expected) {
        v.status = CmStatus::CM;
        v.witness = c.form;
        v.diagnostics = "regular linear form found";
        return v;
      }
    }
    v.status = CmStatus::NotCM;
    v.diagnostics = "every trial form exceeded the bound; probabilistic over " + std::to_string(v.trials) + " forms";
  } catch (const BudgetExceeded& ex) {
    v.status = CmStatus::Inconclusive;
    v.diagnostics = std::string("step budget exhausted: ") + ex.what();
  }
  return v;
}

AnalysisReport analyze(const GroebnerBasis& gb, std::uint64_t seed, int trials, std::uint64_t budget) {
  AnalysisReport r;
  r.p = gb.ring()->field().modulus();
  r.seed = seed;
  r.nvars = static_cast<int>(gb.ring()->num_vars());
  r.dimension = quotient_dimension(gb);
  if (r.dimension == 0) {
    r.reduction = invariant_report(gb);
    r.multiplicity = r.reduction.length;
    r.q = count_degree(gb, 2);
  } else {
    auto red = artinian_reduction(gb, seed, trials, BuchbergerOptions{budget});
    r.reduction = invariant_report(red.gb);
    r.multiplicity = red.length;
    r.q = count_degree(red.gb, 2);
  }
  r.cm_square = is_cm_square(gb, seed, trials, budget);
  if (r.dimension == 0) return r;

  const auto& inv = r.reduction;
  const int c = inv.embdim, e = r.multiplicity, s = inv.socle_degree;
  auto add = [&](std::string name, auto&& compute) {
    try {
      r.criteria.push_back(CriteriaCheck{std::move(name), compute(), true});
    } catch (const Error&) {
      // outside the range where the closed form is evaluated
    }
  };
  if (c >= 1 && e > c) {
    add("low-multiplicity", [&] { return low_multiplicity_verdict(c, e); });
    add("multiplicity-codim", [&] { return multiplicity_codim_verdict(c, e); });
  }
  if (inv.stretched && s >= 2) add("stretched", [&] { return stretched_verdict(c, s, inv.gorenstein); });
  if (inv.short_algebra && s >= 3) add("short", [&] { return short_verdict(c, s); });
  if (inv.short_algebra && s == 2 && c >= 3) add("quadric-count", [&] { return quadric_count_verdict(c, r.q, inv.gorenstein); });

  for (auto& check : r.criteria) {
    const bool cm = r.cm_square.status == CmStatus::CM;
    if (check.verdict.outcome == Outcome::NotCM && cm) check.agrees = false;
    if (check.verdict.outcome == Outcome::PositiveAnswer && cm && !inv.gorenstein) check.agrees = false;
    r.agreement = r.agreement && check.agrees;
  }
  return r;
}

std::string to_key_value(const AnalysisReport& r) {
  std::ostringstream os;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << "p: " << r.p << "\nseed: " << r.seed << "\nnvars: " << r.nvars << "\ndimension: " << r.dimension
     << "\nmultiplicity: " << r.multiplicity << '\n';
  os << to_key_value(r.reduction);
  os << "q: " << r.q << '\n';
  const auto& cm = r.cm_square;
  os << "cm_square: " << to_string(cm.status) << "\ncm_square.lambda_min: "
     << (cm.lambda_min ? std::to_string(*cm.lambda_min) : "none") << "\ncm_square.e_expected: " << cm.e_expected
     << "\ncm_square.trials: " << cm.trials << "\ncm_square.witness: " << (cm.witness ? cm.witness->to_string() : "none")
     << "\ncm_square.diagnostics: " << cm.diagnostics
     << "\ncm_square.certificate: CM is certified by a witness form; NotCM is probabilistic\n";
  for (const auto& check : r.criteria) {
    os << "criteria." << check.name << ": " << to_string(check.verdict.outcome);
    if (!check.verdict.rule.empty()) os << " (" << check.verdict.rule << ")";
    os << (check.agrees ? "" : " DISAGREES") << '\n';
  }
  os << "criteria.agreement: " << flag(r.agreement) << '\n';
  return os.str();
}

}  // namespace conormal
