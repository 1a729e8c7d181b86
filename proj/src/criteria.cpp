#include "conormal/criteria.hpp"

#include <algorithm>
#include <limits>

#include "conormal/error.hpp"

namespace conormal {

namespace {

void check_argument(int value, const char* name, int min) {
  if (value < min || value > kMaxCriteriaArgument)
    throw Error(std::string(name) + " out of range [" + std::to_string(min) + ", " +
                std::to_string(kMaxCriteriaArgument) + "]: " + std::to_string(value));
}

// a < sqrt(b), exactly
bool less_than_sqrt(std::int64_t a, std::int64_t b) {
  if (b <= 0) return false;
  return a < 0 || static_cast<__int128>(a) * a < b;
}

// |x| < sqrt(k); an empty window when k <= 0
bool inside_window(std::int64_t x, std::int64_t k) { return less_than_sqrt(x < 0 ? -x : x, k); }

CriteriaVerdict verdict(Outcome o, std::string rule) { return CriteriaVerdict{o, std::move(rule), {}}; }

}  // namespace

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) throw Error("binomial overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t CountingTable::n(int i) const { return binomial(c - 1 + i, i); }
std::int64_t CountingTable::N(int i) const { return binomial(c + i, i); }

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::NotCM: return "NotCM";
    case Outcome::Undecided: return "Undecided";
    case Outcome::PositiveAnswer: return "PositiveAnswer";
  }
  return "?";
}

Rational Q(int c, int s) {
  check_argument(c, "c", 1);
  check_argument(s, "s", 1);
  Rational first = 1, second = 1;
  for (int j = 0; j < c; ++j) {
    first = first * Rational(2 * s + j, j + 2);
    second = second * Rational(s + j + 1, j + 1);
  }
  return first - second;
}

std::vector<std::pair<int, int>> q_monotonicity_violations(int c_max, int s_max, MonotonicityScope scope) {
  std::vector<std::pair<int, int>> out;
  auto counts = [scope](const Rational& base) { return scope == MonotonicityScope::all || base >= Rational(0); };
  for (int c = 1; c <= c_max; ++c)
    for (int s = 1; s < s_max; ++s) {
      const Rational base = Q(c, s);
      if (counts(base) && Q(c, s + 1) < base) out.emplace_back(c, s);
    }
  for (int c = 2; c < c_max; ++c)
    for (int s = 3; s <= s_max; ++s) {
      const Rational base = Q(c, s);
      if (counts(base) && Q(c + 1, s) < base && std::find(out.begin(), out.end(), std::pair{c, s}) == out.end())
        out.emplace_back(c, s);
    }
  return out;
}

bool q_monotonicity_check(int c_max, int s_max, MonotonicityScope scope) {
  return q_monotonicity_violations(c_max, s_max, scope).empty();
}

CriteriaVerdict quadric_count_verdict(int c, int q, std::optional<bool> gorenstein) {
  check_argument(c, "c", 3);
  const CountingTable t{c};
  const std::int64_t top = binomial(c + 1, 2);
  if (q < 0 || q >= top) throw Error("q out of range [0, " + std::to_string(top) + "): " + std::to_string(q));

  const std::int64_t k_deg4 = (2 * c + 1) * (2 * c + 1) + 8 * (t.N(4) - (c + 1) * t.N(2));
  const std::int64_t shift = 2 * c + 1 - 2 * t.n(3);
  const std::int64_t k_deg5 = shift * shift + 8 * (t.N(5) - (c + 1) * t.N(2));
  CriteriaVerdict v;
  v.numbers = {{"c", std::to_string(c)},
               {"q", std::to_string(q)},
               {"quadric_bound", Rational(c * c + 2 * c, 3).to_string()},
               {"K4", std::to_string(k_deg4)},
               {"K5", std::to_string(k_deg5)}};
  if (3 * static_cast<std::int64_t>(q) > c * c + 2 * c) {
    v.outcome = Outcome::NotCM;
    v.rule = "quadric-count-upper";
  } else if (inside_window(2 * static_cast<std::int64_t>(q) - (2 * c + 1), k_deg4)) {
    v.outcome = Outcome::NotCM;
    v.rule = "quadric-window-degree4";
  } else if (inside_window(2 * static_cast<std::int64_t>(q) - shift, k_deg5)) {
    v.outcome = Outcome::NotCM;
    v.rule = "quadric-window-degree5";
  } else if (c == 3 && gorenstein.has_value() && !*gorenstein) {
    v.outcome = Outcome::NotCM;
    v.rule = "codim3-non-gorenstein";
  } else if (c == 4 && gorenstein.has_value()) {
    v.outcome = Outcome::NotCM;
    v.rule = "codim4";
  }
  return v;
}

std::vector<int> undecided_quadric_counts(int c) {
  std::vector<int> out;
  const auto top = binomial(c + 1, 2);
  for (int q = 0; q < top; ++q)
    if (quadric_count_verdict(c, q).outcome == Outcome::Undecided) out.push_back(q);
  return out;
}

int min_codim_for_multiplicity(int t) {
  if (t < 1) throw Error("t must be positive");
  // c > (1 + sqrt(D))/2  <=>  2c - 1 > sqrt(D)  <=>  (2c-1)^2 > D
  const std::int64_t d = 1 + 24 * static_cast<std::int64_t>(t - 1);
  int c = 1;
  while (static_cast<std::int64_t>(2 * c - 1) * (2 * c - 1) <= d) ++c;
  return c;
}

CriteriaVerdict multiplicity_codim_verdict(int c, int e) {
  if (e <= c) throw Error("multiplicity must exceed the codimension");
  const int t = e - c;
  CriteriaVerdict v;
  const int bound = min_codim_for_multiplicity(t);
  v.numbers = {{"t", std::to_string(t)}, {"min_codim", std::to_string(bound)}};
  if (c >= bound) {
    v.outcome = Outcome::NotCM;
    v.rule = "multiplicity-codim-bound";
  }
  return v;
}

StretchedBound stretched_bound(int c, int s) {
  check_argument(c, "c", 1);
  check_argument(s, "s", 2);
  const std::int64_t lower = 1 + c + binomial(c + 1, 2) + binomial(c + 2, 3) + c * (s - 2) + s - 2;
  const std::int64_t target = static_cast<std::int64_t>(c + 1) * (c + s);
  return StretchedBound{lower, target, lower > target};
}

CriteriaVerdict stretched_verdict(int c, int s, std::optional<bool> gorenstein) {
  if (c <= 2) return verdict(Outcome::PositiveAnswer, "low-codim");
  auto b = stretched_bound(c, s);
  CriteriaVerdict v;
  v.numbers = {{"lower_bound", std::to_string(b.lower_bound)}, {"target", std::to_string(b.target)}};
  if (c >= 4) {
    v.outcome = Outcome::NotCM;
    v.rule = "stretched-codim";
  } else if (gorenstein.has_value()) {
    v.outcome = *gorenstein ? Outcome::PositiveAnswer : Outcome::NotCM;
    v.rule = "stretched-codim3";
  }
  return v;
}

CriteriaVerdict short_verdict(int c, int s) {
  if (c <= 2) return verdict(Outcome::PositiveAnswer, "low-codim");
  if (s >= 3) return verdict(Outcome::NotCM, "short-high-socle");
  return verdict(Outcome::Undecided, "");
}

int conjectured_point_count(int c) {
  if (c < 1) throw Error("c must be positive");
  return 1 + c + (c * (c - 1) + 5) / 6;
}

CriteriaVerdict curve_verdict(std::span<const int> initial_degrees) {
  const auto n = static_cast<int>(initial_degrees.size());
  if (n < 2) throw Error("a curve needs at least two parameters");
  if (std::any_of(initial_degrees.begin(), initial_degrees.end(), [](int a) { return a < 1; }))
    throw Error("initial degrees must be positive");
  const int least = *std::min_element(initial_degrees.begin(), initial_degrees.end());
  CriteriaVerdict v;
  v.numbers = {{"min_degree", std::to_string(least)}, {"bound", std::to_string(n + 3)}};
  if (least <= n + 3) {
    v.outcome = Outcome::PositiveAnswer;
    v.rule = "curve-degree";
  }
  return v;
}

CriteriaVerdict low_multiplicity_verdict(int c, int e) {
  if (c < 0 || e <= c) throw Error("multiplicity must exceed the codimension");
  if (c <= 2) return verdict(Outcome::PositiveAnswer, "low-codim");
  if (e <= c + 4) return verdict(Outcome::PositiveAnswer, "low-multiplicity");
  return verdict(Outcome::Undecided, "");
}

}  // namespace conormal
