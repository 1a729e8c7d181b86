#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conormal/rational.hpp"

namespace conormal {

/// Arguments c and s of the counting functions are capped here so every
/// binomial stays far below 2^63.
inline constexpr int kMaxCriteriaArgument = 12;

/// Exact C(n, k); throws Error when the value does not fit in 63 bits.
std::int64_t binomial(int n, int k);

/// Monomial counts in c and c + 1 variables.
struct CountingTable {
  int c;
  /// C(c-1+i, i)
  std::int64_t n(int i) const;
  /// C(c+i, i)
  std::int64_t N(int i) const;
};

enum class Outcome { NotCM, Undecided, PositiveAnswer };
std::string_view to_string(Outcome outcome) noexcept;

/// PositiveAnswer: a Cohen-Macaulay conormal module forces R/I Gorenstein.
/// NotCM: the conormal module (and R/I^2) cannot be Cohen-Macaulay.
struct CriteriaVerdict {
  Outcome outcome = Outcome::Undecided;
  std::string rule;  // empty when nothing fired
  std::vector<std::pair<std::string, std::string>> numbers;
};

/// N_{2s-1}/(c+1) - N_s written as the difference of the two products.
Rational Q(int c, int s);

enum class MonotonicityScope {
  all,          // every grid point
  nonnegative,  // only steps starting from Q(c, s) >= 0
};

/// Grid points (c, s) where Q(c, s+1) < Q(c, s), or Q(c+1, s) < Q(c, s) with c >= 2, s >= 3.
std::vector<std::pair<int, int>> q_monotonicity_violations(int c_max, int s_max,
                                                          MonotonicityScope scope = MonotonicityScope::all);
/// True iff there are no violations. With scope all this fails at small s,
/// where Q is negative and decreasing.
bool q_monotonicity_check(int c_max, int s_max, MonotonicityScope scope = MonotonicityScope::all);

/// Socle degree 2, embedding codimension c >= 3, multiplicity
/// 1 + c + C(c+1, 2) - q. The codimension-3/4 special cases need the
/// Gorenstein flag and stay Undecided without it.
CriteriaVerdict quadric_count_verdict(int c, int q, std::optional<bool> gorenstein = std::nullopt);

/// All q in [0, C(c+1,2)) for which quadric_count_verdict (no flag) is Undecided.
std::vector<int> undecided_quadric_counts(int c);

/// Smallest c with c > (1 + sqrt(1 + 24(t-1)))/2.
int min_codim_for_multiplicity(int t);

/// Multiplicity e = c + t: NotCM when c >= min_codim_for_multiplicity(t).
CriteriaVerdict multiplicity_codim_verdict(int c, int e);

struct StretchedBound {
  std::int64_t lower_bound;  // length bound for the monomial ideal containing I^2
  std::int64_t target;       // (c+1)(c+s)
  bool exceeds;
};
StretchedBound stretched_bound(int c, int s);

/// Stretched quotient: c >= 4 gives NotCM, c = 3 needs Gorenstein, c <= 2 is positive.
CriteriaVerdict stretched_verdict(int c, int s, std::optional<bool> gorenstein = std::nullopt);

/// Short quotient with c >= 2, s >= 3 gives NotCM.
CriteriaVerdict short_verdict(int c, int s);

/// 1 + c + ceil(c(c-1)/6)
int conjectured_point_count(int c);

/// Monomial curve k[[f_1(t), ..., f_n(t)]] with initial degrees a_i.
CriteriaVerdict curve_verdict(std::span<const int> initial_degrees);

/// e <= c + 4, or c <= 2, gives a positive answer.
CriteriaVerdict low_multiplicity_verdict(int c, int e);

}  // namespace conormal
