#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conormal/criteria.hpp"
#include "conormal/invariants.hpp"

namespace conormal {

inline constexpr int kDefaultTrials = 5;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// R/(I + l) realized in the ring without one variable: the variable with
/// the highest index among those with a nonzero coefficient in l is
/// replaced by the solution of l = 0.
struct ArtinianReduction {
  Polynomial form;
  LinearElimination image;  // ring without that variable; images of I's generators
  GroebnerBasis gb;
  int length = 0;
};

/// Reduction by the l of minimal length over `trials` random forms.
/// Throws Error for zero-dimensional or higher-dimensional input.
ArtinianReduction artinian_reduction(const GroebnerBasis& gb, std::uint64_t seed, int trials = kDefaultTrials,
                                     BuchbergerOptions options = {});

/// Krull dimension of R/I for homogeneous I, when it is 0 or 1; throws otherwise.
int quotient_dimension(const GroebnerBasis& gb);

/// Length for zero-dimensional input, else min over reductions.
int multiplicity(const GroebnerBasis& gb, std::uint64_t seed, int trials = kDefaultTrials);

enum class CmStatus { CM, NotCM, Inconclusive };
std::string_view to_string(CmStatus status) noexcept;

struct CmVerdict {
  CmStatus status = CmStatus::Inconclusive;
  std::optional<Polynomial> witness;  // form reaching e_expected
  int trials = 0;
  std::optional<int> lambda_min;
  int e_expected = 0;  // (ht I + 1) e(R/I)
  std::string diagnostics;
};

/// Cohen-Macaulayness of R/I^2 for a one-dimensional homogeneous I with
/// ht I = n - 1: CM iff lambda(R/(I^2 + l)) = n e(R/I) for a general l.
CmVerdict is_cm_square(const GroebnerBasis& gb, std::uint64_t seed, int trials = kDefaultTrials,
                       std::uint64_t budget = kDefaultBudget);

struct CriteriaCheck {
  std::string name;
  CriteriaVerdict verdict;
  bool agrees = true;
};

struct AnalysisReport {
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  int nvars = 0;
  int dimension = 0;
  int multiplicity = 0;
  InvariantReport reduction;  // invariants of R/(I + l), or of R/I when zero-dimensional
  int q = 0;                  // degree-2 elements of the reduced basis of the reduction
  CmVerdict cm_square;
  std::vector<CriteriaCheck> criteria;
  bool agreement = true;
};

/// Full pipeline for a homogeneous points ideal or a zero-dimensional ideal.
AnalysisReport analyze(const GroebnerBasis& gb, std::uint64_t seed, int trials = kDefaultTrials,
                       std::uint64_t budget = kDefaultBudget);

/// Stable "key: value" lines.
std::string to_key_value(const AnalysisReport& report);

}  // namespace conormal
