#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conormal/cm_checks.hpp"
#include "conormal/points.hpp"

namespace conormal {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::uint32_t kDefaultPrime = 31991;
inline constexpr std::string_view kBudgetEnv = "CONORMAL_BUDGET";

/// Exit statuses shared by the CLI verbs.
enum ExitCode : int { kExitConsistent = 0, kExitNotCM = 1, kExitInconclusive = 2, kExitFailure = 3 };

/// "ring p=<prime> vars=<a,b,...> [order=<name>]" then one polynomial per
/// line; blank lines and lines starting with '#' are skipped.
Ideal parse_ideal_text(std::string_view text);
Ideal parse_ideal_file(const std::filesystem::path& path);
std::string write_ideal(const Ideal& ideal);

struct ExperimentConfig {
  std::string command;
  int c = 0;
  std::optional<int> n;
  std::uint32_t p = kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = kDefaultTrials;
  std::uint64_t budget = kDefaultBudget;
  std::string input;   // file or point spec for analyze
  std::string output;  // empty: stdout
  bool allow_long = false;

  std::string to_key_value() const;
};

/// Value of the budget environment variable, or `fallback` when unset.
/// Throws Error on a malformed value.
std::uint64_t budget_from_env(std::uint64_t fallback = kDefaultBudget);

struct Fact {
  std::string name;
  bool holds;
};

struct Example61Result {
  AnalysisReport report;
  std::vector<Fact> facts;
  bool ok() const;
  int exit_code() const;
  std::string to_key_value(const ExperimentConfig& config) const;
};

/// Builds the listed ideal, analyzes it and checks h-vector (1,5,4), type 4,
/// level, not Gorenstein, square Cohen-Macaulay with length 60.
Example61Result verify_example61(const ExperimentConfig& config);

struct ConjectureResult {
  int n = 0;
  GeneralPoints points;
  AnalysisReport report;
  bool counterexample = false;  // square CM and not Gorenstein
  int exit_code() const;
  std::string to_key_value(const ExperimentConfig& config) const;
};

/// n = conjectured_point_count(c) unless config.n is set. Codimensions
/// outside 5..7 need allow_long, which also raises the default budget tenfold.
ConjectureResult conjecture_experiment(const ExperimentConfig& config);

struct AnalyzeResult {
  std::string source;
  std::optional<PointSet> points;
  AnalysisReport report;
  int exit_code() const;
  std::string to_key_value(const ExperimentConfig& config) const;
};

/// config.input is a path (ideal or point file) or "c,n" for random general points.
AnalyzeResult analyze_command(const ExperimentConfig& config);

/// Plain-text tables of Q(c, s), quadric-count windows and conjectured counts.
std::string criteria_table(int c_max, int s_max);

struct StretchedRow {
  int c = 0, s = 0, r = 0;
  bool hf_ok = true;
  bool type_ok = true;
  bool contained = true;        // I^2 inside L
  bool equal = false;           // I^2 = L
  bool equality_expected = false;
  int lambda_square = 0;        // lambda(R/I^2), same for every unit choice or -1
  int lambda_L = 0;
  bool gap_ok = true;           // lambda(R/I^2) >= lambda(R/L) + 2 when r >= c - 2
  bool exceeds_ok = true;       // lambda(R/I^2) > (c+1)(c+s) when c >= 4
  bool ok() const;
  std::string to_line() const;
};

/// c in 3..c_max, s in 2..s_max, r in 0..c-1, `unit_choices` random unit vectors each.
std::vector<StretchedRow> stretched_suite(int c_max, int s_max, std::uint64_t seed, int unit_choices = 3);

}  // namespace conormal
