// Acceptance runner: one pass/fail line per criterion.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "conormal/cli_io.hpp"
#include "conormal/constructions.hpp"
#include "conormal/criteria.hpp"
#include "conormal/invariants.hpp"
#include "oracles.hpp"

using namespace conormal;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string joined(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void example_reproduction(Result& out) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig config;
  auto result = verify_example61(config);
  const double t = seconds_since(start);
  const auto& r = result.report;
  out.require(r.reduction.hf.values == std::vector<int>{1, 5, 4}, "h-vector (1,5,4)");
  out.require(r.reduction.type == 4, "type 4");
  out.require(r.reduction.level, "level");
  out.require(!r.reduction.gorenstein, "not Gorenstein");
  out.require(r.cm_square.status == CmStatus::CM, "square CM");
  out.require(r.cm_square.lambda_min == 60 && r.cm_square.e_expected == 6 * 10, "length 60 = 6*10");
  out.require(t <= 60, "runtime <= 60 s");
  out.detail << "h=(" << joined(r.reduction.hf.values) << ") tau=" << r.reduction.type
             << " lambda=" << r.cm_square.lambda_min.value_or(-1) << " t=" << t << "s";
}

void q_table(Result& out) {
  const std::pair<std::pair<int, int>, Rational> expected[] = {
      {{5, 4}, Rational(6)},  {{4, 5}, Rational(17)}, {{3, 6}, Rational(7)},
      {{2, 8}, Rational(1, 3)}, {{3, 5}, Rational(-1)}, {{3, 4}, Rational(-5)}};
  for (const auto& [cs, value] : expected) {
    const auto got = Q(cs.first, cs.second);
    out.require(got == value, "Q(" + std::to_string(cs.first) + "," + std::to_string(cs.second) + ") = " +
                                  value.to_string() + ", got " + got.to_string());
  }
  const auto violations = q_monotonicity_violations(12, 12);
  out.require(violations.empty(), "monotonicity on c,s <= 12 (" + std::to_string(violations.size()) +
                                      " decreasing steps, first at c=" +
                                      (violations.empty() ? "-" : std::to_string(violations.front().first)) +
                                      " s=" + (violations.empty() ? "-" : std::to_string(violations.front().second)) + ")");
  out.detail << "six values checked; nonnegative-part monotone: "
             << (q_monotonicity_check(12, 12, MonotonicityScope::nonnegative) ? "yes" : "no");
}

void quadric_windows(Result& out) {
  for (const auto& [c, want] : {std::pair{5, std::vector<int>{11}}, std::pair{6, std::vector<int>{16}}}) {
    const auto got = undecided_quadric_counts(c);
    out.require(got == want, "c=" + std::to_string(c) + " undecided {" + joined(want) + "}, got {" + joined(got) + "}");
    for (int q = 0; q < binomial(c + 1, 2); ++q) {
      const auto v = quadric_count_verdict(c, q);
      out.require(v.outcome != Outcome::Undecided || std::find(got.begin(), got.end(), q) != got.end(),
                  "verdict for q=" + std::to_string(q));
    }
    out.detail << "c=" << c << ": {" << joined(got) << "} ";
  }
}

void conjecture_runs(Result& out) {
  for (int c : {5, 6}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      const auto start = std::chrono::steady_clock::now();
      ExperimentConfig config;
      config.c = c;
      config.seed = seed;
      auto r = conjecture_experiment(config);
      const double t = seconds_since(start);
      const std::string tag = "c=" + std::to_string(c) + " seed=" + std::to_string(seed);
      out.require(r.n == (c == 5 ? 10 : 12), tag + " point count");
      out.require(r.points.certificate.achieved && r.points.redraws <= 10, tag + " general position");
      out.require(r.report.cm_square.status == CmStatus::CM, tag + " square CM");
      out.require(!r.report.reduction.gorenstein, tag + " not Gorenstein");
      out.require(r.report.agreement, tag + " criteria agreement");
      out.require(t <= 600, tag + " runtime");
      out.detail << tag << ":" << to_string(r.report.cm_square.status) << "/tau=" << r.report.reduction.type << " ";
    }
  }
}

void negative_controls(Result& out) {
  ExperimentConfig seven;
  seven.c = 7;
  seven.n = 14;
  seven.allow_long = true;
  seven.budget = 10 * kDefaultBudget;
  auto r7 = conjecture_experiment(seven);
  out.require(r7.report.cm_square.status == CmStatus::NotCM, "14 points in P^7 NotCM");
  out.require(r7.report.agreement, "c=7 criteria agreement");

  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig five;
  five.c = 5;
  five.n = 9;
  auto r5 = conjecture_experiment(five);
  const double t = seconds_since(start);
  out.require(r5.report.cm_square.status == CmStatus::NotCM, "9 points in P^5 NotCM");
  out.require(r5.report.q == 12, "q = 12");
  const CriteriaCheck* quadric = nullptr;
  for (const auto& check : r5.report.criteria)
    if (check.name == "quadric-count") quadric = &check;
  out.require(quadric && quadric->verdict.outcome == Outcome::NotCM && quadric->verdict.rule == "quadric-count-upper",
              "quadric-count-upper fires");
  out.require(r5.report.agreement, "c=5 criteria agreement");
  out.require(t <= 300, "c=5 runtime <= 5 min");
  out.detail << "P^7: lambda=" << r7.report.cm_square.lambda_min.value_or(-1) << " vs "
             << r7.report.cm_square.e_expected << "; P^5: q=" << r5.report.q
             << " lambda=" << r5.report.cm_square.lambda_min.value_or(-1) << " vs " << r5.report.cm_square.e_expected;
}

void stretched(Result& out) {
  const auto rows = stretched_suite(5, 4, 1, 3);
  out.require(rows.size() == 3 * (3 + 4 + 5), "grid size");
  int equal = 0;
  for (const auto& row : rows) {
    const std::string tag = "c=" + std::to_string(row.c) + " s=" + std::to_string(row.s) + " r=" + std::to_string(row.r);
    out.require(row.hf_ok && row.type_ok, tag + " HF and type");
    out.require(row.contained, tag + " I^2 in L");
    out.require(row.equal == (row.r <= row.c - 3), tag + " equality iff r <= c-3");
    out.require(row.lambda_square >= 0, tag + " unit independence");
    out.require(row.gap_ok && row.exceeds_ok, tag + " length bounds");
    equal += row.equal;
  }
  out.detail << rows.size() << " rows, " << equal << " with I^2 = L";
}

void square_of_maximal_ideal(Result& out) {
  for (int c = 2; c <= 6; ++c) {
    auto R = make_ring(31991, indexed_names("x", c));
    std::vector<Polynomial> vars;
    for (int i = 0; i < c; ++i) vars.push_back(Polynomial::variable(R, i));
    const Ideal I(R, vars);
    const int lambda = length(buchberger(ideal_square(I)));
    const int e = length(buchberger(I));
    out.require(lambda == c + 1 && lambda == (c + 1) * e, "c=" + std::to_string(c));
    out.detail << lambda << (c < 6 ? "," : "");
  }
}

void oracle_equivalence(Result& out) {
  int sets = 0;
  for (int c = 1; c <= 3; ++c)
    for (int n = 1; n <= 8; ++n)
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto ps = random_points(c, n, 31991, 1000 + seed);
        auto R = point_ring(ps);
        const auto gb = vanishing_ideal(ps, R);
        const auto ref = oracle::vanishing_oracle(ps, R, static_cast<int>(coordinate_ring_hf(ps).size()));
        bool same = gb.elements().size() == ref.elements().size();
        for (std::size_t k = 0; same && k < gb.elements().size(); ++k) same = gb.elements()[k] == ref.elements()[k];
        out.require(same, "points c=" + std::to_string(c) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed));
        ++sets;
      }
  std::mt19937_64 rng(77);
  for (int k = 0; k < 50; ++k) {
    auto R = make_ring(31991, indexed_names("x", 1 + k % 3));
    auto I = oracle::random_zero_dim_ideal(R, rng);
    const auto a = standard_monomials(buchberger(I, MonomialOrder::degrevlex)).size();
    const auto b = standard_monomials(buchberger(I, MonomialOrder::deglex)).size();
    out.require(a == b, "standard monomial count, ideal " + std::to_string(k));
  }
  out.detail << sets << " point sets, 50 ideals";
}

void eight_quadrics(Result& out) {
  auto R = make_ring(31991, indexed_names("x", 4));
  const auto quadrics = monomials_of_degree(4, 2, R->order());
  const auto quartics = monomials_of_degree(4, 4, R->order());
  std::mt19937_64 rng(8);
  int proper = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 8; ++k) {
      std::vector<Term> terms;
      for (const auto& m : quadrics) terms.push_back(Term{static_cast<Coeff>(rng() % 31991), m});
      gens.emplace_back(R, std::move(terms));
    }
    const auto gb = buchberger(ideal_square(Ideal(R, gens)));
    bool missing = false;
    for (const auto& m : quartics) missing = missing || !contains(gb, Polynomial::monomial(R, 1, m));
    out.require(missing, "trial " + std::to_string(trial));
    proper += missing;
  }
  out.detail << proper << "/25 squares miss a quartic monomial";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::function<void(Result&)> criteria[] = {example_reproduction, q_table,          quadric_windows,
                                                    conjecture_runs,      negative_controls, stretched,
                                                    square_of_maximal_ideal, oracle_equivalence, eight_quadrics};
  bool all = true;
  for (int k = 1; k <= 9; ++k) {
    if (only && k != only) continue;
    Result out;
    try {
      criteria[k - 1](out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k << ": " << (out.pass ? "pass" : "FAIL") << "  " << out.detail.str() << std::endl;
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
