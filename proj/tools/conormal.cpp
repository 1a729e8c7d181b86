#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "conormal/cli_io.hpp"
#include "conormal/constructions.hpp"
#include "conormal/criteria.hpp"
#include "conormal/error.hpp"

using namespace conormal;

namespace {

int emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << output << '\n';
    return kExitFailure;
  }
  out << text;
  return 0;
}

int selftest(const ExperimentConfig& config) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"q_values",
       [] {
         return Q(5, 4) == Rational(6) && Q(4, 5) == Rational(17) && Q(3, 6) == Rational(7) &&
                Q(2, 8) == Rational(1, 3) && Q(3, 5) == Rational(-1) && Q(3, 4) == Rational(-5);
       }},
      {"quadric_window_c5", [] { return undecided_quadric_counts(5) == std::vector<int>{11}; }},
      {"example_ideal", [&] { return verify_example61(config).ok(); }},
      {"stretched_suite_small",
       [&] {
         auto rows = stretched_suite(4, 3, config.seed, 1);
         return std::all_of(rows.begin(), rows.end(), [](const StretchedRow& r) { return r.ok(); });
       }},
      {"points_general",
       [&] {
         auto g = random_general_points(3, 6, config.p, config.seed);
         auto gb = vanishing_ideal(g.points);
         return multiplicity(gb, config.seed) == 6;
       }},
  };
  bool all = true;
  for (auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::cout << "selftest " << name << ": error: " << e.what() << '\n';
    }
    std::cout << "selftest " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    all = all && ok;
  }
  return all ? kExitConsistent : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay tests for conormal modules and squares of ideals over GF(p)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  ExperimentConfig config;
  std::uint64_t budget = 0;
  app.add_option("--budget", budget, "Groebner reduction step budget (default: $" + std::string(kBudgetEnv) + " or 1e7)");
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", config.trials, "Random linear forms per CM test")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("-o,--output", config.output, "Write the report to a file instead of stdout");

  auto* verify = app.add_subcommand("verify-example61", "Reproduce the 10-points example in P^5");

  auto* conj = app.add_subcommand("conjecture", "Test the conjectured counterexample for codimension c");
  conj->add_option("--c", config.c, "Codimension")->required();
  conj->add_option("--n", config.n, "Number of points (default: conjectured count)");
  conj->add_option("--p", config.p, "Prime modulus")->capture_default_str();
  conj->add_flag("--allow-long", config.allow_long, "Allow codimensions outside 5..7 and raise the budget");

  auto* an = app.add_subcommand("analyze", "Analyze an ideal file, a point file or random points");
  an->add_option("input", config.input, "Ideal or point file");
  std::string point_spec;
  an->add_option("--points", point_spec, "Random general points as c,n");
  an->add_option("--p", config.p, "Prime modulus for --points")->capture_default_str();

  auto* table = app.add_subcommand("criteria-table", "Print Q(c, s) and the socle-degree-2 windows");
  int cmax = 9, smax = 8;
  table->add_option("--cmax", cmax)->capture_default_str();
  table->add_option("--smax", smax)->capture_default_str();

  auto* suite = app.add_subcommand("stretched-suite", "Check stretched ideals and their squares over a grid");
  int suite_cmax = 5, suite_smax = 4, units = 3;
  suite->add_option("--cmax", suite_cmax)->capture_default_str();
  suite->add_option("--smax", suite_smax)->capture_default_str();
  suite->add_option("--units", units, "Random unit choices per grid point")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "Quick consistency checks");

  CLI11_PARSE(app, argc, argv);

  try {
    config.budget = budget ? budget : budget_from_env();
    if (*verify) {
      config.command = "verify-example61";
      auto result = verify_example61(config);
      if (int rc = emit(result.to_key_value(config), config.output)) return rc;
      for (const auto& f : result.facts)
        if (!f.holds) std::cerr << "failed fact: " << f.name << '\n';
      return result.exit_code();
    }
    if (*conj) {
      config.command = "conjecture";
      auto result = conjecture_experiment(config);
      if (int rc = emit(result.to_key_value(config), config.output)) return rc;
      return result.exit_code();
    }
    if (*an) {
      config.command = "analyze";
      if (!point_spec.empty() && !config.input.empty()) throw Error("give either a file or --points, not both");
      if (!point_spec.empty()) config.input = point_spec;
      if (config.input.empty()) throw Error("analyze needs a file or --points c,n");
      auto result = analyze_command(config);
      if (int rc = emit(result.to_key_value(config), config.output)) return rc;
      return result.exit_code();
    }
    if (*table) return emit(criteria_table(cmax, smax), config.output);
    if (*suite) {
      std::string text;
      bool all = true;
      for (const auto& row : stretched_suite(suite_cmax, suite_smax, config.seed, units)) {
        text += row.to_line() + '\n';
        all = all && row.ok();
      }
      text += std::string("suite: ") + (all ? "ok" : "FAIL") + '\n';
      if (int rc = emit(text, config.output)) return rc;
      return all ? kExitConsistent : kExitFailure;
    }
    if (*self) return selftest(config);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
