#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conormal/cli_io.hpp"
#include "conormal/constructions.hpp"
#include "conormal/criteria.hpp"
#include "conormal/error.hpp"

namespace py = pybind11;
using namespace conormal;

namespace {

std::vector<std::string> printed(std::span<const Polynomial> polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.num(), r.den());
}

py::dict verdict_dict(const CriteriaVerdict& v) {
  py::dict d;
  d["outcome"] = std::string(to_string(v.outcome));
  d["rule"] = v.rule;
  py::dict numbers;
  for (const auto& [k, value] : v.numbers) numbers[py::str(k)] = value;
  d["numbers"] = numbers;
  return d;
}

py::dict invariant_dict(const InvariantReport& r) {
  py::dict d;
  d["hf"] = r.hf.values;
  d["length"] = r.length;
  d["c"] = r.embdim;
  d["s"] = r.socle_degree;
  d["type"] = r.type;
  d["gorenstein"] = r.gorenstein;
  d["level"] = r.level;
  d["stretched"] = r.stretched;
  d["short"] = r.short_algebra;
  d["socle_degrees"] = r.socle_degrees;
  return d;
}

py::dict report_dict(const AnalysisReport& r) {
  py::dict d;
  d["dimension"] = r.dimension;
  d["multiplicity"] = r.multiplicity;
  d["invariants"] = invariant_dict(r.reduction);
  d["q"] = r.q;
  d["cm_square"] = std::string(to_string(r.cm_square.status));
  d["lambda_min"] = r.cm_square.lambda_min ? py::cast(*r.cm_square.lambda_min) : py::none();
  d["e_expected"] = r.cm_square.e_expected;
  py::dict criteria;
  for (const auto& check : r.criteria) criteria[py::str(check.name)] = verdict_dict(check.verdict);
  d["criteria"] = criteria;
  d["agreement"] = r.agreement;
  d["text"] = to_key_value(r);
  return d;
}

ExperimentConfig config_for(std::uint64_t seed, int trials, std::optional<std::uint64_t> budget) {
  ExperimentConfig config;
  config.seed = seed;
  config.trials = trials;
  if (budget) config.budget = *budget;
  return config;
}

}  // namespace

PYBIND11_MODULE(_conormal, m) {
  m.doc() = "Ideals over prime fields, Artinian invariants and Cohen-Macaulay tests for squares of ideals.";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "ConormalError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<NotZeroDimensional>(m, "NotZeroDimensional", base.ptr());

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("generators", [](const Ideal& I) { return printed(I.generators()); })
      .def_property_readonly("variables", [](const Ideal& I) { return I.ring()->names(); })
      .def_property_readonly("prime", [](const Ideal& I) { return I.ring()->field().modulus(); })
      .def("__len__", &Ideal::size)
      .def("__str__", [](const Ideal& I) { return write_ideal(I); });

  py::class_<GroebnerBasis>(m, "GroebnerBasis")
      .def_property_readonly("elements", [](const GroebnerBasis& gb) { return printed(gb.elements()); })
      .def_property_readonly("order", [](const GroebnerBasis& gb) { return std::string(to_string(gb.order())); })
      .def_property_readonly("steps", &GroebnerBasis::steps)
      .def("is_zero_dimensional", [](const GroebnerBasis& gb) { return is_zero_dimensional(gb); })
      .def("standard_monomial_count", [](const GroebnerBasis& gb) { return standard_monomials(gb).size(); })
      .def("contains", [](const GroebnerBasis& gb, const std::string& f) {
        return contains(gb, parse_polynomial(gb.ring(), f));
      })
      .def("normal_form", [](const GroebnerBasis& gb, const std::string& f) {
        return normal_form(parse_polynomial(gb.ring(), f), gb).to_string();
      })
      .def("__len__", &GroebnerBasis::size);

  m.def("parse_ideal", &parse_ideal_text, py::arg("text"),
        "Parse 'ring p=.. vars=..' followed by one polynomial per line.");
  m.def(
      "ideal", [](std::uint32_t p, std::vector<std::string> vars, const std::vector<std::string>& gens,
                  const std::string& order) {
        auto R = make_ring(p, std::move(vars), parse_order(order));
        std::vector<Polynomial> polys;
        for (const auto& g : gens) polys.push_back(parse_polynomial(R, g));
        return Ideal(R, std::move(polys));
      },
      py::arg("p"), py::arg("variables"), py::arg("generators"), py::arg("order") = "degrevlex");
  m.def(
      "groebner_basis",
      [](const Ideal& I, std::optional<std::string> order, std::uint64_t budget) {
        const auto o = order ? parse_order(*order) : I.ring()->order();
        return buchberger(I, o, BuchbergerOptions{budget});
      },
      py::arg("ideal"), py::arg("order") = py::none(), py::arg("budget") = kDefaultBudget);
  m.def("square", [](const Ideal& I) { return ideal_square(I); }, py::arg("ideal"));

  m.def("hilbert_function", [](const GroebnerBasis& gb) { return hilbert_function(gb).values; }, py::arg("basis"));
  m.def("length", [](const GroebnerBasis& gb) { return length(gb); }, py::arg("basis"));
  m.def("invariants", [](const GroebnerBasis& gb) { return invariant_dict(invariant_report(gb)); }, py::arg("basis"));

  m.def(
      "random_general_points",
      [](int c, int n, std::uint32_t p, std::uint64_t seed) { return random_general_points(c, n, p, seed).points.points; },
      py::arg("c"), py::arg("n"), py::arg("p") = kDefaultPrime, py::arg("seed") = 1);
  m.def(
      "vanishing_ideal",
      [](int c, std::uint32_t p, std::vector<std::vector<std::int64_t>> coords) {
        return vanishing_ideal(make_point_set(c, p, std::move(coords)));
      },
      py::arg("c"), py::arg("p"), py::arg("points"));

  m.def(
      "is_cm_square",
      [](const GroebnerBasis& gb, std::uint64_t seed, int trials, std::uint64_t budget) {
        return std::string(to_string(is_cm_square(gb, seed, trials, budget).status));
      },
      py::arg("basis"), py::arg("seed") = 1, py::arg("trials") = kDefaultTrials, py::arg("budget") = kDefaultBudget);
  m.def(
      "analyze",
      [](const GroebnerBasis& gb, std::uint64_t seed, int trials, std::uint64_t budget) {
        return report_dict(analyze(gb, seed, trials, budget));
      },
      py::arg("basis"), py::arg("seed") = 1, py::arg("trials") = kDefaultTrials, py::arg("budget") = kDefaultBudget);

  m.def("Q", [](int c, int s) { return fraction(Q(c, s)); }, py::arg("c"), py::arg("s"));
  m.def(
      "quadric_count_verdict",
      [](int c, int q, std::optional<bool> gorenstein) { return verdict_dict(quadric_count_verdict(c, q, gorenstein)); },
      py::arg("c"), py::arg("q"), py::arg("gorenstein") = py::none());
  m.def("undecided_quadric_counts", &undecided_quadric_counts, py::arg("c"));
  m.def("conjectured_point_count", &conjectured_point_count, py::arg("c"));
  m.def("criteria_table", &criteria_table, py::arg("cmax"), py::arg("smax"));

  m.def(
      "verify_example61",
      [](std::uint64_t seed, int trials) {
        auto result = verify_example61(config_for(seed, trials, std::nullopt));
        py::dict facts;
        for (const auto& f : result.facts) facts[py::str(f.name)] = f.holds;
        py::dict d = report_dict(result.report);
        d["facts"] = facts;
        d["ok"] = result.ok();
        return d;
      },
      py::arg("seed") = 1, py::arg("trials") = kDefaultTrials);
  m.def(
      "conjecture",
      [](int c, std::optional<int> n, std::uint64_t seed, int trials, std::optional<std::uint64_t> budget,
         bool allow_long) {
        auto config = config_for(seed, trials, budget);
        config.c = c;
        config.n = n;
        config.allow_long = allow_long;
        auto result = conjecture_experiment(config);
        py::dict d = report_dict(result.report);
        d["n"] = result.n;
        d["redraws"] = result.points.redraws;
        d["counterexample"] = result.counterexample;
        return d;
      },
      py::arg("c"), py::arg("n") = py::none(), py::arg("seed") = 1, py::arg("trials") = kDefaultTrials,
      py::arg("budget") = py::none(), py::arg("allow_long") = false);
}
