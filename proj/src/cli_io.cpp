#include "conormal/cli_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "conormal/constructions.hpp"
#include "conormal/error.hpp"

namespace conormal {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string header_lines(const ExperimentConfig& config) {
  return "version: " + std::string(kVersion) + "\n" + config.to_key_value();
}

int verdict_exit(const AnalysisReport& r) {
  if (!r.agreement) return kExitFailure;
  switch (r.cm_square.status) {
    case CmStatus::CM: return kExitConsistent;
    case CmStatus::NotCM: return kExitNotCM;
    case CmStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitFailure;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Ideal parse_ideal_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  std::size_t k = 0;
  auto skip = [&] {
    while (k < lines.size() && (trim(lines[k]).empty() || trim(lines[k]).front() == '#')) ++k;
  };
  skip();
  if (k == lines.size()) throw ParseError("missing 'ring' header", 1, 1);
  const std::size_t header_line = k + 1;
  const std::string_view header = lines[k++];
  std::istringstream hs{std::string(header)};
  std::string word;
  hs >> word;
  if (word != "ring") throw ParseError("header must start with 'ring'", header_line, 1);
  std::optional<std::uint32_t> p;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::degrevlex;
  while (hs >> word) {
    const auto column = header.find(word) + 1;
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + word + "'", header_line, column);
    const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
    if (key == "p") {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size() || v < 3 || v > 2147483647 || v % 2 == 0 ||
          !is_prime(static_cast<std::uint32_t>(v)))
        throw ParseError("modulus must be an odd prime below 2^31: '" + value + "'", header_line, column);
      p = static_cast<std::uint32_t>(v);
    } else if (key == "vars") {
      vars = split(value, ',');
    } else if (key == "order") {
      try {
        order = parse_order(value);
      } catch (const Error& e) {
        throw ParseError(e.what(), header_line, column);
      }
    } else {
      throw ParseError("unknown header key '" + key + "'", header_line, column);
    }
  }
  if (!p) throw ParseError("header lacks p=<prime>", header_line, 1);
  if (vars.empty()) throw ParseError("header lacks vars=<list>", header_line, 1);
  RingPtr ring;
  try {
    ring = make_ring(*p, vars, order);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), header_line, 1);
  }
  std::vector<Polynomial> gens;
  for (skip(); k < lines.size(); ++k, skip()) gens.push_back(parse_polynomial(ring, trim(lines[k]), k + 1));
  if (gens.empty()) throw ParseError("no generators after the header", header_line, 1);
  return Ideal(ring, std::move(gens));
}

Ideal parse_ideal_file(const std::filesystem::path& path) { return parse_ideal_text(read_file(path)); }

std::string write_ideal(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  std::ostringstream os;
  os << "ring p=" << ring->field().modulus() << " vars=";
  for (std::size_t i = 0; i < ring->num_vars(); ++i) os << (i ? "," : "") << ring->names()[i];
  os << " order=" << to_string(ring->order()) << '\n';
  for (const auto& g : ideal.generators()) os << g.to_string() << '\n';
  return os.str();
}

std::string ExperimentConfig::to_key_value() const {
  std::ostringstream os;
  os << "config.command: " << command << "\nconfig.c: " << c << "\nconfig.n: " << (n ? std::to_string(*n) : "default")
     << "\nconfig.p: " << p << "\nconfig.seed: " << seed << "\nconfig.trials: " << trials
     << "\nconfig.budget: " << budget << "\nconfig.input: " << input << "\nconfig.allow_long: " << flag(allow_long)
     << '\n';
  return os.str();
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv(std::string(kBudgetEnv).c_str());
  if (!raw || !*raw) return fallback;
  std::string_view s(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw Error(std::string(kBudgetEnv) + " must be a positive integer, got '" + std::string(s) + "'");
  return v;
}

bool Example61Result::ok() const {
  return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.holds; });
}

int Example61Result::exit_code() const { return ok() && report.agreement ? kExitConsistent : kExitFailure; }

std::string Example61Result::to_key_value(const ExperimentConfig& config) const {
  std::ostringstream os;
  os << header_lines(config) << conormal::to_key_value(report);
  for (const auto& f : facts) os << "fact." << f.name << ": " << (f.holds ? "holds" : "FAILS") << '\n';
  os << "verified: " << flag(ok()) << '\n';
  return os.str();
}

Example61Result verify_example61(const ExperimentConfig& config) {
  auto ring = example61_ring();
  auto gb = buchberger(example61_ideal(ring), BuchbergerOptions{config.budget});
  Example61Result out;
  out.report = analyze(gb, config.seed, config.trials, config.budget);
  const auto& r = out.report;
  out.facts = {
      {"h_vector_1_5_4", r.reduction.hf.values == std::vector<int>{1, 5, 4}},
      {"type_4", r.reduction.type == 4},
      {"level", r.reduction.level},
      {"not_gorenstein", !r.reduction.gorenstein},
      {"square_cm_length_60",
       r.cm_square.status == CmStatus::CM && r.cm_square.lambda_min == 60 && r.cm_square.e_expected == 60},
  };
  return out;
}

int ConjectureResult::exit_code() const { return verdict_exit(report); }

std::string ConjectureResult::to_key_value(const ExperimentConfig& config) const {
  std::ostringstream os;
  os << header_lines(config) << "points.n: " << n << "\npoints.seed: " << points.points.seed.value_or(0)
     << "\npoints.redraws: " << points.redraws << "\npoints.general_hf: " << join(points.certificate.achieved_hf)
     << '\n'
     << conormal::to_key_value(report) << "counterexample: " << flag(counterexample) << '\n';
  return os.str();
}

ConjectureResult conjecture_experiment(const ExperimentConfig& config) {
  const int c = config.c;
  if (c < 2) throw Error("conjecture: c must be at least 2");
  if ((c < 5 || c > 7) && !config.allow_long) throw Error("conjecture: c outside 5..7 needs --allow-long");
  const std::uint64_t budget = config.allow_long && config.budget == kDefaultBudget ? 10 * kDefaultBudget : config.budget;
  ConjectureResult out;
  out.n = config.n.value_or(conjectured_point_count(c));
  out.points = random_general_points(c, out.n, config.p, config.seed);
  auto gb = vanishing_ideal(out.points.points);
  out.report = analyze(gb, config.seed, config.trials, budget);
  out.counterexample = out.report.cm_square.status == CmStatus::CM && !out.report.reduction.gorenstein;
  return out;
}

int AnalyzeResult::exit_code() const { return verdict_exit(report); }

std::string AnalyzeResult::to_key_value(const ExperimentConfig& config) const {
  std::ostringstream os;
  os << header_lines(config) << "source: " << source << '\n';
  if (points) os << "points.n: " << points->size() << '\n';
  os << conormal::to_key_value(report);
  return os.str();
}

AnalyzeResult analyze_command(const ExperimentConfig& config) {
  AnalyzeResult out;
  GroebnerBasis gb = [&] {
    const auto comma = config.input.find(',');
    if (comma != std::string::npos && !std::filesystem::exists(config.input)) {
      auto parts = split(config.input, ',');
      if (parts.size() != 2) throw Error("point spec must be c,n");
      const int c = std::stoi(parts[0]), n = std::stoi(parts[1]);
      auto g = random_general_points(c, n, config.p, config.seed);
      out.source = "random general points c=" + std::to_string(c) + " n=" + std::to_string(n);
      out.points = g.points;
      return vanishing_ideal(g.points);
    }
    const std::string text = read_file(config.input);
    out.source = config.input;
    if (trim(text).rfind("P ", 0) == 0) {
      out.points = read_point_set(text);
      return vanishing_ideal(*out.points);
    }
    return buchberger(parse_ideal_text(text), BuchbergerOptions{config.budget});
  }();
  out.report = analyze(gb, config.seed, config.trials, config.budget);
  return out;
}

std::string criteria_table(int c_max, int s_max) {
  if (c_max < 1 || s_max < 1 || c_max > kMaxCriteriaArgument || s_max > kMaxCriteriaArgument)
    throw Error("criteria table: ranges must lie in 1.." + std::to_string(kMaxCriteriaArgument));
  std::ostringstream os;
  os << "Q(c, s)\n" << std::setw(4) << "c\\s";
  for (int s = 1; s <= s_max; ++s) os << std::setw(12) << s;
  os << '\n';
  for (int c = 1; c <= c_max; ++c) {
    os << std::setw(4) << c;
    for (int s = 1; s <= s_max; ++s) os << std::setw(12) << Q(c, s).to_string();
    os << '\n';
  }
  os << "\nsocle degree 2 windows\n"
     << std::setw(4) << "c" << std::setw(8) << "q_max" << std::setw(14) << "K4" << std::setw(14) << "K5"
     << "  undecided_q  conjectured_n\n";
  for (int c = 3; c <= c_max; ++c) {
    auto v = quadric_count_verdict(c, 0);
    std::string k4, k5;
    for (const auto& [key, value] : v.numbers) {
      if (key == "K4") k4 = value;
      if (key == "K5") k5 = value;
    }
    os << std::setw(4) << c << std::setw(8) << binomial(c + 1, 2) - 1 << std::setw(14) << k4 << std::setw(14) << k5
       << "  " << std::setw(11) << join(undecided_quadric_counts(c)) << "  " << conjectured_point_count(c) << '\n';
  }
  return os.str();
}

bool StretchedRow::ok() const {
  return hf_ok && type_ok && contained && equal == equality_expected && lambda_square >= 0 && gap_ok && exceeds_ok;
}

std::string StretchedRow::to_line() const {
  std::ostringstream os;
  os << "c=" << c << " s=" << s << " r=" << r << " hf=" << flag(hf_ok) << " type=" << flag(type_ok)
     << " contained=" << flag(contained) << " equal=" << flag(equal) << " lambda_square=" << lambda_square
     << " lambda_L=" << lambda_L << " target=" << (c + 1) * (c + s) << " gap=" << flag(gap_ok)
     << " exceeds=" << flag(exceeds_ok) << " " << (ok() ? "ok" : "FAIL");
  return os.str();
}

std::vector<StretchedRow> stretched_suite(int c_max, int s_max, std::uint64_t seed, int unit_choices) {
  std::mt19937_64 rng(seed);
  std::vector<StretchedRow> rows;
  for (int c = 3; c <= c_max; ++c)
    for (int s = 2; s <= s_max; ++s)
      for (int r = 0; r < c; ++r) {
        auto ring = make_ring(kDefaultPrime, indexed_names("x", static_cast<std::size_t>(c)));
        auto L = ideal_L(c, s, ring);
        auto gbL = buchberger(L);
        StretchedRow row;
        row.c = c;
        row.s = s;
        row.r = r;
        row.lambda_L = length(gbL);
        row.equality_expected = r <= c - 3;
        std::vector<int> hf{1, c};
        hf.resize(static_cast<std::size_t>(s + 1), 1);
        for (int k = 0; k < unit_choices; ++k) {
          std::vector<Coeff> units;
          for (int i = 0; i < c - 1 - r; ++i) units.push_back(static_cast<Coeff>(1 + rng() % (kDefaultPrime - 1)));
          auto I = stretched_ideal(StretchedSpec{c, s, r, units}, ring);
          auto rep = invariant_report(buchberger(I));
          row.hf_ok = row.hf_ok && rep.hf.values == hf;
          row.type_ok = row.type_ok && rep.type == r + 1;
          auto square = ideal_square(Ideal(ring, irredundant_generators(I, ring->order())));
          auto gbSq = buchberger(square);
          const int len = length(gbSq);
          const bool contained = contains(gbL, square);
          const bool equal = contained && contains(gbSq, L);
          row.contained = row.contained && contained;
          if (k == 0) {
            row.lambda_square = len;
            row.equal = equal;
          } else if (len != row.lambda_square || equal != row.equal) {
            row.lambda_square = -1;  // depends on the units
          }
          if (r >= c - 2) row.gap_ok = row.gap_ok && len >= row.lambda_L + 2;
          if (c >= 4) row.exceeds_ok = row.exceeds_ok && len > (c + 1) * (c + s);
        }
        rows.push_back(row);
      }
  return rows;
}

}  // namespace conormal
