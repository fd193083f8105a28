#include "prodlab/survey.hpp"

#include "prodlab/adversary.hpp"
#include "prodlab/errors.hpp"
#include "prodlab/graph_families.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace prodlab {

namespace {

std::optional<Rational> pick(const std::vector<Rational>& universe, const std::vector<Rational>& excluded) {
  for (const Rational& x : universe)
    if (std::find(excluded.begin(), excluded.end(), x) == excluded.end()) return x;
  return std::nullopt;
}

bool contains(const std::vector<Rational>& universe, const Rational& x) {
  return std::find(universe.begin(), universe.end(), x) != universe.end();
}

// Name of the adversary construction refuting k = 2 lists over the universe.
std::optional<std::string> lower_bound(const SurveySpec& spec, const Graph& g, std::size_t n) {
  if (spec.k != 2 || spec.mode != Mode::Product) return std::nullopt;
  const auto& u = spec.universe;
  if (spec.family == Family::Cycle) {
    const auto a = pick(u, {Rational(0)});
    if (!a) return std::nullopt;
    const auto b = pick(u, {Rational(0), *a});
    if (!b) return std::nullopt;
    if (bad_odd_cycle(n, *a, *b)) return "bad_odd_cycle";
    return std::nullopt;
  }
  if (contains(u, 1) && contains(u, -1) && plus_minus_one(g)) return "plus_minus_one";
  if (n >= 7 && n % 4 == 3 && contains(u, 1)) {
    const auto a = pick(u, {Rational(0), Rational(1), Rational(-1)});
    if (!a) return std::nullopt;
    const auto b = pick(u, {Rational(0), Rational(1), *a});
    if (!b) return std::nullopt;
    bad_path(n, *a, *b);
    return "bad_path";
  }
  return std::nullopt;
}

}  // namespace

Family parse_family(std::string_view text) {
  if (text == "path") return Family::Path;
  if (text == "cycle") return Family::Cycle;
  throw PreconditionError("unknown family \"" + std::string(text) + "\" (expected path or cycle)");
}

std::string_view family_name(Family f) { return f == Family::Path ? "path" : "cycle"; }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return "FEASIBLE";
    case Verdict::Infeasible: return "INFEASIBLE";
    case Verdict::Refused: return "REFUSED";
  }
  return "?";
}

Graph family_graph(Family f, std::size_t n) {
  if (f == Family::Path) {
    if (n < 2) throw PreconditionError("path length must be at least 2");
    return families::path(n);
  }
  if (n < 3) throw PreconditionError("cycle length must be at least 3");
  return families::cycle(n);
}

SurveyRow survey_row(const SurveySpec& spec, std::size_t n) {
  if (spec.k == 0) throw PreconditionError("k must be positive");
  const Graph g = family_graph(spec.family, n);
  SurveyRow row;
  row.n = n;
  if (auto name = lower_bound(spec, g, n)) {
    row.lower = *name;
    row.verdict = Verdict::Infeasible;
  }
  try {
    const auto verdict = worst_list_verdict(g, spec.universe, spec.k, spec.mode, spec.cap);
    row.work = verdict.work;
    row.upper = "exhaustive";
    if (verdict.feasible() && row.verdict == Verdict::Infeasible)
      throw InvariantViolation("survey: exhaustive search contradicts " + row.lower + " at n=" + std::to_string(n));
    row.verdict = verdict.feasible() ? Verdict::Feasible : Verdict::Infeasible;
  } catch (const RefusalError&) {
    row.upper = "refused";
  }
  return row;
}

std::string survey_header(const SurveySpec& spec) {
  std::ostringstream out;
  out << "# survey family=" << family_name(spec.family) << " mode=" << mode_name(spec.mode) << " k=" << spec.k
      << " universe=";
  for (std::size_t i = 0; i < spec.universe.size(); ++i) out << (i ? "," : "") << format_rational(spec.universe[i]);
  out << " cap=" << spec.cap;
  return out.str();
}

std::string format_row(const SurveyRow& row) {
  std::ostringstream out;
  out << row.n << '\t' << verdict_name(row.verdict) << '\t' << row.lower << '\t' << row.upper << '\t' << row.work;
  return out.str();
}

SurveyRow parse_row(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  if (fields.size() != 5) throw ParseError("survey row: expected 5 fields");
  const auto number = [](const std::string& s) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("survey row: bad number \"" + s + "\"");
    return v;
  };
  SurveyRow row;
  row.n = number(fields[0]);
  if (fields[1] == "FEASIBLE") row.verdict = Verdict::Feasible;
  else if (fields[1] == "INFEASIBLE") row.verdict = Verdict::Infeasible;
  else if (fields[1] == "REFUSED") row.verdict = Verdict::Refused;
  else throw ParseError("survey row: bad verdict \"" + fields[1] + "\"");
  row.lower = fields[2];
  row.upper = fields[3];
  row.work = number(fields[4]);
  return row;
}

}  // namespace prodlab
