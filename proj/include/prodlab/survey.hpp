#pragma once

#include "prodlab/labelling.hpp"
#include "prodlab/rational.hpp"
#include "prodlab/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prodlab {

enum class Family { Path, Cycle };

Family parse_family(std::string_view text);
std::string_view family_name(Family f);

enum class Verdict { Feasible, Infeasible, Refused };

std::string_view verdict_name(Verdict v);

struct SurveySpec {
  Family family = Family::Cycle;
  std::size_t n_min = 3;
  std::size_t n_max = 12;
  std::vector<Rational> universe;
  std::size_t k = 2;
  Mode mode = Mode::Product;
  std::uint64_t cap = kDefaultWorstListCap;
};

struct SurveyRow {
  std::size_t n = 0;
  Verdict verdict = Verdict::Refused;
  /// Adversary construction giving the lower bound, or "-".
  std::string lower = "-";
  /// "exhaustive" when every k-list assignment over the universe was decided.
  std::string upper = "-";
  std::uint64_t work = 0;

  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

/// The family member of size n: P_n on n edges or C_n.
Graph family_graph(Family f, std::size_t n);

/// One row. Adversary witnesses are built when the universe contains their
/// labels; the exhaustive verdict must agree with them.
SurveyRow survey_row(const SurveySpec& spec, std::size_t n);

/// "# survey ..." line identifying a table.
std::string survey_header(const SurveySpec& spec);
std::string format_row(const SurveyRow& row);
/// Inverse of format_row; throws ParseError.
SurveyRow parse_row(std::string_view line);

}  // namespace prodlab
