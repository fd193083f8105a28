#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace prodlab {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-1/2", "+4/6" (reduced on construction). Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

/// Tie-breaking order on labels: (numerator, denominator) lexicographic.
/// This is not the numeric order: -1/2 precedes -1/3.
bool label_less(const Rational& a, const Rational& b);

struct LabelLess {
  bool operator()(const Rational& a, const Rational& b) const { return label_less(a, b); }
};

/// Sorts by label order and removes duplicates.
void normalize_labels(std::vector<Rational>& labels);

}  // namespace prodlab
