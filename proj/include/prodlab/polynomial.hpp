#pragma once

#include "prodlab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace prodlab {

using Exponents = std::vector<unsigned>;

inline constexpr std::size_t kDefaultTermCap = std::size_t{1} << 21;

/// Multivariate polynomial with big-integer coefficients over a fixed number
/// of variables. Zero coefficients are never stored.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t variables = 0) : variables_(variables) {}

  static SparsePolynomial constant(std::size_t variables, const BigInt& c);
  static SparsePolynomial monomial(Exponents exponents, const BigInt& c = 1);

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^exponents, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const BigInt& c);
  /// Coefficient of x^exponents, 0 when absent.
  BigInt coefficient(const Exponents& exponents) const;
  /// Largest total degree; nullopt for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  /// Largest exponent of any single variable (0 for the zero polynomial).
  unsigned max_exponent() const;

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator-(const SparsePolynomial& other) const;
  SparsePolynomial operator-() const;
  /// Throws RefusalError when the result would exceed `term_cap` terms.
  SparsePolynomial multiply(const SparsePolynomial& other, std::size_t term_cap = kDefaultTermCap) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const { return multiply(other); }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  std::size_t variables_;
  std::map<Exponents, BigInt> terms_;
};

unsigned total_degree_of(const Exponents& exponents);

/// Exact permanent by Ryser's formula with Gray-code subset order.
/// Throws PreconditionError on a non-square matrix.
BigInt permanent(const std::vector<std::vector<BigInt>>& matrix);

/// Sum over all permutations; reference implementation for small matrices.
BigInt permanent_naive(const std::vector<std::vector<BigInt>>& matrix);

}  // namespace prodlab
