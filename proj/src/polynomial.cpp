#include "prodlab/polynomial.hpp"

#include "prodlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace prodlab {

SparsePolynomial SparsePolynomial::constant(std::size_t variables, const BigInt& c) {
  SparsePolynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(Exponents exponents, const BigInt& c) {
  SparsePolynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

void SparsePolynomial::add_term(const Exponents& exponents, const BigInt& c) {
  if (exponents.size() != variables_) throw PreconditionError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SparsePolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned total_degree_of(const Exponents& exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

std::optional<unsigned> SparsePolynomial::total_degree() const {
  std::optional<unsigned> best;
  for (const auto& [e, c] : terms_) best = std::max(best.value_or(0), total_degree_of(e));
  return best;
}

unsigned SparsePolynomial::max_exponent() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_)
    for (unsigned t : e) best = std::max(best, t);
  return best;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
  if (other.variables_ != variables_) throw PreconditionError("polynomials over different variable counts");
  SparsePolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out(variables_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const { return *this + (-other); }

SparsePolynomial SparsePolynomial::multiply(const SparsePolynomial& other, std::size_t term_cap) const {
  if (other.variables_ != variables_) throw PreconditionError("polynomials over different variable counts");
  SparsePolynomial out(variables_);
  Exponents e(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < variables_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
      if (out.terms_.size() > term_cap) throw RefusalError("polynomial expansion exceeds the term cap");
    }
  }
  return out;
}

BigInt permanent(const std::vector<std::vector<BigInt>>& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) throw PreconditionError("permanent of a non-square matrix");
  if (n == 0) return 1;
  if (n > 30) throw RefusalError("permanent: matrix too large");
  // sum over column subsets S of (-1)^|S| prod_i sum_{j in S} a_ij, times (-1)^n
  std::vector<BigInt> row_sum(n, 0);
  BigInt total = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t flipped = next ^ gray;
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(flipped));
    const bool added = (next & flipped) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sum[i] += matrix[i][j];
      else
        row_sum[i] -= matrix[i][j];
    }
    gray = next;
    BigInt prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if (std::popcount(gray) % 2 == 1)
      total -= prod;
    else
      total += prod;
  }
  return n % 2 == 1 ? BigInt(-total) : total;
}

BigInt permanent_naive(const std::vector<std::vector<BigInt>>& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) throw PreconditionError("permanent of a non-square matrix");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    BigInt prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= matrix[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace prodlab
