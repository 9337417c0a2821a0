#pragma once

// Exact integer and rational arithmetic on top of GMP: binomials with the
// small negative-argument extension used by the counting formulas, rising
// factorials, Catalan numbers and fraction-free determinants.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lpcount {

/// Arbitrary-precision integer. Counts are nonnegative; determinant
/// intermediates may be negative.
using BigCount = mpz_class;

/// Always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const BigCount& num, const BigCount& den);

/// "num/den", with the denominator written even when it is 1.
std::string to_fraction_string(const Rational& r);

/// Binomial coefficient with the following extension:
///   k < 0                -> 0
///   k == 0               -> 1 (any n)
///   n >= 0, k > n        -> 0
///   n == -1, k >= 1      -> 0
/// Any other negative n with k >= 1 throws std::domain_error.
BigCount binom(std::int64_t n, std::int64_t k);
BigCount binom(const BigCount& n, std::uint64_t k);

/// a (a+1) ... (a+m-1); the empty product 1 when m == 0.
BigCount rising_factorial(const BigCount& a, std::uint64_t m);
BigCount rising_factorial(std::int64_t a, std::uint64_t m);

BigCount factorial(std::uint64_t n);

/// binom(2n, n) / (n + 1).
BigCount catalan(std::uint64_t n);

/// Dense square matrix of big integers, row major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  /// Throws std::invalid_argument unless every row has rows.size() entries.
  explicit IntMatrix(const std::vector<std::vector<BigCount>>& rows);

  std::size_t size() const noexcept { return n_; }
  BigCount& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigCount& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

private:
  std::size_t n_ = 0;
  std::vector<BigCount> data_;
};

/// Exact determinant. Cofactor expansion up to 4x4, Bareiss elimination above.
BigCount det_int(const IntMatrix& a);

/// Bareiss fraction-free elimination. Pivot is the first nonzero entry in the
/// current column; each division is checked to be exact and a failure throws
/// std::logic_error.
BigCount det_bareiss(IntMatrix a);

/// Laplace expansion along the first row. Exponential; meant for small n.
BigCount det_cofactor(const IntMatrix& a);

}  // namespace lpcount
