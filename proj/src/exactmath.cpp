#include "lpcount/exactmath.hpp"

#include <stdexcept>
#include <utility>

namespace lpcount {

Rational make_rational(const BigCount& num, const BigCount& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigCount binom(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  return binom(BigCount(static_cast<long>(n)), static_cast<std::uint64_t>(k));
}

BigCount binom(const BigCount& n, std::uint64_t k) {
  if (k == 0) return 1;
  if (n >= 0) {
    BigCount out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
  }
  if (n == -1) return 0;
  throw std::domain_error("binom(" + n.get_str() + ", " + std::to_string(k) +
                          ") is outside the supported domain");
}

BigCount rising_factorial(const BigCount& a, std::uint64_t m) {
  BigCount out = 1;
  BigCount factor = a;
  for (std::uint64_t i = 0; i < m; ++i) {
    out *= factor;
    if (out == 0) break;
    ++factor;
  }
  return out;
}

BigCount rising_factorial(std::int64_t a, std::uint64_t m) {
  return rising_factorial(BigCount(static_cast<long>(a)), m);
}

BigCount factorial(std::uint64_t n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigCount catalan(std::uint64_t n) {
  BigCount c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * n),
               static_cast<unsigned long>(n));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return c;
}

IntMatrix::IntMatrix(const std::vector<std::vector<BigCount>>& rows)
    : n_(rows.size()), data_(rows.size() * rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

BigCount det_int(const IntMatrix& a) {
  if (a.size() <= 4) return det_cofactor(a);
  return det_bareiss(a);
}

BigCount det_bareiss(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;

  int sign = 1;
  BigCount previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && a(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return 0;
    if (pivot_row != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
      sign = -sign;
    }

    const BigCount& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigCount& entry = a(i, j);
        entry = entry * pivot - a(i, k) * a(k, j);
        if (!mpz_divisible_p(entry.get_mpz_t(), previous_pivot.get_mpz_t())) {
          throw std::logic_error("inexact division in fraction-free elimination");
        }
        mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(),
                     previous_pivot.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous_pivot = pivot;
  }
  BigCount det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

BigCount cofactor_expand(const IntMatrix& a, std::vector<std::size_t>& columns,
                         std::size_t row) {
  if (columns.empty()) return 1;
  BigCount total = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const BigCount& entry = a(row, columns[c]);
    if (entry == 0) continue;
    std::size_t col = columns[c];
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(c));
    BigCount minor = cofactor_expand(a, columns, row + 1);
    columns.insert(columns.begin() + static_cast<std::ptrdiff_t>(c), col);
    if (c % 2 == 0) {
      total += entry * minor;
    } else {
      total -= entry * minor;
    }
  }
  return total;
}

}  // namespace

BigCount det_cofactor(const IntMatrix& a) {
  std::vector<std::size_t> columns(a.size());
  for (std::size_t j = 0; j < columns.size(); ++j) columns[j] = j;
  return cofactor_expand(a, columns, 0);
}

}  // namespace lpcount
