#pragma once

// LP(sigma(v)) as an exact polynomial in v_1..v_n.
//
// In the rising-factorial basis there is one term per lattice point x of the
// all-ones polytope, with coefficient prod 1/x_i! and rising degree x_i on
// variable v_{n+1-i}. Note the reversal: position i of the lattice point
// talks about variable n+1-i. RFTerm keeps the lattice point as is; the
// monomial basis is stored in natural v_1..v_n order.
//
// Text format (one term per line): "num/den  e_1,e_2,...,e_n". For RF terms
// the tuple is the lattice point x; for monomials it is the exponent of
// v_1..v_n.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lpcount/counting.hpp"
#include "lpcount/exactmath.hpp"
#include "lpcount/path_model.hpp"

namespace lpcount {

struct RFTerm {
  Rational coeff;
  LatticePoint exponents;

  /// Rising degree carried by variable v_k (1-based), i.e. x_{n+1-k}.
  Coord degree_of_variable(std::size_t k) const {
    return exponents[exponents.size() - k];
  }

  friend bool operator==(const RFTerm&, const RFTerm&) = default;
};

class RFPolynomial {
public:
  RFPolynomial() = default;

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<RFTerm>& terms() const noexcept { return terms_; }

  friend bool operator==(const RFPolynomial&, const RFPolynomial&) = default;

private:
  friend RFPolynomial symbolic_lp(std::size_t n, std::size_t cap);
  friend RFPolynomial parse_rf_polynomial(std::string_view text, std::size_t nvars);

  std::size_t nvars_ = 0;
  std::vector<RFTerm> terms_;  // lexicographic by exponents
};

class MonomialPolynomial {
public:
  using Exponents = std::vector<Coord>;

  explicit MonomialPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

  /// Adds c * v^e; entries that cancel to zero are dropped.
  /// Throws std::invalid_argument if e has the wrong length.
  void add(const Exponents& e, const Rational& c);

  Rational coefficient(const Exponents& e) const;

  friend bool operator==(const MonomialPolynomial&, const MonomialPolynomial&) = default;

private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// The rising-factorial form of LP for paths of length n.
/// Throws CapacityError when n > cap.
RFPolynomial symbolic_lp(std::size_t n, std::size_t cap = kDefaultTheoremCap);

MonomialPolynomial expand(const RFPolynomial& rf);

/// Exact value at integer v. Throws std::invalid_argument on a length
/// mismatch and std::logic_error if the result is not an integer.
Rational evaluate(const RFPolynomial& poly, const DiffVector& v);
Rational evaluate(const MonomialPolynomial& poly, const DiffVector& v);

/// Checks count_determinant(sigma(v)) == evaluate(symbolic_lp(n), v) at
/// `trials` random points with entries in [0, 50].
bool verify_det_identity(std::size_t n, std::size_t trials, std::uint64_t seed = 0);

/// Same check on every point of {0..n}^n; exact certification for small n.
bool verify_det_identity_grid(std::size_t n);

std::string serialize(const RFPolynomial& poly);
std::string serialize(const MonomialPolynomial& poly);

/// Reads the text format back. Terms must be valid lattice points of the
/// all-ones polytope with coefficient prod 1/x_i!; throws
/// std::invalid_argument otherwise.
RFPolynomial parse_rf_polynomial(std::string_view text, std::size_t nvars);
MonomialPolynomial parse_monomial_polynomial(std::string_view text, std::size_t nvars);

}  // namespace lpcount
