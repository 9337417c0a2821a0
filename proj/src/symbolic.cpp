#include "lpcount/symbolic.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lpcount/errors.hpp"

namespace lpcount {

namespace {

Rational reciprocal_factorial_product(const LatticePoint& x) {
  BigCount den = 1;
  for (Coord xi : x) den *= factorial(xi);
  return make_rational(1, den);
}

DiffVector all_ones(std::size_t n) { return DiffVector(std::vector<Coord>(n, 1)); }

// Coefficients of a^{(m)} = a (a+1) ... (a+m-1) in powers of a.
std::vector<BigCount> rising_factorial_coefficients(Coord m) {
  std::vector<BigCount> c{1};
  for (Coord k = 0; k < m; ++k) {
    // multiply by (a + k)
    std::vector<BigCount> next(c.size() + 1, 0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] += c[d] * static_cast<unsigned long>(k);
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

void MonomialPolynomial::add(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent tuple has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MonomialPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

RFPolynomial symbolic_lp(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapacityError("symbolic engine capacity exceeded: n = " + std::to_string(n) +
                            " > cap " + std::to_string(cap),
                        cap);
  }
  RFPolynomial poly;
  poly.nvars_ = n;
  for (const LatticePoint& x : enumerate_polytope(all_ones(n))) {
    poly.terms_.push_back(RFTerm{reciprocal_factorial_product(x), x});
  }
  return poly;
}

MonomialPolynomial expand(const RFPolynomial& rf) {
  const std::size_t n = rf.nvars();
  MonomialPolynomial out(n);
  std::vector<std::vector<BigCount>> rows;  // rows[m] = coefficients of a^{(m)}
  auto row = [&rows](Coord m) -> const std::vector<BigCount>& {
    while (rows.size() <= m) rows.push_back(rising_factorial_coefficients(rows.size()));
    return rows[m];
  };

  for (const RFTerm& term : rf.terms()) {
    // Partial product over variables v_1..v_k, keyed by natural-order exponents.
    std::map<MonomialPolynomial::Exponents, BigCount> partial{
        {MonomialPolynomial::Exponents(n, 0), 1}};
    for (std::size_t k = 1; k <= n; ++k) {
      const auto& coeffs = row(term.degree_of_variable(k));
      std::map<MonomialPolynomial::Exponents, BigCount> next;
      for (const auto& [e, c] : partial) {
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
          if (coeffs[d] == 0) continue;
          auto f = e;
          f[k - 1] = d;
          next[f] += c * coeffs[d];
        }
      }
      partial = std::move(next);
    }
    for (const auto& [e, c] : partial) out.add(e, term.coeff * Rational(c));
  }
  return out;
}

Rational evaluate(const RFPolynomial& poly, const DiffVector& v) {
  const std::size_t n = poly.nvars();
  if (v.size() != n) throw std::invalid_argument("point has wrong dimension");
  Rational total = 0;
  for (const RFTerm& term : poly.terms()) {
    BigCount product = 1;
    for (std::size_t k = 1; k <= n && product != 0; ++k) {
      product *= rising_factorial(BigCount(v[k - 1]), term.degree_of_variable(k));
    }
    total += term.coeff * Rational(product);
  }
  if (total.get_den() != 1) {
    throw std::logic_error("non-integral value " + to_fraction_string(total) +
                           " at " + to_string(v));
  }
  return total;
}

Rational evaluate(const MonomialPolynomial& poly, const DiffVector& v) {
  if (v.size() != poly.nvars()) throw std::invalid_argument("point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : poly.terms()) {
    BigCount product = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      BigCount power;
      mpz_pow_ui(power.get_mpz_t(), BigCount(v[k]).get_mpz_t(),
                 static_cast<unsigned long>(e[k]));
      product *= power;
    }
    total += c * Rational(product);
  }
  return total;
}

bool verify_det_identity(std::size_t n, std::size_t trials, std::uint64_t seed) {
  const RFPolynomial poly = symbolic_lp(n, std::max(n, kDefaultTheoremCap));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> entry(0, 50);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Coord> raw(n);
    for (Coord& x : raw) x = entry(rng);
    DiffVector v(std::move(raw));
    if (Rational(count_determinant(sigma(v))) != evaluate(poly, v)) return false;
  }
  return true;
}

bool verify_det_identity_grid(std::size_t n) {
  const RFPolynomial poly = symbolic_lp(n, std::max(n, kDefaultTheoremCap));
  std::vector<Coord> raw(n, 0);
  while (true) {
    DiffVector v(raw);
    if (Rational(count_determinant(sigma(v))) != evaluate(poly, v)) return false;
    std::size_t k = n;
    while (k > 0 && raw[k - 1] == n) raw[--k] = 0;
    if (k == 0) return true;
    ++raw[k - 1];
  }
}

namespace {

template <typename Range>
std::string serialize_terms(const Range& terms) {
  std::ostringstream out;
  for (const auto& [exponents, coeff] : terms) {
    out << to_fraction_string(coeff) << "  " << join_coords(exponents) << '\n';
  }
  return out.str();
}

struct ParsedTerm {
  Rational coeff;
  std::vector<Coord> exponents;
};

std::vector<ParsedTerm> parse_terms(std::string_view text, std::size_t nvars) {
  std::vector<ParsedTerm> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto gap = line.find("  ");
    if (gap == std::string::npos) throw std::invalid_argument("malformed term line: " + line);
    Rational coeff;
    try {
      coeff = Rational(line.substr(0, gap));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed coefficient in: " + line);
    }
    if (coeff.get_den() == 0) throw std::invalid_argument("zero denominator in: " + line);
    coeff.canonicalize();
    auto exps = parse_coord_list(std::string_view(line).substr(gap + 2));
    if (exps.size() != nvars) throw std::invalid_argument("wrong arity in: " + line);
    out.push_back({std::move(coeff), std::move(exps)});
  }
  return out;
}

}  // namespace

std::string serialize(const RFPolynomial& poly) {
  std::vector<std::pair<std::span<const Coord>, Rational>> rows;
  for (const RFTerm& t : poly.terms()) rows.emplace_back(t.exponents.values(), t.coeff);
  return serialize_terms(rows);
}

std::string serialize(const MonomialPolynomial& poly) {
  return serialize_terms(poly.terms());
}

RFPolynomial parse_rf_polynomial(std::string_view text, std::size_t nvars) {
  RFPolynomial poly;
  poly.nvars_ = nvars;
  const DiffVector ones = all_ones(nvars);
  for (auto& [coeff, exps] : parse_terms(text, nvars)) {
    LatticePoint x(std::move(exps));
    if (!in_polytope(x, ones)) {
      throw std::invalid_argument("exponents " + to_string(x) +
                                  " are not a point of the all-ones polytope");
    }
    if (coeff != reciprocal_factorial_product(x)) {
      throw std::invalid_argument("coefficient of " + to_string(x) + " must be prod 1/x_i!");
    }
    poly.terms_.push_back(RFTerm{std::move(coeff), std::move(x)});
  }
  std::sort(poly.terms_.begin(), poly.terms_.end(),
            [](const RFTerm& a, const RFTerm& b) { return a.exponents < b.exponents; });
  auto dup = std::adjacent_find(
      poly.terms_.begin(), poly.terms_.end(),
      [](const RFTerm& a, const RFTerm& b) { return a.exponents == b.exponents; });
  if (dup != poly.terms_.end()) {
    throw std::invalid_argument("duplicate term " + to_string(dup->exponents));
  }
  return poly;
}

MonomialPolynomial parse_monomial_polynomial(std::string_view text, std::size_t nvars) {
  MonomialPolynomial poly(nvars);
  for (auto& [coeff, exps] : parse_terms(text, nvars)) poly.add(exps, coeff);
  return poly;
}

}  // namespace lpcount
