#include "lpcount/identities.hpp"

#include <stdexcept>

namespace lpcount {

namespace {

BigCount big(std::uint64_t x) { return BigCount(static_cast<unsigned long>(x)); }

}  // namespace

ChildSet children(const LatticePoint& y) {
  if (y.empty()) throw std::invalid_argument("the empty lattice point has no children");
  const std::size_t n = y.size() + 1;
  const Coord last = y.back();

  ChildSet out{y, {}};
  out.children.reserve(last + 2);

  std::vector<Coord> coords(y.begin(), y.end());
  coords.push_back(0);
  out.children.emplace_back(coords);
  for (Coord i = 0; i <= last; ++i) {
    coords[n - 2] = last - i;
    coords[n - 1] = i + 1;
    out.children.emplace_back(coords);
  }
  return out;
}

LatticePoint parent(const LatticePoint& x) {
  if (x.empty()) throw std::invalid_argument("the empty lattice point has no parent");
  const std::size_t n = x.size();
  std::vector<Coord> coords(x.begin(), x.end() - 1);
  if (x.back() != 0 && n >= 2) coords[n - 2] += x.back() - 1;
  return LatticePoint(std::move(coords));
}

BigCount lemma_lhs(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  BigCount total = 0;
  for (std::uint64_t i = 0; i <= c; ++i) {
    total += binom(big(b + c - i) - 1, c - i) * binom(big(a + i), i + 1);
  }
  return total;
}

BigCount lemma_rhs(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  BigCount total = 0;
  for (std::uint64_t j = 0; j < a; ++j) total += binom(big(a + b + c - j - 1), c);
  return total;
}

BigCount lemma_closed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return binom(big(a + b + c), c + 1) - binom(big(b + c), c + 1);
}

BigCount lemma_telescoped(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  BigCount total = 0;
  for (std::uint64_t j = 0; j < a; ++j) {
    total += binom(big(a + b + c - j), c + 1) - binom(big(a + b + c - j - 1), c + 1);
  }
  return total;
}

std::pair<BigCount, BigCount> vandermonde_gen(std::uint64_t d, std::uint64_t e,
                                              std::uint64_t f) {
  if (f > e + 1) throw std::domain_error("vandermonde_gen requires f <= e + 1");
  BigCount lhs = 0;
  for (std::uint64_t k = 0; k <= f; ++k) {
    lhs += binom(big(d + k), k) * binom(big(e + 1) - 1 - big(k), f - k);
  }
  return {lhs, binom(big(d + e + 1), f)};
}

BigCount children_weight_sum(std::uint64_t v1, std::uint64_t v2, std::uint64_t c) {
  // Last two coordinates of the children: (c, 0) and (c - i, i + 1).
  auto weight = [&](std::uint64_t second_last, std::uint64_t last) -> BigCount {
    return binom(big(v2 + second_last) - 1, second_last) *
           binom(big(v1 + last) - 1, last);
  };
  BigCount total = weight(c, 0);
  for (std::uint64_t i = 0; i <= c; ++i) total += weight(c - i, i + 1);
  return total;
}

BigCount recurrence_weight_sum(std::uint64_t v1, std::uint64_t v2, std::uint64_t c) {
  BigCount total = 0;
  for (std::uint64_t j = 0; j <= v1; ++j) total += binom(big(v1 + v2 - j + c) - 1, c);
  return total;
}

}  // namespace lpcount
