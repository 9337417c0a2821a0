#include "lpcount/path_model.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <stdexcept>

#include "lpcount/errors.hpp"

namespace lpcount {

NEWord::NEWord(std::string steps) : steps_(std::move(steps)) {
  auto bad = std::find_if(steps_.begin(), steps_.end(),
                          [](char c) { return c != 'E' && c != 'N'; });
  if (bad != steps_.end()) {
    throw std::invalid_argument(std::string("invalid step symbol '") + *bad +
                                "' in word");
  }
}

std::size_t NEWord::east_steps() const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), 'E'));
}

std::size_t NEWord::north_steps() const noexcept {
  return steps_.size() - east_steps();
}

HeightPath::HeightPath(std::vector<Coord> heights) : Tuple(std::move(heights)) {
  auto drop = std::adjacent_find(values_.begin(), values_.end(),
                                 [](Coord a, Coord b) { return a > b; });
  if (drop != values_.end()) {
    throw std::invalid_argument("heights must be nondecreasing, got " +
                                std::to_string(*drop) + " before " +
                                std::to_string(*(drop + 1)));
  }
}

DiffVector delta(const HeightPath& p) {
  std::vector<Coord> v(p.size());
  Coord previous = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    v[i] = p[i] - previous;
    previous = p[i];
  }
  return DiffVector(std::move(v));
}

HeightPath sigma(const DiffVector& v) {
  std::vector<Coord> p(v.size());
  Coord total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > std::numeric_limits<Coord>::max() - total) {
      throw std::overflow_error("partial sum exceeds 64 bits");
    }
    total += v[i];
    p[i] = total;
  }
  return HeightPath(std::move(p));
}

HeightPath word_to_heights(const NEWord& w) {
  std::vector<Coord> heights;
  heights.reserve(w.east_steps());
  Coord north = 0;
  for (char step : w.steps()) {
    if (step == 'N') {
      ++north;
    } else {
      heights.push_back(north);
    }
  }
  return HeightPath(std::move(heights));
}

NEWord heights_to_word(const HeightPath& p, Coord terminal_height) {
  if (!p.empty() && terminal_height < p.back()) {
    throw std::invalid_argument("terminal height " +
                                std::to_string(terminal_height) +
                                " is below the final path height " +
                                std::to_string(p.back()));
  }
  std::string steps;
  Coord north = 0;
  for (Coord h : p) {
    steps.append(h - north, 'N');
    steps.push_back('E');
    north = h;
  }
  steps.append(terminal_height - north, 'N');
  return NEWord(std::move(steps));
}

bool is_restricted_by(const HeightPath& q, const HeightPath& p) {
  if (q.size() != p.size()) {
    throw std::invalid_argument("paths of different lengths are not comparable");
  }
  return std::equal(q.begin(), q.end(), p.begin(), std::less_equal<>{});
}

bool in_polytope(const LatticePoint& x, const DiffVector& v) {
  if (x.size() != v.size()) {
    throw std::invalid_argument("lattice point and polytope dimension differ");
  }
  // Compare partial sums without forming them, so large entries cannot wrap.
  // slack = sum(v_1..v_i) - sum(x_1..x_i) must stay >= 0.
  Coord slack = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (v[i] > std::numeric_limits<Coord>::max() - slack) {
      slack = std::numeric_limits<Coord>::max();
    } else {
      slack += v[i];
    }
    if (x[i] > slack) return false;
    slack -= x[i];
  }
  return true;
}

std::string join_coords(std::span<const Coord> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_string(const NEWord& w) { return "w:" + w.steps(); }
std::string to_string(const HeightPath& p) { return "h:" + join_coords(p.values()); }
std::string to_string(const DiffVector& v) { return "d:" + join_coords(v.values()); }
std::string to_string(const LatticePoint& x) { return "(" + join_coords(x.values()) + ")"; }

std::vector<Coord> parse_coord_list(std::string_view text) {
  std::vector<Coord> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    Coord value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw PathParseError("bad coordinate '" + std::string(token) + "'",
                           std::string(token));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

HeightPath parse_path(std::string_view text) {
  if (text.size() < 2 || text[1] != ':') {
    throw PathParseError("path must start with w:, h: or d:, got '" +
                             std::string(text) + "'",
                         std::string(text));
  }
  std::string_view body = text.substr(2);
  switch (text[0]) {
    case 'w': {
      auto bad = body.find_first_not_of("EN");
      if (bad != std::string_view::npos) {
        throw PathParseError("bad step '" + std::string(1, body[bad]) + "'",
                             std::string(1, body[bad]));
      }
      return word_to_heights(NEWord(std::string(body)));
    }
    case 'h': {
      auto values = parse_coord_list(body);
      auto drop = std::adjacent_find(values.begin(), values.end(),
                                     [](Coord a, Coord b) { return a > b; });
      if (drop != values.end()) {
        std::string token = std::to_string(*(drop + 1));
        throw PathParseError("heights must be nondecreasing; " + token +
                                 " follows " + std::to_string(*drop),
                             token);
      }
      return HeightPath(std::move(values));
    }
    case 'd':
      return sigma(DiffVector(parse_coord_list(body)));
    default:
      throw PathParseError("unknown path prefix '" + std::string(text.substr(0, 2)) + "'",
                           std::string(text.substr(0, 2)));
  }
}

}  // namespace lpcount
