#pragma once

// Northeast lattice paths in three representations: E/N words, height
// tuples and difference tuples, plus lattice points of the Pitman-Stanley
// polytope. All types are immutable values validated on construction.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpcount {

using Coord = std::uint64_t;

namespace detail {

// Shared storage for the tuple-like domain types. Tag keeps the types distinct.
template <typename Tag>
class Tuple {
public:
  Tuple() = default;

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Coord operator[](std::size_t i) const { return values_[i]; }
  Coord back() const { return values_.back(); }

  std::span<const Coord> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

protected:
  explicit Tuple(std::vector<Coord> values) : values_(std::move(values)) {}

  std::vector<Coord> values_;
};

}  // namespace detail

/// Sequence of E and N steps. The empty word is the n = 0 path.
class NEWord {
public:
  NEWord() = default;
  /// Throws std::invalid_argument on any symbol other than 'E' or 'N'.
  explicit NEWord(std::string steps);

  const std::string& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  std::size_t east_steps() const noexcept;
  std::size_t north_steps() const noexcept;

  friend bool operator==(const NEWord&, const NEWord&) = default;

private:
  std::string steps_;
};

/// Nondecreasing heights (p_1, ..., p_n); p_i is the height of the path over
/// the interval [i-1, i].
class HeightPath : public detail::Tuple<struct HeightTag> {
public:
  HeightPath() = default;
  /// Throws std::invalid_argument if the heights decrease anywhere.
  explicit HeightPath(std::vector<Coord> heights);
  HeightPath(std::initializer_list<Coord> heights)
      : HeightPath(std::vector<Coord>(heights)) {}
};

/// Difference tuple v = delta(p); v_i counts the N steps taken along x = i-1.
class DiffVector : public detail::Tuple<struct DiffTag> {
public:
  DiffVector() = default;
  explicit DiffVector(std::vector<Coord> diffs)
      : Tuple(std::move(diffs)) {}
  DiffVector(std::initializer_list<Coord> diffs)
      : DiffVector(std::vector<Coord>(diffs)) {}
};

class LatticePoint : public detail::Tuple<struct PointTag> {
public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords)
      : Tuple(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords)
      : LatticePoint(std::vector<Coord>(coords)) {}
};

DiffVector delta(const HeightPath& p);

/// Partial sums. Throws std::overflow_error if a partial sum exceeds 64 bits.
HeightPath sigma(const DiffVector& v);

/// p_i is the number of N symbols before the i-th E. Trailing N symbols are
/// not part of the height tuple; recover them from north_steps().
HeightPath word_to_heights(const NEWord& w);

/// Inverse of word_to_heights. `terminal_height` is the final y-coordinate m;
/// throws std::invalid_argument when m < p_n.
NEWord heights_to_word(const HeightPath& p, Coord terminal_height);

/// q_i <= p_i for every i. Throws std::invalid_argument on length mismatch.
bool is_restricted_by(const HeightPath& q, const HeightPath& p);

/// Every partial sum of x is bounded by the matching partial sum of v.
/// Throws std::invalid_argument on length mismatch.
bool in_polytope(const LatticePoint& x, const DiffVector& v);

// Textual forms shared with the CLI: "w:ENEN", "h:0,1", "d:0,1".

std::string to_string(const NEWord& w);
std::string to_string(const HeightPath& p);
std::string to_string(const DiffVector& v);
std::string to_string(const LatticePoint& x);

/// Comma-separated decimal list without any prefix.
std::string join_coords(std::span<const Coord> values);

/// Parses a path in any of the three prefixed forms and returns its heights.
/// Throws PathParseError naming the offending token.
HeightPath parse_path(std::string_view text);

std::vector<Coord> parse_coord_list(std::string_view text);

}  // namespace lpcount
