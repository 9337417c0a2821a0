#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpcount {

/// Malformed textual path; `token()` is the offending piece of input.
class PathParseError : public std::invalid_argument {
public:
  PathParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

private:
  std::string token_;
};

/// An engine or oracle refused its input because a configured cap would be
/// exceeded.
class CapacityError : public std::runtime_error {
public:
  CapacityError(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

}  // namespace lpcount
