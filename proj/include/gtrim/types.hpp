#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gtrim {

// Dense vertex index in [0, n). Targets are stored as 32-bit ids, so n < 2^32.
using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;

inline constexpr std::uint64_t kMaxVertexCount = std::numeric_limits<VertexId>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CapacityError : public Error {
  using Error::Error;
};
class FormatError : public Error {
  using Error::Error;
};
class IoError : public Error {
  using Error::Error;
};
class ValidationError : public Error {
  using Error::Error;
};
class ConfigError : public Error {
  using Error::Error;
};
class ArgumentError : public Error {
  using Error::Error;
};
class InfeasibleError : public Error {
  using Error::Error;
};

}  // namespace gtrim
