#pragma once

#include <stdexcept>
#include <string>

namespace hesselink {

// Raised by parse_polynomial. The kind distinguishes the four contract
// failure modes so the CLI can print a precise message (all map to exit 2).
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVariable, NonHomogeneous, ZeroPolynomial };

  ParseError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Raised when a higher-degree state computation would enumerate more column
// tuples than the caller's cap allows (CLI exit 3).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the lower-triangular invariance check when the incumbent
// one-parameter subgroup is missing or its weights are not weakly increasing.
class HypothesisNotMet : public std::runtime_error {
 public:
  explicit HypothesisNotMet(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hesselink
