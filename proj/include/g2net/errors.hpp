#pragma once

#include <stdexcept>
#include <string>

namespace g2net {

/// Malformed input: NET syntax, bad labels, or a diagram that fails
/// validation (non-planar rotation system, label used != 2 times).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic failure during evaluation: division by zero, substitution
/// producing a zero denominator, or a numeric evaluation hitting a pole.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant (e.g. a connected bridgeless trivalent net
/// with no reducible mesh). These indicate a bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace g2net
