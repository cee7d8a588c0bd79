#pragma once

#include <stdexcept>
#include <string>

namespace arborlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two permutations of different degrees were combined.
class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

/// An exhaustive-enumeration operation refused to run because the group
/// (or search space) exceeds the configured cap.
class OrderCapError : public Error {
public:
  using Error::Error;
};

/// Bad argument outside a function's stated domain.
class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (cycle strings, tower specs, config files).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Exact integer growth exceeded a configured bit-size or count cap.
/// Carries the index of the offending step when known.
class GrowthCapError : public Error {
public:
  GrowthCapError(const std::string& what, long step) : Error(what), step_(step) {}
  long step() const { return step_; }

private:
  long step_ = -1;
};

} // namespace arborlab
