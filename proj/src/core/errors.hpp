#pragma once

#include <stdexcept>
#include <string>

namespace flagcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad rank, malformed string, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The variety is well formed but outside the rows/lists a procedure knows.
class NotCovered : public Error {
 public:
  using Error::Error;
};

class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

/// A certificate routine was handed a polynomial shape it does not decide.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

}  // namespace flagcalc
