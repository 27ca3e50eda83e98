#pragma once

#include <stdexcept>
#include <string>

namespace typik {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An axiom handed to the encoder is outside the normal-form shapes.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

// Node or time budget of a search ran out before the answer was known.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The program has no answer set: the KB is inconsistent.
class NoModel : public Error {
 public:
  using Error::Error;
};

// Answer sets exist but none contains an instance of every satisfiable T-concept.
class NoTCompleteModel : public Error {
 public:
  using Error::Error;
};

class InvalidPdlp : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but outside what the engine supports (e.g. rank bound too large).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace typik
