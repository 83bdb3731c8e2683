#pragma once

#include <stdexcept>
#include <string>

namespace qes {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeQInt : Error {
  explicit NegativeQInt(int n) : Error("qint of negative integer " + std::to_string(n)) {}
};

struct EvalAtZero : Error {
  EvalAtZero() : Error("Laurent polynomial evaluated at s = 0") {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct UnknownVariable : Error {
  using Error::Error;
};

struct UnsupportedArity : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct RingMismatch : Error {
  using Error::Error;
};

struct SingularParameter : Error {
  using Error::Error;
};

struct DegenerateModule : Error {
  using Error::Error;
};

struct SingularCasimir : Error {
  using Error::Error;
};

// Raised when an operator maps a basis vector outside the codomain span.
struct NotInvariant : Error {
  int component;
  int index;
  std::string remainder;
  NotInvariant(int comp, int idx, std::string rem)
      : Error("not invariant: component " + std::to_string(comp) + ", basis index " +
              std::to_string(idx) + ", remainder " + rem),
        component(comp), index(idx), remainder(std::move(rem)) {}
};

}  // namespace qes
