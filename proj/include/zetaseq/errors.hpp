#pragma once

#include <stdexcept>
#include <string>

namespace zetaseq {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation at (or within the guard radius of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the region where an evaluator is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested accuracy cannot be reached with the configured precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Iterative solver hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Two independent evaluation routes disagree.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetaseq
