#pragma once

#include <stdexcept>
#include <string>

namespace tmh {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function (e.g. x <= 0 for g_k).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A request would materialize too much data (block sizes, weight vectors).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A ball comparison could not be decided below the precision ceiling.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A search exhausted its step budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A computed enclosure contradicts a structural identity.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (target strings, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tmh
