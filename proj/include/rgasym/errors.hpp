#pragma once

#include <stdexcept>
#include <string>

namespace rgasym {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. These indicate a bug rather than bad
/// input, and the CLI maps them to a dedicated exit code.
class InternalAssertion : public Error {
 public:
  using Error::Error;
};

// series_core
class NonUnitDivisor : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
};
class BadConstantTerm : public Error {
 public:
  using Error::Error;
};
class InsufficientOrder : public Error {
 public:
  using Error::Error;
};
class MissingWeight : public Error {
 public:
  using Error::Error;
};
class BadParity : public Error {
 public:
  using Error::Error;
};

// laplace
class DegeneratePhase : public Error {
 public:
  using Error::Error;
};

// exact_counts
class NonIntegerResult : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
};
class NonRealResult : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
};
class LimitExceeded : public Error {
 public:
  using Error::Error;
};
class MissingCount : public Error {
 public:
  MissingCount(int k, int n)
      : Error("missing count for k=" + std::to_string(k) + " n=" + std::to_string(n)), k_(k), n_(n) {}
  int k() const { return k_; }
  int n() const { return n_; }

 private:
  int k_;
  int n_;
};
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};
class OffsetMismatch : public Error {
 public:
  using Error::Error;
};

// regular_expansion
class ValuationViolation : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
};
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

// connected_expansion
class IrrationalPrefactor : public Error {
 public:
  using Error::Error;
};
class BadScale : public Error {
 public:
  using Error::Error;
};
class GapMismatch : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
};

// validation
class PrecisionUnderflow : public Error {
 public:
  using Error::Error;
};

}  // namespace rgasym
