#ifndef MONKBENCH_ERRORS_HPP
#define MONKBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monkbench {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term mentions a generator label outside the ambient label set.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The caller broke an operation's contract (mixed presentations,
/// overlapping label sets, invalid condition where a valid one is required).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A construction produced output that failed its own verification.
/// Always indicates a bug, never bad input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (JSON, term s-expressions, order descriptions).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A seeded generator ran out of retries.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// A named precondition clause of an amalgamation failed.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string clause, const std::string& what)
      : Error("clause (" + clause + "): " + what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace monkbench

#endif  // MONKBENCH_ERRORS_HPP
