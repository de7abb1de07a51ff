#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lfuzzy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: grades, bit strings, set or partition files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that breaks a precondition, e.g. a grade outside
/// [0,1], mismatched universes, or a block list that is not a partition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive search would evaluate more tuples than the cap
/// allows. Carries the estimate so callers can report it.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& message, std::uint64_t estimated_cases,
                  std::uint64_t cap)
      : Error(message), estimated_cases_(estimated_cases), cap_(cap) {}

  std::uint64_t estimated_cases() const noexcept { return estimated_cases_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t estimated_cases_;
  std::uint64_t cap_;
};

}  // namespace lfuzzy
