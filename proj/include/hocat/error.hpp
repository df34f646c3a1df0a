#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hocat {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AssociativityViolation : public Error {
 public:
  using Error::Error;
};

class UnitViolation : public Error {
 public:
  using Error::Error;
};

class SrcTgtMismatch : public Error {
 public:
  using Error::Error;
};

/// Simplicial identities or structural invariants failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class MalformedPresentation : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured ceiling.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t budget)
      : Error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

/// Raised by operations that need a finite category when the word engine
/// could not certify finiteness.
class PossiblyInfinite : public Error {
 public:
  using Error::Error;
};

/// A simplicial set lacks the spine extension property.
class NotIEP : public Error {
 public:
  using Error::Error;
};

class NotNatural : public Error {
 public:
  using Error::Error;
};

class NotAFunctor : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultBudget = 1'000'000;

}  // namespace hocat
