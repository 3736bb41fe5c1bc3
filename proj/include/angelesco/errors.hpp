#pragma once

#include <stdexcept>
#include <string>

namespace angelesco {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (e.g. x not in the open interval).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters violating a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Point on a branch cut where only one-sided limits exist.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// A numerical refinement did not reach the requested accuracy.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved_digits)
      : Error(what), achieved_digits_(achieved_digits) {}
  double achieved_digits() const { return achieved_digits_; }

 private:
  double achieved_digits_;
};

/// Linear solve lost too many digits.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double digit_loss) : Error(what), digit_loss_(digit_loss) {}
  double digit_loss() const { return digit_loss_; }

 private:
  double digit_loss_;
};

/// Branch tracking could not keep the root labels apart.
class TrackingError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of a rational map.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A cubic that should have three real roots does not.
class CurveDegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant (e.g. zero count) violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace angelesco
