#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Base of every error raised by the library. Messages always carry the
/// module and operation that failed, formatted as "module.operation: what".
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string operation, const std::string& what)
      : std::runtime_error(module + "." + operation + ": " + what),
        module_(std::move(module)),
        operation_(std::move(operation)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string module_;
  std::string operation_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  using Error::Error;
};

/// Caller violated a documented precondition (decay, parity, grid shape).
class PreconditionError : public Error {
  using Error::Error;
};

/// Invalid configuration or input document.
class ValidationError : public Error {
  using Error::Error;
};

/// Operation not available for the given group preset.
class CapabilityError : public Error {
  using Error::Error;
};

/// Evaluation at a pole of a meromorphic function.
class PoleError : public Error {
 public:
  PoleError(std::string module, std::string operation, long long where,
            const std::string& what)
      : Error(std::move(module), std::move(operation), what), where_(where) {}
  long long where() const noexcept { return where_; }

 private:
  long long where_;
};

/// A numerical procedure could not reach its accuracy target. Carries the
/// best value obtained and the achieved error bound.
class AccuracyError : public Error {
 public:
  AccuracyError(std::string module, std::string operation,
                const std::string& what, double partial = 0.0,
                double achieved = 0.0)
      : Error(std::move(module), std::move(operation), what),
        partial_(partial),
        achieved_(achieved) {}
  double partial_value() const noexcept { return partial_; }
  double achieved_bound() const noexcept { return achieved_; }

 private:
  double partial_;
  double achieved_;
};

/// Ill-conditioned least-squares fit.
class ConditioningError : public AccuracyError {
  using AccuracyError::AccuracyError;
};

}  // namespace rankone
