#pragma once

#include <stdexcept>
#include <string>

namespace curvemult {

// Base class for every failure raised by the toolkit. Each subclass carries a
// short machine-greppable identifier (e.g. "reducible-detected").
class CurveError : public std::runtime_error {
 public:
  CurveError(std::string id, const std::string& message)
      : std::runtime_error(message), id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// Malformed literal (polynomial, series, rational, characteristic sequence).
class ParseError : public CurveError {
 public:
  explicit ParseError(const std::string& message) : CurveError("parse-error", message) {}
};

// Violated precondition on a combinatorial or algebraic input.
class InvalidInput : public CurveError {
 public:
  InvalidInput(std::string id, const std::string& message)
      : CurveError(std::move(id), message) {}
};

// The curve is outside what the toolkit handles (irrational roots, tangency
// to the y-axis, reducible germs, ...).
class UnsupportedCurve : public CurveError {
 public:
  UnsupportedCurve(std::string id, const std::string& message)
      : CurveError(std::move(id), message) {}
};

// A truncated computation could not certify its answer; retry with a larger
// cap.
class PrecisionExhausted : public CurveError {
 public:
  explicit PrecisionExhausted(const std::string& message)
      : CurveError("precision-exhausted", message) {}
};

class BudgetExhausted : public CurveError {
 public:
  explicit BudgetExhausted(const std::string& message)
      : CurveError("budget-exhausted", message) {}
};

}  // namespace curvemult
