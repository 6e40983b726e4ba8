#pragma once

#include <stdexcept>
#include <string>

namespace morsesusy {

/// Argument outside the domain of a function (e.g. log-gamma of a non-positive real).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A gamma-function pole or a vanishing denominator Pochhammer factor.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Model parameters violate their invariants (V0 > 0, alpha > 0, 2 gamma > -1, D > 0).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A three-term recursion hit an off-diagonal b_n == 0 before the requested order.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}

  /// Index n of the vanishing off-diagonal element b_n.
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// SUSY factorization failed: negative square, zero P_n(0), or a = c^2 + d^2 / b = c d violated.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P+_n is not proportional to K_n(., 0) on the test grid.
class ProportionalityError : public std::runtime_error {
 public:
  ProportionalityError(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace morsesusy
