#pragma once

#include <Eigen/Core>

#include <functional>
#include <optional>

#include "morsesusy/specfun.hpp"

namespace morsesusy {

/// Index -> value map, valid for every n >= 0 unless the producer says otherwise.
using Sequence = std::function<double(Index)>;

/// Symmetric Jacobi operator: diagonal a_n, off-diagonal b_n shared by rows n and n+1.
struct TridiagonalOperator {
  Sequence diag;
  Sequence offdiag;

  double a(Index n) const { return diag(n); }
  double b(Index n) const { return offdiag(n); }
};

/// Leading size x size block of an operator.
struct TridiagonalTruncation {
  Eigen::VectorXd diag;
  Eigen::VectorXd offdiag;  // size - 1 entries

  Index size() const { return diag.size(); }
};

TridiagonalTruncation truncate(const TridiagonalOperator& op, Index size);

Eigen::MatrixXd dense(const TridiagonalTruncation& t);

/// Ascending eigenvalues.
Eigen::VectorXd eigenvalues(const TridiagonalTruncation& t);

struct Eigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k belongs to values(k); first component made >= 0
};

Eigensystem eigensystem(const TridiagonalTruncation& t);

/// Smallest N <= limit with b_{N-1} == 0 exactly, if any.
std::optional<Index> natural_truncation(const TridiagonalOperator& op, Index limit);

}  // namespace morsesusy
