#include "morsesusy/tridiagonal.hpp"

#include <Eigen/Eigenvalues>

namespace morsesusy {

TridiagonalTruncation truncate(const TridiagonalOperator& op, Index size) {
  if (size < 1) {
    throw DomainError("truncate: size must be positive");
  }
  TridiagonalTruncation t;
  t.diag.resize(size);
  t.offdiag.resize(size - 1);
  for (Index n = 0; n < size; ++n) {
    t.diag(n) = op.a(n);
    if (n + 1 < size) t.offdiag(n) = op.b(n);
  }
  return t;
}

Eigen::MatrixXd dense(const TridiagonalTruncation& t) {
  const Index n = t.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.diagonal() = t.diag;
  if (n > 1) {
    m.diagonal(1) = t.offdiag;
    m.diagonal(-1) = t.offdiag;
  }
  return m;
}

Eigen::VectorXd eigenvalues(const TridiagonalTruncation& t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(t.diag, t.offdiag, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigensystem eigensystem(const TridiagonalTruncation& t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(t.diag, t.offdiag, Eigen::ComputeEigenvectors);
  Eigensystem out{solver.eigenvalues(), solver.eigenvectors()};
  for (Index k = 0; k < out.vectors.cols(); ++k) {
    if (out.vectors(0, k) < 0.0) out.vectors.col(k) *= -1.0;
  }
  return out;
}

std::optional<Index> natural_truncation(const TridiagonalOperator& op, Index limit) {
  for (Index n = 0; n + 1 <= limit; ++n) {
    if (op.b(n) == 0.0) return n + 1;
  }
  return std::nullopt;
}

}  // namespace morsesusy
