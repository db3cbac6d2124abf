#pragma once

#include <vector>

#include "zetaseq/hp.hpp"

namespace zetaseq {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix(int n, hp::Bits prec);

  int size() const { return n_; }
  hp::Bits prec() const { return prec_; }
  hp::Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const hp::Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  hp::Bits prec_;
  std::vector<hp::Complex> a_;
};

struct EigenPair {
  hp::Complex value;
  std::vector<hp::Complex> vector;
  hp::Real residual;  // ||(A - value I) v|| / ||v||
};

/// All eigenvalues of A with right eigenvectors and residuals.
///
/// Balancing, Householder reduction to Hessenberg form and shifted QR run
/// with guard bits above A.prec(); each eigenvalue is then polished by
/// inverse iteration on the balanced-back original matrix. Results are
/// sorted by decreasing modulus, ties by real then imaginary part.
/// Throws ConvergenceError when QR stalls.
std::vector<EigenPair> eigen_solve(const ComplexMatrix& A);

/// ||(A - lambda I) v||_2 / ||v||_2.
hp::Real eigen_residual(const ComplexMatrix& A, const hp::Complex& lambda, const std::vector<hp::Complex>& v);

}  // namespace zetaseq
