#pragma once

#include <cstddef>
#include <vector>

namespace hardylab {

/// Dense square matrix, row-major full storage. The nonlocal operator couples
/// every pair of nodes, so dense is the natural layout here.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double* row(std::size_t i) { return a_.data() + i * n_; }
  const double* row(std::size_t i) const { return a_.data() + i * n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const double* data() const { return a_.data(); }
  double* data() { return a_.data(); }

  double max_abs() const;
  double max_asymmetry() const;   // max |A - A^T|
  void add_scaled(const Matrix& b, double alpha);  // *this += alpha*b
  std::vector<double> apply(const std::vector<double>& x) const;
  double form(const std::vector<double>& x, const std::vector<double>& y) const;  // x^T A y
  double form(const std::vector<double>& x) const { return form(x, x); }
  /// submatrix rows/cols [lo, hi)
  Matrix slice(std::size_t lo, std::size_t hi) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Cholesky factorization with symmetric Jacobi pre-scaling, which keeps the
/// factorization healthy on strongly graded meshes where diagonal entries
/// span many orders of magnitude.
class Cholesky {
 public:
  Cholesky() = default;
  /// Factors A (SPD expected). ok() reports whether all pivots were positive.
  explicit Cholesky(const Matrix& a);

  bool ok() const { return ok_; }
  void solve(const double* b, double* x) const;
  std::vector<double> solve(const std::vector<double>& b) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> l_;      // row-major lower triangle (full rows)
  std::vector<double> scale_;  // Jacobi scale d_i = 1/sqrt(A_ii)
  bool ok_ = false;
};

struct PencilResult {
  double value = 0.0;
  std::vector<double> vector;
  int iterations = 0;
  bool converged = false;
};

/// Smallest eigenvalue of the pencil A x = lambda B x with A, B SPD.
/// Shifted inverse iteration with Rayleigh-quotient updates; backs off the
/// shift whenever A - sigma B loses positive definiteness.
PencilResult pencil_smallest(const Matrix& a, const Matrix& b, double tol = 1e-12,
                             int max_iter = 200);

}  // namespace hardylab
