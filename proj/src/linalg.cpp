#include "hardylab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardylab/kernels.hpp"

namespace hardylab {

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::max_asymmetry() const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      m = std::max(m, std::abs(a_[i * n_ + j] - a_[j * n_ + i]));
  return m;
}

void Matrix::add_scaled(const Matrix& b, double alpha) {
  kernels::axpy(alpha, b.a_.data(), a_.data(), a_.size());
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
  std::vector<double> y(n_);
  kernels::matvec(a_.data(), n_, x.data(), y.data());
  return y;
}

double Matrix::form(const std::vector<double>& x, const std::vector<double>& y) const {
  return kernels::quadform(a_.data(), n_, x.data(), y.data());
}

Matrix Matrix::slice(std::size_t lo, std::size_t hi) const {
  Matrix m(hi - lo);
  for (std::size_t i = lo; i < hi; ++i)
    std::copy(row(i) + lo, row(i) + hi, m.row(i - lo));
  return m;
}

Cholesky::Cholesky(const Matrix& a) : n_(a.size()), l_(n_ * n_, 0.0), scale_(n_) {
  ok_ = true;
  for (std::size_t i = 0; i < n_; ++i) {
    const double d = a(i, i);
    scale_[i] = (d > 0.0) ? 1.0 / std::sqrt(d) : 1.0;
  }
  // left-looking, row-wise on the scaled matrix
  for (std::size_t i = 0; i < n_ && ok_; ++i) {
    double* li = l_.data() + i * n_;
    for (std::size_t j = 0; j <= i; ++j) {
      const double* lj = l_.data() + j * n_;
      double v = a(i, j) * scale_[i] * scale_[j] - kernels::dot(li, lj, j);
      if (i == j) {
        if (!(v > 0.0)) {
          ok_ = false;
          break;
        }
        li[j] = std::sqrt(v);
      } else {
        li[j] = v / lj[j];
      }
    }
  }
}

void Cholesky::solve(const double* b, double* x) const {
  // L y = D b ; L^T z = y ; x = D z  with D = diag(scale_)
  std::vector<double> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* li = l_.data() + i * n_;
    y[i] = (b[i] * scale_[i] - kernels::dot(li, y.data(), i)) / li[i];
  }
  for (std::size_t k = n_; k-- > 0;) {
    double v = y[k];
    const double lkk = l_[k * n_ + k];
    v /= lkk;
    x[k] = v * scale_[k];
    y[k] = v;
    // subtract column k of L^T from remaining rhs entries
    for (std::size_t i = 0; i < k; ++i) y[i] -= l_[k * n_ + i] * v;
  }
}

std::vector<double> Cholesky::solve(const std::vector<double>& b) const {
  std::vector<double> x(n_);
  solve(b.data(), x.data());
  return x;
}

PencilResult pencil_smallest(const Matrix& a, const Matrix& b, double tol, int max_iter) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw std::invalid_argument("pencil_smallest: size mismatch");
  PencilResult res;
  res.vector.assign(n, 1.0);

  auto b_norm = [&](std::vector<double>& v) {
    const double q = std::sqrt(b.form(v));
    kernels::scale(1.0 / q, v.data(), n);
  };
  b_norm(res.vector);

  double sigma = 0.0;
  double rho_prev = 0.0;
  Cholesky fac;
  for (int it = 0; it < max_iter; ++it) {
    // factor A - sigma B, backing off toward the last safe shift on failure
    Matrix shifted = a;
    if (sigma != 0.0) shifted.add_scaled(b, -sigma);
    fac = Cholesky(shifted);
    int backoff = 0;
    while (!fac.ok() && backoff < 60) {
      sigma *= 0.5;
      if (std::abs(sigma) < 1e-300) sigma = 0.0;
      shifted = a;
      if (sigma != 0.0) shifted.add_scaled(b, -sigma);
      fac = Cholesky(shifted);
      ++backoff;
    }
    if (!fac.ok()) break;

    std::vector<double> bx = b.apply(res.vector);
    std::vector<double> y(n);
    fac.solve(bx.data(), y.data());
    b_norm(y);
    res.vector = std::move(y);
    const double rho = a.form(res.vector);  // B-normalized => Rayleigh quotient of pencil
    res.iterations = it + 1;
    if (it > 0 && std::abs(rho - rho_prev) <= tol * std::abs(rho)) {
      res.value = rho;
      res.converged = true;
      return res;
    }
    rho_prev = rho;
    res.value = rho;
    sigma = rho * (1.0 - 1e-4);
  }
  return res;
}

}  // namespace hardylab
