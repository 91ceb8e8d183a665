#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace hardylab::quad {

/// 16-point Gauss-Legendre rule on [0,1].
struct Gauss16 {
  static const std::array<double, 16> x;  // nodes in (0,1)
  static const std::array<double, 16> w;  // weights summing to 1
};

/// Element integrals of hat-function products against t^-kappa over
/// [dl, dl+hp], where f_near is the hat equal to 1 at t = dl (the end closest
/// to the singular point t = 0) and f_far = 1 at t = dl + hp.
struct WeightBlock {
  double nn;  // int f_near^2  t^-kappa
  double nf;  // int f_near f_far t^-kappa
  double ff;  // int f_far^2  t^-kappa
};

/// Stable for any dl >= 0, hp > 0: by-parts recursions when dl <= 16 hp,
/// Gauss quadrature in local coordinates otherwise.
WeightBlock weight_block(double dl, double hp, double kappa);

/// Moments of the kernel t^{-1-kappa} against hat functions on the y-element
/// [x+dl, x+dl+hp] (distances measured from the singular point t = 0):
///   j0  = int t^{-1-kappa}
///   glo = int f_lo(t) t^{-1-kappa},  f_lo = (dl+hp-t)/hp   (near hat)
///   ghi = int f_hi(t) t^{-1-kappa},  f_hi = (t-dl)/hp      (far hat)
///   gll, glh, ghh = second-order products
struct KernelMoments {
  double j0, glo, ghi, gll, glh, ghh;
};

KernelMoments kernel_moments(double dl, double hp, double kappa);

/// Integrate f over [a,b] with Gauss-16 panels refined geometrically toward
/// both endpoints (handles endpoint algebraic singularities of the
/// derivative). `levels` halvings per side.
double integrate_refined(const std::function<double(double)>& f, double a, double b,
                         int levels = 40);

/// Adaptive Gauss-16 with interval doubling until the result changes by less
/// than rel_tol (used where integrands are smooth).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int max_depth = 12);

}  // namespace hardylab::quad
