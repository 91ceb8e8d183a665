#include "hardylab/constants.hpp"

#include <cmath>

#include "hardylab/gamma.hpp"

namespace hardylab {

namespace {
constexpr double kLog4 = 1.3862943611198906188;
}

double normalization_constant(int N, double s) {
  if (N < 1) throw std::invalid_argument("normalization_constant: N must be positive");
  if (!(s > 0.0 && s < 1.0))
    throw std::invalid_argument("normalization_constant: s must lie in (0,1)");
  // |Gamma(-s)| = Gamma(1-s)/s for s in (0,1)
  const double log_abs_gamma_neg_s = log_gamma(1.0 - s) - std::log(s);
  return std::exp(s * kLog4 + log_gamma(0.5 * N + s) - 0.5 * N * std::log(M_PI) -
                  log_abs_gamma_neg_s);
}

double hardy_constant(int N, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("hardy_constant: s must lie in (0,1)");
  if (!(N > 2.0 * s)) throw std::invalid_argument("hardy_constant: N > 2s required");
  return std::exp(s * kLog4 + 2.0 * log_gamma(0.25 * (N + 2.0 * s)) -
                  2.0 * log_gamma(0.25 * (N - 2.0 * s)));
}

double lambda_of_alpha(int N, double s, double alpha) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("lambda_of_alpha: s must lie in (0,1)");
  if (!(N > 2.0 * s)) throw std::invalid_argument("lambda_of_alpha: N > 2s required");
  const double amax = 0.5 * (N - 2.0 * s);
  if (!(alpha >= 0.0 && alpha < amax))
    throw std::invalid_argument("lambda_of_alpha: alpha must lie in [0, (N-2s)/2)");
  return std::exp(s * kLog4 + log_gamma(0.25 * (N + 2.0 * s + 2.0 * alpha)) +
                  log_gamma(0.25 * (N + 2.0 * s - 2.0 * alpha)) -
                  log_gamma(0.25 * (N - 2.0 * s + 2.0 * alpha)) -
                  log_gamma(0.25 * (N - 2.0 * s - 2.0 * alpha)));
}

SpectralTriple triple_of_lambda(int N, double s, double lambda) {
  const double Lam = hardy_constant(N, s);
  if (!(lambda > 0.0))
    throw std::invalid_argument("triple_of_lambda: lambda must be positive");
  if (lambda > Lam * (1.0 + 1e-12))
    throw std::invalid_argument("triple_of_lambda: supercritical: no growth exponent exists");
  const double amax = 0.5 * (N - 2.0 * s);
  if (lambda >= Lam) return {0.0, Lam, amax};

  // lambda_of_alpha is strictly decreasing, so bisection is safe.
  double lo = 0.0, hi = amax * (1.0 - 1e-15);
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lambda_of_alpha(N, s, mid) > lambda)
      lo = mid;
    else
      hi = mid;
  }
  double alpha = 0.5 * (lo + hi);
  // one Newton polish with a central-difference derivative
  const double da = 1e-7 * amax;
  if (alpha - da > 0.0 && alpha + da < amax) {
    const double f = lambda_of_alpha(N, s, alpha) - lambda;
    const double fp =
        (lambda_of_alpha(N, s, alpha + da) - lambda_of_alpha(N, s, alpha - da)) / (2.0 * da);
    const double step = f / fp;
    if (std::isfinite(step)) {
      const double cand = alpha - step;
      if (cand > 0.0 && cand < amax) alpha = cand;
    }
  }
  return {alpha, lambda, amax - alpha};
}

double lambda_star(int N, double s) {
  const double astar = 0.5 * (N - 6.0 * s);
  if (astar < 0.0) return hardy_constant(N, s);
  return lambda_of_alpha(N, s, astar);
}

}  // namespace hardylab
