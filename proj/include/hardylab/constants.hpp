#pragma once

#include <stdexcept>

namespace hardylab {

/// Problem parameters: dimension N, fractional order s, Hardy coupling lambda,
/// singularity exponent gamma.
struct HardyParams {
  int N = 1;
  double s = 0.25;
  double lambda = 0.0;
  double gamma = 1.0;

  void validate() const {
    if (N < 1) throw std::invalid_argument("HardyParams: N must be a positive integer");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("HardyParams: s must lie in (0,1)");
    if (!(N > 2.0 * s)) throw std::invalid_argument("HardyParams: N > 2s required");
    if (!(gamma > 0.0)) throw std::invalid_argument("HardyParams: gamma must be positive");
    if (lambda < 0.0) throw std::invalid_argument("HardyParams: lambda must be nonnegative");
  }
};

/// Consistent (alpha, lambda, beta) triple: beta = (N-2s)/2 - alpha and lambda
/// solves the Gamma identity at alpha.
struct SpectralTriple {
  double alpha;
  double lambda;
  double beta;
};

/// C_{N,s} = 4^s Gamma(N/2+s) / (pi^{N/2} |Gamma(-s)|). Requires s in (0,1).
double normalization_constant(int N, double s);

/// Sharp fractional Hardy constant 4^s Gamma^2((N+2s)/4) / Gamma^2((N-2s)/4).
/// Requires N > 2s.
double hardy_constant(int N, double s);

/// The coupling produced by the shift alpha in [0, (N-2s)/2):
///   lambda = 4^s G((N+2s+2a)/4) G((N+2s-2a)/4) / (G((N-2s+2a)/4) G((N-2s-2a)/4)).
/// Strictly decreasing in alpha; lambda(0) is the Hardy constant.
double lambda_of_alpha(int N, double s, double alpha);

/// Inverts lambda_of_alpha by bisection plus one Newton polish and returns the
/// full triple. Requires 0 < lambda <= hardy_constant (tiny relative slack above).
SpectralTriple triple_of_lambda(int N, double s, double lambda);

/// Largest coupling whose growth exponent satisfies beta(lambda) < 2s:
/// the whole (0, Lambda] range when (N-6s)/2 < 0, else lambda_of_alpha((N-6s)/2).
double lambda_star(int N, double s);

inline double normalization_constant(const HardyParams& p) { return normalization_constant(p.N, p.s); }
inline double hardy_constant(const HardyParams& p) { return hardy_constant(p.N, p.s); }
inline double lambda_of_alpha(const HardyParams& p, double alpha) { return lambda_of_alpha(p.N, p.s, alpha); }
inline SpectralTriple triple_of_lambda(const HardyParams& p) { return triple_of_lambda(p.N, p.s, p.lambda); }
inline double lambda_star(const HardyParams& p) { return lambda_star(p.N, p.s); }

}  // namespace hardylab
