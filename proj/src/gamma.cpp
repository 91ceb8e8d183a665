#include "hardylab/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace hardylab {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

const double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < 0.5) {
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)); x in (0, 1/2) so sin > 0
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (int k = 1; k < 9; ++k) series += kLanczos[k] / (z + k);
  const double t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(series);
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

}  // namespace hardylab
