#pragma once

namespace hardylab {

/// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
/// Relative accuracy better than 1e-14 on the argument range used here (< 50).
double log_gamma(double x);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

}  // namespace hardylab
