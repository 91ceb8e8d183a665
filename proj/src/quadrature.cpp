#include "hardylab/quadrature.hpp"

#include <cmath>
#include <vector>

namespace hardylab::quad {

namespace {

// Gauss-Legendre 16 on [-1,1]; mapped to [0,1] below.
constexpr double kX[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542,
};
constexpr double kW[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

std::array<double, 16> make_x01() {
  std::array<double, 16> r{};
  for (int i = 0; i < 8; ++i) {
    r[i] = 0.5 * (1.0 - kX[7 - i]);
    r[15 - i] = 0.5 * (1.0 + kX[7 - i]);
  }
  return r;
}

std::array<double, 16> make_w01() {
  std::array<double, 16> r{};
  for (int i = 0; i < 8; ++i) {
    r[i] = 0.5 * kW[7 - i];
    r[15 - i] = 0.5 * kW[7 - i];
  }
  return r;
}

double gauss16(const std::function<double(double)>& f, double a, double b) {
  const double m = 0.5 * (a + b), r = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += kW[i] * (f(m - r * kX[i]) + f(m + r * kX[i]));
  return r * s;
}

}  // namespace

const std::array<double, 16> Gauss16::x = make_x01();
const std::array<double, 16> Gauss16::w = make_w01();

WeightBlock weight_block(double dl, double hp, double kappa) {
  if (dl <= 16.0 * hp) {
    // by-parts recursions; all terms share a common scale so the differences
    // are benign here
    const double dh = dl + hp;
    auto b0 = [&](double p) { return (std::pow(dh, 1.0 - p) - std::pow(dl, 1.0 - p)) / (1.0 - p); };
    auto b1 = [&](double p) { return (-hp * std::pow(dl, 1.0 - p) + b0(p - 1.0)) / (1.0 - p); };
    auto c1 = [&](double p) { return (hp * std::pow(dh, 1.0 - p) - b0(p - 1.0)) / (1.0 - p); };
    const double B2 = (-hp * hp * std::pow(dl, 1.0 - kappa) + 2.0 * b1(kappa - 1.0)) / (1.0 - kappa);
    const double C2 = (hp * hp * std::pow(dh, 1.0 - kappa) - 2.0 * c1(kappa - 1.0)) / (1.0 - kappa);
    const double X2 = hp * c1(kappa) - C2;
    const double inv = 1.0 / (hp * hp);
    return {B2 * inv, X2 * inv, C2 * inv};
  }
  // far from the singular point: plain Gauss in local coordinates
  double nn = 0.0, nf = 0.0, ff = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double xi = Gauss16::x[i];
    const double k = Gauss16::w[i] * std::pow(dl + hp * xi, -kappa);
    nn += (1.0 - xi) * (1.0 - xi) * k;
    nf += (1.0 - xi) * xi * k;
    ff += xi * xi * k;
  }
  return {hp * nn, hp * nf, hp * ff};
}

KernelMoments kernel_moments(double dl, double hp, double kappa) {
  const double p = 1.0 + kappa;
  if (dl <= 16.0 * hp) {
    const double dh = dl + hp;
    auto b0 = [&](double q) { return (std::pow(dh, 1.0 - q) - std::pow(dl, 1.0 - q)) / (1.0 - q); };
    auto b1 = [&](double q) { return (-hp * std::pow(dl, 1.0 - q) + b0(q - 1.0)) / (1.0 - q); };
    auto c1 = [&](double q) { return (hp * std::pow(dh, 1.0 - q) - b0(q - 1.0)) / (1.0 - q); };
    const double J0 = b0(p);
    const double B1 = b1(p);
    const double C1 = c1(p);
    const double B2 = (-hp * hp * std::pow(dl, 1.0 - p) + 2.0 * b1(p - 1.0)) / (1.0 - p);
    const double C2 = (hp * hp * std::pow(dh, 1.0 - p) - 2.0 * c1(p - 1.0)) / (1.0 - p);
    const double X2 = hp * C1 - C2;
    const double inv = 1.0 / hp;
    const double inv2 = inv * inv;
    return {J0, B1 * inv, C1 * inv, B2 * inv2, X2 * inv2, C2 * inv2};
  }
  double j0 = 0, glo = 0, ghi = 0, gll = 0, glh = 0, ghh = 0;
  for (int i = 0; i < 16; ++i) {
    const double xi = Gauss16::x[i];
    const double k = Gauss16::w[i] * std::pow(dl + hp * xi, -p);
    const double flo = 1.0 - xi, fhi = xi;
    j0 += k;
    glo += flo * k;
    ghi += fhi * k;
    gll += flo * flo * k;
    glh += flo * fhi * k;
    ghh += fhi * fhi * k;
  }
  return {hp * j0, hp * glo, hp * ghi, hp * gll, hp * glh, hp * ghh};
}

double integrate_refined(const std::function<double(double)>& f, double a, double b, int levels) {
  if (!(b > a)) return 0.0;
  // geometric panels toward both endpoints, uniform middle
  const double h = b - a;
  std::vector<double> bps;
  bps.push_back(a);
  for (int k = levels; k >= 2; --k) {
    const double p = a + h * 0.5 * std::pow(0.5, k - 1);
    if (p > bps.back()) bps.push_back(p);
  }
  for (int k = 2; k <= levels; ++k) {
    const double p = b - h * 0.5 * std::pow(0.5, k - 1);
    if (p > bps.back() && p < b) bps.push_back(p);
  }
  bps.push_back(b);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) s += gauss16(f, bps[i], bps[i + 1]);
  return s;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
  double prev = gauss16(f, a, b);
  int panels = 2;
  for (int d = 0; d < max_depth; ++d, panels *= 2) {
    double cur = 0.0;
    const double h = (b - a) / panels;
    for (int k = 0; k < panels; ++k) cur += gauss16(f, a + k * h, a + (k + 1) * h);
    if (std::abs(cur - prev) <= rel_tol * (std::abs(cur) + 1e-300)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace hardylab::quad
