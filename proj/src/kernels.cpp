#include "hardylab/kernels.hpp"

#include <cstdlib>

namespace hardylab::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void matvec(const double* a, std::size_t n, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = dot(a + i * n, x, n);
}

double quadform(const double* a, std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * dot(a + i * n, y, n);
  return s;
}

}  // namespace scalar

namespace {

Isa detect() {
  if (const char* env = std::getenv("HARDYLAB_FORCE_SCALAR"); env && env[0] == '1')
    return Isa::scalar;
#if defined(HARDYLAB_HAVE_AVX2_KERNELS) && defined(__GNUC__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
#if defined(HARDYLAB_HAVE_NEON_KERNELS)
  return Isa::neon;
#endif
  return Isa::scalar;
}

Isa g_isa = detect();

}  // namespace

Isa active_isa() { return g_isa; }

void force_isa(Isa isa) { g_isa = isa; }

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    default: return "scalar";
  }
}

double dot(const double* a, const double* b, std::size_t n) {
#ifdef HARDYLAB_HAVE_AVX2_KERNELS
  if (g_isa == Isa::avx2) return avx2::dot(a, b, n);
#endif
#ifdef HARDYLAB_HAVE_NEON_KERNELS
  if (g_isa == Isa::neon) return neon::dot(a, b, n);
#endif
  return scalar::dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#ifdef HARDYLAB_HAVE_AVX2_KERNELS
  if (g_isa == Isa::avx2) return avx2::axpy(alpha, x, y, n);
#endif
#ifdef HARDYLAB_HAVE_NEON_KERNELS
  if (g_isa == Isa::neon) return neon::axpy(alpha, x, y, n);
#endif
  return scalar::axpy(alpha, x, y, n);
}

void scale(double alpha, double* x, std::size_t n) {
#ifdef HARDYLAB_HAVE_AVX2_KERNELS
  if (g_isa == Isa::avx2) return avx2::scale(alpha, x, n);
#endif
#ifdef HARDYLAB_HAVE_NEON_KERNELS
  if (g_isa == Isa::neon) return neon::scale(alpha, x, n);
#endif
  return scalar::scale(alpha, x, n);
}

void matvec(const double* a, std::size_t n, const double* x, double* y) {
#ifdef HARDYLAB_HAVE_AVX2_KERNELS
  if (g_isa == Isa::avx2) return avx2::matvec(a, n, x, y);
#endif
#ifdef HARDYLAB_HAVE_NEON_KERNELS
  if (g_isa == Isa::neon) return neon::matvec(a, n, x, y);
#endif
  return scalar::matvec(a, n, x, y);
}

double quadform(const double* a, std::size_t n, const double* x, const double* y) {
#ifdef HARDYLAB_HAVE_AVX2_KERNELS
  if (g_isa == Isa::avx2) return avx2::quadform(a, n, x, y);
#endif
#ifdef HARDYLAB_HAVE_NEON_KERNELS
  if (g_isa == Isa::neon) return neon::quadform(a, n, x, y);
#endif
  return scalar::quadform(a, n, x, y);
}

}  // namespace hardylab::kernels
