#pragma once

#include <cstddef>

// Dense vector/matrix arithmetic kernels. Scalar reference implementations
// plus SIMD variants selected once at runtime from CPU capabilities.
// Set HARDYLAB_FORCE_SCALAR=1 in the environment to pin the scalar path.
namespace hardylab::kernels {

enum class Isa { scalar, avx2, neon };

Isa active_isa();
const char* isa_name(Isa isa);
void force_isa(Isa isa);   // test hook; pass Isa::scalar to disable SIMD

double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
/// y = A*x, A dense row-major n-by-n (stored full).
void matvec(const double* a, std::size_t n, const double* x, double* y);
/// x^T A y for dense row-major A.
double quadform(const double* a, std::size_t n, const double* x, const double* y);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void matvec(const double* a, std::size_t n, const double* x, double* y);
double quadform(const double* a, std::size_t n, const double* x, const double* y);
}

#if defined(__x86_64__) || defined(_M_X64)
#define HARDYLAB_HAVE_AVX2_KERNELS 1
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void matvec(const double* a, std::size_t n, const double* x, double* y);
double quadform(const double* a, std::size_t n, const double* x, const double* y);
}
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
#define HARDYLAB_HAVE_NEON_KERNELS 1
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void matvec(const double* a, std::size_t n, const double* x, double* y);
double quadform(const double* a, std::size_t n, const double* x, const double* y);
}
#endif

}  // namespace hardylab::kernels
