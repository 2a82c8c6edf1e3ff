#pragma once

#include <cstddef>

/// Low-level vector kernels behind the hot loops (pairwise dots and
/// distances, degree sums, Jacobi plane rotations).  Every kernel has a
/// scalar reference implementation and, on x86-64, an AVX2+FMA variant.
/// The dispatched entry points pick the backend once at first use:
/// runtime CPU detection, overridable via the IDC_SIMD environment
/// variable ("scalar" or "avx2") or force_backend() from code.
namespace idc::kern {

enum class Backend { Scalar, Avx2 };

/// Backend the dispatched kernels currently use.
Backend active_backend();

/// Override the dispatched backend; throws if the requested backend is
/// unavailable on this machine.  Intended for tests and benchmarks.
void force_backend(Backend backend);

const char* backend_name(Backend backend);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
/// In-place plane rotation: (a_i, b_i) <- (c*a_i - s*b_i, s*a_i + c*b_i).
void apply_rotation(double* a, double* b, std::size_t n, double c, double s);
} // namespace scalar

#if defined(IDC_WITH_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void apply_rotation(double* a, double* b, std::size_t n, double c, double s);
} // namespace avx2
#endif

double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void apply_rotation(double* a, double* b, std::size_t n, double c, double s);

} // namespace idc::kern
