#include "idc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace idc::kern {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double squared_distance(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

double sum(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

void apply_rotation(double* a, double* b, std::size_t n, double c, double s) {
    for (std::size_t i = 0; i < n; ++i) {
        double x = a[i];
        double y = b[i];
        a[i] = c * x - s * y;
        b[i] = s * x + c * y;
    }
}

} // namespace scalar

namespace {

bool avx2_available() {
#if defined(IDC_WITH_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    const char* env = std::getenv("IDC_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!avx2_available())
                throw std::runtime_error("IDC_SIMD=avx2 requested but AVX2+FMA is unavailable");
            return Backend::Avx2;
        }
        throw std::runtime_error(std::string("unrecognized IDC_SIMD value: ") + env);
    }
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<int> g_backend{-1};

Backend current() {
    int b = g_backend.load(std::memory_order_acquire);
    if (b < 0) {
        Backend detected = detect_backend();
        int expected = -1;
        g_backend.compare_exchange_strong(expected, static_cast<int>(detected),
                                          std::memory_order_acq_rel);
        b = g_backend.load(std::memory_order_acquire);
    }
    return static_cast<Backend>(b);
}

} // namespace

Backend active_backend() { return current(); }

void force_backend(Backend backend) {
    if (backend == Backend::Avx2 && !avx2_available())
        throw std::runtime_error("AVX2+FMA backend unavailable on this machine");
    g_backend.store(static_cast<int>(backend), std::memory_order_release);
}

const char* backend_name(Backend backend) {
    return backend == Backend::Avx2 ? "avx2" : "scalar";
}

#if defined(IDC_WITH_AVX2)

double dot(const double* a, const double* b, std::size_t n) {
    return current() == Backend::Avx2 ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

double squared_distance(const double* a, const double* b, std::size_t n) {
    return current() == Backend::Avx2 ? avx2::squared_distance(a, b, n)
                                      : scalar::squared_distance(a, b, n);
}

double sum(const double* a, std::size_t n) {
    return current() == Backend::Avx2 ? avx2::sum(a, n) : scalar::sum(a, n);
}

void apply_rotation(double* a, double* b, std::size_t n, double c, double s) {
    if (current() == Backend::Avx2)
        avx2::apply_rotation(a, b, n, c, s);
    else
        scalar::apply_rotation(a, b, n, c, s);
}

#else

double dot(const double* a, const double* b, std::size_t n) { return scalar::dot(a, b, n); }

double squared_distance(const double* a, const double* b, std::size_t n) {
    return scalar::squared_distance(a, b, n);
}

double sum(const double* a, std::size_t n) { return scalar::sum(a, n); }

void apply_rotation(double* a, double* b, std::size_t n, double c, double s) {
    scalar::apply_rotation(a, b, n, c, s);
}

#endif

} // namespace idc::kern
