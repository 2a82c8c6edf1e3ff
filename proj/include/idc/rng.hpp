#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

/// Deterministic randomness helpers.  The engine is std::mt19937_64 (its
/// output sequence is fixed by the standard); every mapping from raw
/// 64-bit draws to values is implemented here so results are identical
/// across platforms and standard libraries.
namespace idc::rng {

/// splitmix64 mixing step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for a derived stream, e.g. per trial or per restart.  Mixing the
/// index through splitmix64 keeps sibling streams decorrelated even for
/// adjacent indices.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    std::uint64_t s = splitmix64(state);
    s ^= splitmix64(state);
    return s;
}

/// Uniform double in the open interval (0, 1): 53-bit mantissa offset by
/// half an ulp so neither endpoint is reachable.
inline double uniform_open01(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform double in the open interval (-1, 1).
inline double uniform_open_sym(std::mt19937_64& gen) {
    return 2.0 * uniform_open01(gen) - 1.0;
}

/// Uniform double in [lo, hi) (endpoints approximate at double precision).
inline double uniform_range(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_open01(gen);
}

/// Standard normal via Box-Muller, cosine branch only: one draw consumes
/// two uniforms, which keeps consumption independent of call history.
inline double normal(std::mt19937_64& gen) {
    double u1 = uniform_open01(gen);
    double u2 = uniform_open01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Uniform index in [0, n) via the multiply-shift reduction.
inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(gen()) * static_cast<unsigned __int128>(n)) >> 64);
}

} // namespace idc::rng
