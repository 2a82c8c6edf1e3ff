#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include <doctest.h>

#include "idc/core.hpp"
#include "idc/error.hpp"
#include "idc/matrix.hpp"

namespace testutil {

/// Run f, require it throws idc::Error with the expected code.
template <typename F>
void check_error(F&& f, idc::ErrorCode expected) {
    try {
        f();
        FAIL_CHECK("expected idc::Error(" << idc::error_code_name(expected)
                                          << ") but nothing was thrown");
    } catch (const idc::Error& e) {
        CHECK_MESSAGE(e.code() == expected, "expected " << idc::error_code_name(expected)
                                                        << " got " << e.what());
    } catch (const std::exception& e) {
        FAIL_CHECK("expected idc::Error but got: " << e.what());
    }
}

inline idc::Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen,
                                 double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    idc::Matrix m(rows, cols);
    for (double& v : m.data) v = dist(gen);
    return m;
}

inline idc::Matrix random_symmetric(std::size_t n, std::mt19937_64& gen, double lo = -1.0,
                                    double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    idc::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double v = dist(gen);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

/// Random affinity: symmetric, entries in [lo, hi] >= 0, zero diagonal.
inline idc::AffinityMatrix random_affinity(std::size_t n, std::mt19937_64& gen, double lo = 0.05,
                                           double hi = 1.0) {
    idc::Matrix m = random_symmetric(n, gen, lo, hi);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 0.0;
    return idc::validate_affinity(m);
}

/// Random partition of m vertices into exactly k nonempty clusters.
inline idc::Partition random_partition(std::size_t m, int k, std::mt19937_64& gen) {
    REQUIRE(m >= static_cast<std::size_t>(k));
    idc::Partition p;
    p.k = k;
    p.labels.resize(m);
    for (int c = 0; c < k; ++c) p.labels[static_cast<std::size_t>(c)] = c;
    std::uniform_int_distribution<int> dist(0, k - 1);
    for (std::size_t i = static_cast<std::size_t>(k); i < m; ++i) p.labels[i] = dist(gen);
    std::shuffle(p.labels.begin(), p.labels.end(), gen);
    return p;
}

/// Block-structured affinity: sizes[b] vertices per block, within-block
/// weight `within`, cross-block weight `cross`, optional uniform jitter.
inline idc::AffinityMatrix block_affinity(const std::vector<std::size_t>& sizes, double within,
                                          double cross, std::mt19937_64* gen = nullptr,
                                          double jitter = 0.0) {
    std::size_t m = 0;
    for (std::size_t s : sizes) m += s;
    std::vector<int> block_of(m);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i) block_of[pos++] = static_cast<int>(b);

    std::uniform_real_distribution<double> noise(-jitter, jitter);
    idc::Matrix w(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double v = block_of[i] == block_of[j] ? within : cross;
            if (gen != nullptr && jitter > 0.0) v += noise(*gen);
            w.at(i, j) = v;
            w.at(j, i) = v;
        }
    return idc::validate_affinity(w);
}

inline std::vector<int> block_labels(const std::vector<std::size_t>& sizes) {
    std::vector<int> labels;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        labels.insert(labels.end(), sizes[b], static_cast<int>(b));
    return labels;
}

} // namespace testutil
