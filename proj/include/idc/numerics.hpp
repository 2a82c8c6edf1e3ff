#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "idc/matrix.hpp"

namespace idc {

/// Full symmetric eigendecomposition; values ascending, vectors[.,j] is
/// the unit eigenvector for values[j].
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

/// Cyclic Jacobi eigensolver for symmetric matrices (symmetric to 1e-9,
/// repaired by averaging internally).  Runs sweeps of plane rotations
/// until the off-diagonal Frobenius norm drops below 1e-12 * ||A||_F,
/// capped at 100 sweeps.  Each eigenvector's sign is fixed by making its
/// largest-magnitude entry positive (lowest index on magnitude ties), so
/// the output is fully deterministic.
EigenDecomposition sym_eigen(const Matrix& matrix);

/// k-means clustering outcome; inertia is the total squared distance of
/// points to their assigned centers.
struct KMeansResult {
    std::vector<int> labels;
    Matrix centers;
    double inertia = 0.0;
};

/// Best-of-n_restarts k-means: greedy k-means++ seeding followed by Lloyd
/// iterations until the assignment reaches a fixpoint or 300 iterations.
/// Empty clusters are repaired by reseeding at the point farthest from its
/// assigned center (only points from clusters of size >= 2 are taken, so
/// repair cannot empty another cluster).  Each restart derives its own
/// generator from (seed, restart index); results are deterministic and
/// independent of scheduling.
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int n_restarts = 10);

namespace detail {
/// Single k-means run on an explicit generator; optionally records the
/// inertia after every Lloyd assignment (used to test monotonicity).
KMeansResult kmeans_single(const Matrix& points, int k, std::mt19937_64& gen,
                           std::vector<double>* inertia_history = nullptr);
} // namespace detail

} // namespace idc
