#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "idc/matrix.hpp"

namespace idc {

/// Symmetric nonnegative similarity matrix with a zero diagonal; the
/// edge weights of the sample graph.  Construct through validate_affinity
/// so the invariants hold.
struct AffinityMatrix {
    Matrix weights;

    std::size_t size() const { return weights.rows; }
    double at(std::size_t i, std::size_t j) const { return weights.at(i, j); }

    bool operator==(const AffinityMatrix& other) const = default;
};

/// Validate a raw square array into an AffinityMatrix.  The diagonal is
/// forced to zero (self-similarity carries no information downstream).
/// Asymmetry up to 1e-9 is repaired by averaging (W + W^T)/2; anything
/// larger is an error, as are negative or non-finite entries.
AffinityMatrix validate_affinity(const Matrix& raw);

/// Assignment of M vertices to K clusters, labels in [0, K).
struct Partition {
    std::vector<int> labels;
    int k = 0;

    std::size_t size() const { return labels.size(); }

    bool operator==(const Partition& other) const = default;
};

/// Throws unless every label lies in [0, k); when require_nonempty is set,
/// also demands every cluster index in [0, k) occurs at least once.
void validate_partition(const Partition& p, bool require_nonempty);

/// Per-cluster sizes of a validated partition.
std::vector<std::size_t> cluster_sizes(const Partition& p);

/// Feature vectors with ground-truth labels; label 0 marks outliers,
/// 1..n_inlier_clusters mark the inlier clusters.
struct LabeledDataset {
    Matrix features;
    std::vector<int> labels;
    std::size_t dim = 0;
    int n_inlier_clusters = 0;

    std::size_t size() const { return labels.size(); }
};

/// Within/between affinity statistics for one partition: the building
/// blocks of the outlier-cluster score.  `degenerate` is set when no
/// cluster has a positive isolation offset (max delta_raw <= 0), in which
/// case delta_norm is meaningless and the partition scores -inf.
struct ClusterStats {
    std::vector<double> within;     // mu_i
    Matrix between;                 // mu_{i,j}, diagonal unused
    std::vector<double> delta_raw;  // Delta(V_i)
    std::vector<double> delta_norm; // delta(V_i)
    int outlier_index = -1;         // argmin within, lowest index on ties
    bool degenerate = false;
};

/// Outcome of the cluster-count sweep: the score-maximizing K with its
/// partition and stats, plus the full (K, f(K)) trace.  The estimated
/// inlier cluster count is chosen_k - 1 (one cluster is the outlier
/// cluster by construction).
struct IdcResult {
    int chosen_k = 0;
    Partition partition;
    ClusterStats stats;
    std::vector<std::pair<int, double>> trace; // f = -inf marks a degenerate K
};

} // namespace idc
