#pragma once

#include <cstddef>
#include <vector>

#include "idc/matrix.hpp"

namespace idc {

enum class DistanceMetric { Euclidean, CosineDistance };

struct DbscanParams {
    double eps = 0.5;
    int min_samples = 5;                                // includes the point itself
    DistanceMetric metric = DistanceMetric::Euclidean;
};

/// Density clustering result: labels in [0, n_clusters) with -1 for
/// noise, plus the matching noise mask.
struct DbscanResult {
    std::vector<int> labels;
    std::vector<bool> noise;
    int n_clusters = 0;
};

/// Classic DBSCAN over a brute-force distance matrix.  Neighborhoods are
/// inclusive (distance <= eps) and contain the point itself.  Points are
/// scanned in ascending index order with FIFO expansion, so borders
/// reachable from several clusters go to the first-scanned cluster and
/// the labeling is deterministic.
DbscanResult dbscan(const Matrix& features, const DbscanParams& params);

/// How noise points enter AMI in the grid search: each one as a singleton
/// cluster (punishes mass noise assignment) or all as one ordinary class
/// (the common scoring of the noise label).
enum class NoiseHandling { Singletons, OneCluster };

struct GridSearchResult {
    DbscanParams best_params;
    double best_ami = 0.0;
    DbscanResult best_result;
};

/// Evaluate every (eps, min_samples) cell against ground truth and keep
/// the AMI-maximizing cell; ties go to the lexicographically first cell
/// in grid order.
GridSearchResult grid_search(const Matrix& features, const std::vector<int>& truth,
                             const std::vector<double>& eps_grid,
                             const std::vector<int>& min_samples_grid, DistanceMetric metric,
                             NoiseHandling noise_handling = NoiseHandling::Singletons);

/// Predicted labels under a noise convention, ready for AMI/ARI.
std::vector<int> labels_for_metrics(const DbscanResult& result, NoiseHandling noise_handling);

} // namespace idc
