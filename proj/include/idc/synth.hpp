#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "idc/core.hpp"

namespace idc {

/// Mean/std pair for a normally distributed size or count draw.
struct GaussianSpec {
    double mean = 0.0;
    double std = 0.0;
};

/// Cluster sizes: one fixed size for every cluster, or per-cluster draws
/// from N(mean, std) rounded and clamped to >= 1.
using SizeSpec = std::variant<std::size_t, GaussianSpec>;

/// Outlier count: fixed, or one draw from N(mean, std) rounded and
/// clamped to >= 0.
using CountSpec = std::variant<std::size_t, GaussianSpec>;

/// Generator configuration: centers and outliers are sampled
/// coordinate-wise from U(-1, 1); inliers from N(center_d, inlier_std).
struct SynthConfig {
    std::size_t dim = 2;
    int n_inlier_clusters = 1;
    SizeSpec cluster_sizes = std::size_t{30};
    CountSpec n_outliers = std::size_t{0};
    double inlier_std = 1.0;
    std::uint64_t seed = 0;
};

/// Per-cluster sizes drawn from N(mean, std), rounded to the nearest
/// integer and clamped to >= 1.
std::vector<std::size_t> sizes_from_gaussian(double mean, double std, std::size_t n,
                                             std::uint64_t seed);

/// Draw a labeled dataset.  Row order: inlier clusters 1..N in label
/// order, then outliers (label 0).  Inliers are not clipped to (-1, 1);
/// the spread regularly exits the sampling cube and is left as drawn.
/// Deterministic given the seed; each generation phase (sizes, outlier
/// count, centers, inliers, outliers) consumes its own derived stream.
LabeledDataset generate(const SynthConfig& cfg);

} // namespace idc
