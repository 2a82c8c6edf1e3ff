#pragma once

#include <cstdint>
#include <vector>

#include "idc/core.hpp"
#include "idc/spectral.hpp"

namespace idc {

/// Mean within-cluster affinity mu_i of cluster i: the ordered-pair sum
/// over distinct members divided by 2|E(V_i)| with |E(V_i)| = n(n-1)/2.
/// A singleton cluster has no pairs and scores 0, the most pessimistic
/// density, so singletons are candidate outlier clusters.
double within_mu(const AffinityMatrix& w, const Partition& p, int i);

/// Mean between-cluster affinity mu_{i,j}: the cross-pair sum divided by
/// |E(V_i, V_j)| = n_i * n_j.
double between_mu(const AffinityMatrix& w, const Partition& p, int i, int j);

/// All per-cluster statistics for one partition: mu_i, mu_{i,j}, the
/// isolation offsets Delta(V_i) = mu_i - mean_j mu_{i,j}, the normalized
/// delta(V_i) = Delta(V_i)/max Delta (normalized per partition), and the
/// outlier cluster index i_out = argmin mu_i.  When no Delta is positive
/// the stats are degenerate: no cluster is an isolated dense cluster.
ClusterStats cluster_stats(const AffinityMatrix& w, const Partition& p);

/// Singularity score f = min over non-outlier clusters of delta(V_i),
/// minus delta(V_{i_out}).  High f means every inlier cluster is dense
/// and isolated while the outlier cluster is neither — the signature of
/// exactly one cluster collecting the weakly linked samples.
double f_score(const ClusterStats& stats);

/// Sweep K over [k_min, k_max]: spectral clustering, stats, and f(K) for
/// each K; pick the maximizing K (smallest on ties).  Degenerate K score
/// -infinity in the trace.  The estimated inlier cluster count is
/// chosen_k - 1.  Each K's partition is exactly what spectral_cluster
/// returns for the same seed.
IdcResult estimate(const AffinityMatrix& w, int k_min, int k_max, LaplacianKind kind,
                   std::uint64_t seed);

/// Per-vertex outlier flags: true for members of cluster i_out.
std::vector<bool> outlier_labels(const IdcResult& result);

} // namespace idc
