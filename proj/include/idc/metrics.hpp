#pragma once

#include <vector>

namespace idc {

/// Adjusted Rand index from the pair-counting contingency table.  The
/// degenerate denominator (both partitions trivial: each a single cluster
/// or each all singletons) returns 1.0 by convention.
double adjusted_rand_index(const std::vector<int>& truth, const std::vector<int>& predicted);

/// Adjusted mutual information with the exact hypergeometric expected MI
/// and the arithmetic mean of entropies as normalizer (natural logs).
/// A degenerate normalizer returns 1.0 when the partitions are identical
/// up to renaming, else 0.0.
double adjusted_mutual_info(const std::vector<int>& truth, const std::vector<int>& predicted);

/// F1 of inlier/outlier classification with OUTLIER as the positive
/// class; 0.0 when precision + recall is zero.
double outlier_f1(const std::vector<bool>& truth_is_outlier,
                  const std::vector<bool>& predicted_is_outlier);

/// Plain compares the counts directly; IdcTarget compares against the
/// sweep's natural target of true_k + 1 clusters (inliers plus one
/// outlier cluster).
enum class CountErrorMode { Plain, IdcTarget };

double cluster_count_error(int true_k, int estimated_k, CountErrorMode mode);

} // namespace idc
