#pragma once

#include <cstdint>

#include "idc/core.hpp"
#include "idc/numerics.hpp"

namespace idc {

/// L = D - W, or the symmetric normalized L = I - D^{-1/2} W D^{-1/2}.
enum class LaplacianKind { Unnormalized, SymmetricNormalized };

/// Graph Laplacian of the affinity matrix.  For the normalized kind an
/// isolated vertex (zero degree) uses the convention D^{-1/2}_ii = 0, so
/// its row is just the identity row.
Matrix laplacian(const AffinityMatrix& w, LaplacianKind kind);

/// M x k embedding from the eigenvectors of the k smallest Laplacian
/// eigenvalues.  For SymmetricNormalized the rows are renormalized to
/// unit length afterwards; all-zero rows are left at the origin.
Matrix spectral_embed(const AffinityMatrix& w, int k, LaplacianKind kind);

/// End-to-end spectral clustering for a fixed cluster count: embed, then
/// k-means on the embedded rows.
Partition spectral_cluster(const AffinityMatrix& w, int k, LaplacianKind kind,
                           std::uint64_t seed);

namespace detail {
/// Embedding columns taken from an existing decomposition of the
/// Laplacian; lets the cluster-count sweep decompose once and slice per K.
Matrix embed_from_eigen(const EigenDecomposition& eig, int k, LaplacianKind kind);
} // namespace detail

} // namespace idc
