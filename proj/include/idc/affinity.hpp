#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "idc/core.hpp"

namespace idc {

/// Which pairwise similarity to build from feature vectors.
enum class AffinityKind { CosinePlusOne, GaussianKernel };

/// W_ij = cos(x_i, x_j) + 1.0 for i != j; entries in [0, 2], diagonal 0.
/// The cosine is clamped to [-1, 1] before the shift so rounding in the
/// norms cannot push entries outside the range.
AffinityMatrix cosine_affinity(const Matrix& features);

/// W_ij = exp(-||x_i - x_j|| / (2 gamma^2)) for i != j, diagonal 0.
/// The exponent uses the plain (unsquared) Euclidean norm by default;
/// squared_exponent switches to the conventional squared form.
AffinityMatrix gaussian_affinity(const Matrix& features, double gamma,
                                 bool squared_exponent = false);

/// One frame-pair affinity observation between two tracklets.
struct FrameAffinity {
    std::size_t a = 0;
    std::size_t b = 0;
    double value = 0.0;
};

/// W_ab = median of all observed values for the pair (a, b); an even
/// count takes the mean of the two middle values.  Every off-diagonal
/// pair must have at least one observation.
AffinityMatrix tracklet_median_affinity(const std::vector<FrameAffinity>& frame_affinities,
                                        std::size_t n_tracklets);

} // namespace idc
