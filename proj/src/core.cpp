#include "idc/core.hpp"

#include <cmath>
#include <string>

#include "idc/error.hpp"

namespace idc {

AffinityMatrix validate_affinity(const Matrix& raw) {
    if (raw.rows != raw.cols)
        fail(ErrorCode::NonSquare,
             std::to_string(raw.rows) + "x" + std::to_string(raw.cols) + " matrix");
    const std::size_t m = raw.rows;

    double max_asym = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double v = raw.at(i, j);
            if (!std::isfinite(v))
                fail(ErrorCode::NonFinite, "entry (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") is not finite");
            if (i != j && v < 0.0)
                fail(ErrorCode::NegativeWeight, "entry (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") = " + std::to_string(v));
            if (j > i) {
                double asym = std::fabs(v - raw.at(j, i));
                if (asym > max_asym) max_asym = asym;
            }
        }
    }
    if (max_asym > 1e-9)
        fail(ErrorCode::Asymmetric, "max |W_ij - W_ji| = " + std::to_string(max_asym));

    AffinityMatrix w;
    w.weights = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        w.weights.at(i, i) = 0.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            double v = 0.5 * (raw.at(i, j) + raw.at(j, i));
            w.weights.at(i, j) = v;
            w.weights.at(j, i) = v;
        }
    }
    return w;
}

void validate_partition(const Partition& p, bool require_nonempty) {
    if (p.k < 1) fail(ErrorCode::KTooSmall, "partition needs k >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(p.k), false);
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        int l = p.labels[i];
        if (l < 0 || l >= p.k)
            fail(ErrorCode::IndexOutOfRange, "label " + std::to_string(l) + " at position " +
                                                 std::to_string(i) + " outside [0, " +
                                                 std::to_string(p.k) + ")");
        seen[static_cast<std::size_t>(l)] = true;
    }
    if (require_nonempty) {
        for (int l = 0; l < p.k; ++l) {
            if (!seen[static_cast<std::size_t>(l)])
                fail(ErrorCode::EmptyCluster, "cluster " + std::to_string(l) + " is empty");
        }
    }
}

std::vector<std::size_t> cluster_sizes(const Partition& p) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(p.k), 0);
    for (int l : p.labels) sizes[static_cast<std::size_t>(l)] += 1;
    return sizes;
}

} // namespace idc
