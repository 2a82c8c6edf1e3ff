#include "idc/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "idc/error.hpp"
#include "idc/kernels.hpp"

namespace idc {

AffinityMatrix cosine_affinity(const Matrix& features) {
    const std::size_t m = features.rows;
    const std::size_t d = features.cols;

    std::vector<double> norms(m);
    for (std::size_t i = 0; i < m; ++i) {
        double sq = kern::dot(features.row(i), features.row(i), d);
        if (!(sq > 0.0))
            fail(ErrorCode::ZeroNormRow, "row " + std::to_string(i) + " has zero norm");
        norms[i] = std::sqrt(sq);
    }

    Matrix w(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            double c = kern::dot(features.row(i), features.row(j), d) / (norms[i] * norms[j]);
            c = std::clamp(c, -1.0, 1.0);
            w.at(i, j) = c + 1.0;
            w.at(j, i) = c + 1.0;
        }
    }
    return validate_affinity(w);
}

AffinityMatrix gaussian_affinity(const Matrix& features, double gamma, bool squared_exponent) {
    if (!(gamma > 0.0))
        fail(ErrorCode::NonPositiveGamma, "gamma = " + std::to_string(gamma));
    const std::size_t m = features.rows;
    const std::size_t d = features.cols;
    const double denom = 2.0 * gamma * gamma;

    Matrix w(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            double sq = kern::squared_distance(features.row(i), features.row(j), d);
            double expnt = squared_exponent ? sq : std::sqrt(sq);
            double v = std::exp(-expnt / denom);
            w.at(i, j) = v;
            w.at(j, i) = v;
        }
    }
    return validate_affinity(w);
}

AffinityMatrix tracklet_median_affinity(const std::vector<FrameAffinity>& frame_affinities,
                                        std::size_t n_tracklets) {
    std::vector<std::vector<std::vector<double>>> buckets(
        n_tracklets, std::vector<std::vector<double>>(n_tracklets));
    for (const FrameAffinity& f : frame_affinities) {
        if (f.a >= n_tracklets || f.b >= n_tracklets)
            fail(ErrorCode::IdOutOfRange, "tracklet pair (" + std::to_string(f.a) + "," +
                                              std::to_string(f.b) + ") with n_tracklets = " +
                                              std::to_string(n_tracklets));
        std::size_t lo = std::min(f.a, f.b);
        std::size_t hi = std::max(f.a, f.b);
        if (lo == hi) continue; // self-affinity is ignored, the diagonal stays zero
        buckets[lo][hi].push_back(f.value);
    }

    Matrix w(n_tracklets, n_tracklets);
    for (std::size_t a = 0; a < n_tracklets; ++a) {
        for (std::size_t b = a + 1; b < n_tracklets; ++b) {
            std::vector<double>& vals = buckets[a][b];
            if (vals.empty())
                fail(ErrorCode::MissingPair,
                     "no affinity for pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
            std::sort(vals.begin(), vals.end());
            std::size_t n = vals.size();
            double med = (n % 2 == 1) ? vals[n / 2] : 0.5 * (vals[n / 2 - 1] + vals[n / 2]);
            w.at(a, b) = med;
            w.at(b, a) = med;
        }
    }
    return validate_affinity(w);
}

} // namespace idc
