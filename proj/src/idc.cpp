#include "idc/idc.hpp"

#include <limits>
#include <string>

#include "idc/error.hpp"
#include "idc/numerics.hpp"

namespace idc {

namespace {

std::vector<std::vector<std::size_t>> cluster_members(const Partition& p) {
    validate_partition(p, false);
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(p.k));
    for (std::size_t v = 0; v < p.labels.size(); ++v)
        members[static_cast<std::size_t>(p.labels[v])].push_back(v);
    return members;
}

void check_cluster_index(const Partition& p, int i) {
    if (i < 0 || i >= p.k)
        fail(ErrorCode::IndexOutOfRange,
             "cluster " + std::to_string(i) + " with K = " + std::to_string(p.k));
}

} // namespace

double within_mu(const AffinityMatrix& w, const Partition& p, int i) {
    check_cluster_index(p, i);
    std::vector<std::vector<std::size_t>> members = cluster_members(p);
    const std::vector<std::size_t>& v = members[static_cast<std::size_t>(i)];
    if (v.empty()) fail(ErrorCode::EmptyCluster, "cluster " + std::to_string(i));
    const std::size_t n = v.size();
    if (n == 1) return 0.0;

    double acc = 0.0;
    for (std::size_t a : v) {
        for (std::size_t b : v) {
            if (a != b) acc += w.at(a, b);
        }
    }
    return acc / static_cast<double>(n * (n - 1));
}

double between_mu(const AffinityMatrix& w, const Partition& p, int i, int j) {
    check_cluster_index(p, i);
    check_cluster_index(p, j);
    if (i == j) fail(ErrorCode::SameCluster, "i = j = " + std::to_string(i));
    std::vector<std::vector<std::size_t>> members = cluster_members(p);
    const std::vector<std::size_t>& vi = members[static_cast<std::size_t>(i)];
    const std::vector<std::size_t>& vj = members[static_cast<std::size_t>(j)];
    if (vi.empty()) fail(ErrorCode::EmptyCluster, "cluster " + std::to_string(i));
    if (vj.empty()) fail(ErrorCode::EmptyCluster, "cluster " + std::to_string(j));

    double acc = 0.0;
    for (std::size_t a : vi) {
        for (std::size_t b : vj) acc += w.at(a, b);
    }
    return acc / static_cast<double>(vi.size() * vj.size());
}

ClusterStats cluster_stats(const AffinityMatrix& w, const Partition& p) {
    if (p.k < 2) fail(ErrorCode::KTooSmall, "stats need K >= 2");
    validate_partition(p, true);
    if (p.labels.size() != w.size())
        fail(ErrorCode::LengthMismatch, "partition covers " + std::to_string(p.labels.size()) +
                                            " vertices, matrix has " + std::to_string(w.size()));
    const std::size_t k = static_cast<std::size_t>(p.k);

    ClusterStats stats;
    stats.within.resize(k);
    stats.between = Matrix(k, k);
    stats.delta_raw.resize(k);
    stats.delta_norm.assign(k, 0.0);

    for (std::size_t i = 0; i < k; ++i)
        stats.within[i] = within_mu(w, p, static_cast<int>(i));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            double mu = between_mu(w, p, static_cast<int>(i), static_cast<int>(j));
            stats.between.at(i, j) = mu;
            stats.between.at(j, i) = mu;
        }
    }

    double max_delta = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        double between_mean = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (j != i) between_mean += stats.between.at(i, j);
        }
        between_mean /= static_cast<double>(k - 1);
        stats.delta_raw[i] = stats.within[i] - between_mean;
        if (stats.delta_raw[i] > max_delta) max_delta = stats.delta_raw[i];
    }

    if (max_delta > 0.0) {
        for (std::size_t i = 0; i < k; ++i) stats.delta_norm[i] = stats.delta_raw[i] / max_delta;
    } else {
        stats.degenerate = true;
    }

    int argmin = 0;
    for (std::size_t i = 1; i < k; ++i) {
        if (stats.within[i] < stats.within[static_cast<std::size_t>(argmin)])
            argmin = static_cast<int>(i);
    }
    stats.outlier_index = argmin;
    return stats;
}

double f_score(const ClusterStats& stats) {
    if (stats.degenerate)
        fail(ErrorCode::DegenerateStats, "no cluster has a positive isolation offset");
    const std::size_t k = stats.delta_norm.size();
    double min_inlier = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        if (static_cast<int>(i) == stats.outlier_index) continue;
        if (stats.delta_norm[i] < min_inlier) min_inlier = stats.delta_norm[i];
    }
    return min_inlier - stats.delta_norm[static_cast<std::size_t>(stats.outlier_index)];
}

IdcResult estimate(const AffinityMatrix& w, int k_min, int k_max, LaplacianKind kind,
                   std::uint64_t seed) {
    if (k_min < 2) fail(ErrorCode::KTooSmall, "k_min = " + std::to_string(k_min));
    if (k_max < k_min)
        fail(ErrorCode::InvalidArgument,
             "k_max = " + std::to_string(k_max) + " below k_min = " + std::to_string(k_min));
    if (static_cast<std::size_t>(k_max) > w.size())
        fail(ErrorCode::KTooLarge,
             "k_max = " + std::to_string(k_max) + " with M = " + std::to_string(w.size()));

    // One decomposition serves the whole sweep; slicing its leading
    // columns per K reproduces spectral_cluster for that K exactly.
    EigenDecomposition eig = sym_eigen(laplacian(w, kind));
    const double neg_inf = -std::numeric_limits<double>::infinity();

    IdcResult result;
    double best_f = neg_inf;
    for (int k = k_min; k <= k_max; ++k) {
        Matrix embedding = detail::embed_from_eigen(eig, k, kind);
        KMeansResult km = kmeans(embedding, k, seed);
        Partition p;
        p.labels = std::move(km.labels);
        p.k = k;

        ClusterStats stats = cluster_stats(w, p);
        double f = neg_inf;
        if (!stats.degenerate) f = f_score(stats);
        result.trace.emplace_back(k, f);

        if (f > best_f) {
            best_f = f;
            result.chosen_k = k;
            result.partition = std::move(p);
            result.stats = std::move(stats);
        }
    }
    if (best_f == neg_inf)
        fail(ErrorCode::AllDegenerate, "every K in [" + std::to_string(k_min) + ", " +
                                           std::to_string(k_max) + "] is degenerate");
    return result;
}

std::vector<bool> outlier_labels(const IdcResult& result) {
    std::vector<bool> flags(result.partition.labels.size(), false);
    for (std::size_t v = 0; v < flags.size(); ++v)
        flags[v] = result.partition.labels[v] == result.stats.outlier_index;
    return flags;
}

} // namespace idc
