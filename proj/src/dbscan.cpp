#include "idc/dbscan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "idc/error.hpp"
#include "idc/kernels.hpp"
#include "idc/metrics.hpp"

namespace idc {

namespace {

Matrix distance_matrix(const Matrix& features, DistanceMetric metric) {
    const std::size_t m = features.rows;
    const std::size_t d = features.cols;
    Matrix dist(m, m);
    if (metric == DistanceMetric::Euclidean) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                double v = std::sqrt(kern::squared_distance(features.row(i), features.row(j), d));
                dist.at(i, j) = v;
                dist.at(j, i) = v;
            }
        }
    } else {
        std::vector<double> norms(m);
        for (std::size_t i = 0; i < m; ++i) {
            double sq = kern::dot(features.row(i), features.row(i), d);
            if (!(sq > 0.0))
                fail(ErrorCode::ZeroNormRow, "row " + std::to_string(i) + " has zero norm");
            norms[i] = std::sqrt(sq);
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                double c = kern::dot(features.row(i), features.row(j), d) / (norms[i] * norms[j]);
                double v = std::max(0.0, 1.0 - c);
                dist.at(i, j) = v;
                dist.at(j, i) = v;
            }
        }
    }
    return dist;
}

} // namespace

DbscanResult dbscan(const Matrix& features, const DbscanParams& params) {
    if (!(params.eps > 0.0)) fail(ErrorCode::InvalidArgument, "eps must be positive");
    if (params.min_samples < 1) fail(ErrorCode::InvalidArgument, "min_samples must be >= 1");
    const std::size_t m = features.rows;

    Matrix dist = distance_matrix(features, params.metric);
    std::vector<std::vector<std::size_t>> neighbors(m);
    std::vector<bool> core(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (dist.at(i, j) <= params.eps) neighbors[i].push_back(j);
        }
        core[i] = neighbors[i].size() >= static_cast<std::size_t>(params.min_samples);
    }

    DbscanResult result;
    result.labels.assign(m, -1);
    int next_cluster = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!core[i] || result.labels[i] != -1) continue;
        int cluster = next_cluster++;
        result.labels[i] = cluster;
        std::deque<std::size_t> queue(neighbors[i].begin(), neighbors[i].end());
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            if (result.labels[v] != -1) continue;
            result.labels[v] = cluster;
            if (core[v]) queue.insert(queue.end(), neighbors[v].begin(), neighbors[v].end());
        }
    }

    result.n_clusters = next_cluster;
    result.noise.assign(m, false);
    for (std::size_t i = 0; i < m; ++i) result.noise[i] = result.labels[i] == -1;
    return result;
}

std::vector<int> labels_for_metrics(const DbscanResult& result, NoiseHandling noise_handling) {
    std::vector<int> labels = result.labels;
    if (noise_handling == NoiseHandling::Singletons) {
        int next = result.n_clusters;
        for (int& l : labels) {
            if (l == -1) l = next++;
        }
    } else {
        for (int& l : labels) {
            if (l == -1) l = result.n_clusters;
        }
    }
    return labels;
}

GridSearchResult grid_search(const Matrix& features, const std::vector<int>& truth,
                             const std::vector<double>& eps_grid,
                             const std::vector<int>& min_samples_grid, DistanceMetric metric,
                             NoiseHandling noise_handling) {
    if (eps_grid.empty() || min_samples_grid.empty())
        fail(ErrorCode::EmptyInput, "grids must be nonempty");

    GridSearchResult best;
    bool first = true;
    for (double eps : eps_grid) {
        for (int min_samples : min_samples_grid) {
            DbscanParams params{eps, min_samples, metric};
            DbscanResult result = dbscan(features, params);
            double ami = adjusted_mutual_info(truth, labels_for_metrics(result, noise_handling));
            if (first || ami > best.best_ami) {
                best.best_params = params;
                best.best_ami = ami;
                best.best_result = std::move(result);
                first = false;
            }
        }
    }
    return best;
}

} // namespace idc
