#include "idc/numerics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "idc/error.hpp"
#include "idc/kernels.hpp"
#include "idc/rng.hpp"

namespace idc {

namespace {

double frobenius_norm(const Matrix& a) {
    return std::sqrt(kern::dot(a.data.data(), a.data.data(), a.data.size()));
}

double off_diagonal_norm(const Matrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = i + 1; j < a.cols; ++j) {
            double v = a.at(i, j);
            acc += 2.0 * v * v;
        }
    }
    return std::sqrt(acc);
}

} // namespace

EigenDecomposition sym_eigen(const Matrix& matrix) {
    if (matrix.rows == 0) fail(ErrorCode::EmptyInput, "empty matrix");
    if (matrix.rows != matrix.cols)
        fail(ErrorCode::NonSquare,
             std::to_string(matrix.rows) + "x" + std::to_string(matrix.cols) + " matrix");
    const std::size_t m = matrix.rows;

    double max_asym = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            max_asym = std::max(max_asym, std::fabs(matrix.at(i, j) - matrix.at(j, i)));
    if (max_asym > 1e-9)
        fail(ErrorCode::NotSymmetric, "max |A_ij - A_ji| = " + std::to_string(max_asym));

    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        a.at(i, i) = matrix.at(i, i);
        for (std::size_t j = i + 1; j < m; ++j) {
            double v = 0.5 * (matrix.at(i, j) + matrix.at(j, i));
            a.at(i, j) = v;
            a.at(j, i) = v;
        }
    }

    // Eigenvectors are accumulated transposed (row j = vector j) so plane
    // rotations touch two contiguous rows.
    Matrix vt(m, m);
    for (std::size_t i = 0; i < m; ++i) vt.at(i, i) = 1.0;

    const double threshold = 1e-12 * frobenius_norm(a);
    const int max_sweeps = 100;

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                double apq = a.at(p, q);
                if (apq == 0.0) continue;
                double app = a.at(p, p);
                double aqq = a.at(q, q);
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                // Rows p and q of J^T A, then the symmetric 2x2 block
                // analytically, then mirror the rows into the columns so A
                // stays exactly symmetric.
                kern::apply_rotation(a.row(p), a.row(q), m, c, s);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    if (i == p || i == q) continue;
                    a.at(i, p) = a.at(p, i);
                    a.at(i, q) = a.at(q, i);
                }

                kern::apply_rotation(vt.row(p), vt.row(q), m, c, s);
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > threshold)
        fail(ErrorCode::NoConvergence,
             "off-diagonal norm above threshold after " + std::to_string(max_sweeps) + " sweeps");

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a.at(x, x) < a.at(y, y); });

    EigenDecomposition out;
    out.values.resize(m);
    out.vectors = Matrix(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t src = order[j];
        out.values[j] = a.at(src, src);

        std::size_t argmax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < m; ++i) {
            double mag = std::fabs(vt.at(src, i));
            if (mag > best) {
                best = mag;
                argmax = i;
            }
        }
        double flip = vt.at(src, argmax) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < m; ++i) out.vectors.at(i, j) = flip * vt.at(src, i);
    }
    return out;
}

namespace detail {

namespace {

void assign_labels(const Matrix& points, const Matrix& centers, std::vector<int>& labels,
                   std::vector<double>& closest_sq, double& inertia) {
    const std::size_t m = points.rows;
    const std::size_t d = points.cols;
    const int k = static_cast<int>(centers.rows);
    inertia = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        int best_c = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            double dist = kern::squared_distance(points.row(i), centers.row(static_cast<std::size_t>(c)), d);
            if (dist < best_d) {
                best_d = dist;
                best_c = c;
            }
        }
        labels[i] = best_c;
        closest_sq[i] = best_d;
        inertia += best_d;
    }
}

Matrix plus_plus_init(const Matrix& points, int k, std::mt19937_64& gen) {
    const std::size_t m = points.rows;
    const std::size_t d = points.cols;
    const int n_candidates = 2 + static_cast<int>(std::log(static_cast<double>(k)));

    Matrix centers(static_cast<std::size_t>(k), d);
    std::size_t first = rng::uniform_index(gen, m);
    std::copy_n(points.row(first), d, centers.row(0));

    std::vector<double> closest_sq(m);
    double pot = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        closest_sq[i] = kern::squared_distance(points.row(i), centers.row(0), d);
        pot += closest_sq[i];
    }

    std::vector<double> cumulative(m);
    std::vector<double> cand_dist(m);
    std::vector<double> best_dist(m);
    for (int c = 1; c < k; ++c) {
        std::partial_sum(closest_sq.begin(), closest_sq.end(), cumulative.begin());
        double total = cumulative[m - 1];

        double best_pot = std::numeric_limits<double>::infinity();
        std::size_t best_id = 0;
        for (int trial = 0; trial < n_candidates; ++trial) {
            double r = rng::uniform_open01(gen) * total;
            std::size_t id = static_cast<std::size_t>(
                std::lower_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
            if (id >= m) id = m - 1;

            double cand_pot = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                cand_dist[i] = std::min(
                    closest_sq[i], kern::squared_distance(points.row(i), points.row(id), d));
                cand_pot += cand_dist[i];
            }
            if (cand_pot < best_pot) {
                best_pot = cand_pot;
                best_id = id;
                std::swap(best_dist, cand_dist);
            }
        }
        std::copy_n(points.row(best_id), d, centers.row(static_cast<std::size_t>(c)));
        closest_sq = best_dist;
        pot = best_pot;
    }
    return centers;
}

/// Move one point from a cluster of size >= 2 into each empty cluster;
/// the point farthest from its assigned center is taken (lowest index on
/// ties), so repair is deterministic and never empties another cluster.
void repair_empty_clusters(const Matrix& points, std::vector<int>& labels,
                           std::vector<double>& closest_sq, int k) {
    const std::size_t m = points.rows;
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (int l : labels) sizes[static_cast<std::size_t>(l)] += 1;

    for (int c = 0; c < k; ++c) {
        if (sizes[static_cast<std::size_t>(c)] > 0) continue;
        std::size_t farthest = m;
        double best = -1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (sizes[static_cast<std::size_t>(labels[i])] < 2) continue;
            if (closest_sq[i] > best) {
                best = closest_sq[i];
                farthest = i;
            }
        }
        assert(farthest < m);
        sizes[static_cast<std::size_t>(labels[farthest])] -= 1;
        labels[farthest] = c;
        sizes[static_cast<std::size_t>(c)] = 1;
        closest_sq[farthest] = 0.0;
    }
}

} // namespace

KMeansResult kmeans_single(const Matrix& points, int k, std::mt19937_64& gen,
                           std::vector<double>* inertia_history) {
    const std::size_t m = points.rows;
    const std::size_t d = points.cols;
    const int max_iter = 300;

    Matrix centers = plus_plus_init(points, k, gen);
    std::vector<int> labels(m, -1);
    std::vector<int> prev_labels;
    std::vector<double> closest_sq(m);
    double inertia = 0.0;
    double prev_inertia = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < max_iter; ++iter) {
        prev_labels = labels;
        assign_labels(points, centers, labels, closest_sq, inertia);
        repair_empty_clusters(points, labels, closest_sq, k);
        inertia = kern::sum(closest_sq.data(), m);
        if (inertia_history != nullptr) inertia_history->push_back(inertia);
        if (inertia > prev_inertia * (1.0 + 1e-12) + 1e-12)
            fail(ErrorCode::NoConvergence, "k-means objective increased between iterations");
        prev_inertia = inertia;

        if (labels == prev_labels) break;

        centers = Matrix(static_cast<std::size_t>(k), d);
        std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < m; ++i) {
            double* cr = centers.row(static_cast<std::size_t>(labels[i]));
            const double* pr = points.row(i);
            for (std::size_t j = 0; j < d; ++j) cr[j] += pr[j];
            sizes[static_cast<std::size_t>(labels[i])] += 1;
        }
        for (int c = 0; c < k; ++c) {
            double* cr = centers.row(static_cast<std::size_t>(c));
            double inv = 1.0 / static_cast<double>(sizes[static_cast<std::size_t>(c)]);
            for (std::size_t j = 0; j < d; ++j) cr[j] *= inv;
        }
    }

    KMeansResult result;
    result.labels = std::move(labels);
    result.centers = std::move(centers);
    result.inertia = inertia;
    return result;
}

} // namespace detail

KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int n_restarts) {
    if (points.rows == 0) fail(ErrorCode::EmptyInput, "no points");
    if (k < 1) fail(ErrorCode::KTooSmall, "k = " + std::to_string(k));
    if (static_cast<std::size_t>(k) > points.rows)
        fail(ErrorCode::KTooLarge,
             "k = " + std::to_string(k) + " with " + std::to_string(points.rows) + " points");
    if (n_restarts < 1) fail(ErrorCode::InvalidArgument, "n_restarts must be positive");

    KMeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < n_restarts; ++restart) {
        std::mt19937_64 gen(rng::derive_seed(seed, static_cast<std::uint64_t>(restart)));
        KMeansResult candidate = detail::kmeans_single(points, k, gen);
        if (candidate.inertia < best.inertia) best = std::move(candidate);
    }
    return best;
}

} // namespace idc
