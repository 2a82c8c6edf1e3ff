#include "idc/graphcut.hpp"

#include <string>

#include "idc/error.hpp"
#include "idc/kernels.hpp"

namespace idc {

namespace {

void check_vertices(const std::vector<std::size_t>& set, std::size_t m) {
    for (std::size_t v : set) {
        if (v >= m)
            fail(ErrorCode::IndexOutOfRange,
                 "vertex " + std::to_string(v) + " with M = " + std::to_string(m));
    }
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& a, std::size_t m) {
    std::vector<bool> in_a(m, false);
    for (std::size_t v : a) in_a[v] = true;
    std::vector<std::size_t> comp;
    comp.reserve(m - a.size());
    for (std::size_t v = 0; v < m; ++v) {
        if (!in_a[v]) comp.push_back(v);
    }
    return comp;
}

double set_degree(const AffinityMatrix& w, const std::vector<std::size_t>& a) {
    double total = 0.0;
    for (std::size_t v : a) total += kern::sum(w.weights.row(v), w.size());
    return total;
}

/// Per-cluster within, cross, and degree sums in one pass.  Degrees are
/// accumulated independently from full row sums so the kNcut + kAssoc
/// identity is a genuine floating-point relation, not bookkeeping.
struct ClusterSums {
    std::vector<double> within;
    std::vector<double> cross;
    std::vector<double> degree;
};

ClusterSums cluster_sums(const AffinityMatrix& w, const Partition& p) {
    validate_partition(p, false);
    const std::size_t m = w.size();
    if (p.labels.size() != m)
        fail(ErrorCode::LengthMismatch, "partition covers " + std::to_string(p.labels.size()) +
                                            " vertices, matrix has " + std::to_string(m));
    const std::size_t k = static_cast<std::size_t>(p.k);

    ClusterSums sums;
    sums.within.assign(k, 0.0);
    sums.cross.assign(k, 0.0);
    sums.degree.assign(k, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t li = static_cast<std::size_t>(p.labels[i]);
        sums.degree[li] += kern::sum(w.weights.row(i), m);
        for (std::size_t j = 0; j < m; ++j) {
            if (p.labels[j] == p.labels[i])
                sums.within[li] += w.at(i, j);
            else
                sums.cross[li] += w.at(i, j);
        }
    }
    return sums;
}

} // namespace

double link_weight(const AffinityMatrix& w, const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b) {
    check_vertices(a, w.size());
    check_vertices(b, w.size());
    double total = 0.0;
    for (std::size_t i : a) {
        for (std::size_t j : b) total += w.at(i, j);
    }
    return total;
}

double ncut2(const AffinityMatrix& w, const std::vector<std::size_t>& a) {
    check_vertices(a, w.size());
    std::vector<std::size_t> comp = complement_of(a, w.size());
    if (a.empty() || comp.empty())
        fail(ErrorCode::InvalidArgument, "set must be a nonempty proper subset");
    double deg_a = set_degree(w, a);
    double deg_b = set_degree(w, comp);
    if (deg_a <= 0.0 || deg_b <= 0.0)
        fail(ErrorCode::DegenerateCluster, "zero total degree on one side");
    double cross = link_weight(w, a, comp);
    return cross / deg_a + cross / deg_b;
}

double nassoc2(const AffinityMatrix& w, const std::vector<std::size_t>& a) {
    check_vertices(a, w.size());
    std::vector<std::size_t> comp = complement_of(a, w.size());
    if (a.empty() || comp.empty())
        fail(ErrorCode::InvalidArgument, "set must be a nonempty proper subset");
    double deg_a = set_degree(w, a);
    double deg_b = set_degree(w, comp);
    if (deg_a <= 0.0 || deg_b <= 0.0)
        fail(ErrorCode::DegenerateCluster, "zero total degree on one side");
    return link_weight(w, a, a) / deg_a + link_weight(w, comp, comp) / deg_b;
}

double k_ncut(const AffinityMatrix& w, const Partition& p) {
    ClusterSums sums = cluster_sums(w, p);
    double acc = 0.0;
    for (std::size_t l = 0; l < sums.degree.size(); ++l) {
        if (sums.degree[l] <= 0.0)
            fail(ErrorCode::DegenerateCluster, "cluster " + std::to_string(l));
        acc += sums.cross[l] / sums.degree[l];
    }
    return acc / static_cast<double>(p.k);
}

double k_assoc(const AffinityMatrix& w, const Partition& p) {
    ClusterSums sums = cluster_sums(w, p);
    double acc = 0.0;
    for (std::size_t l = 0; l < sums.degree.size(); ++l) {
        if (sums.degree[l] <= 0.0)
            fail(ErrorCode::DegenerateCluster, "cluster " + std::to_string(l));
        acc += sums.within[l] / sums.degree[l];
    }
    return acc / static_cast<double>(p.k);
}

double outlier_gap_closed_form(const OutlierGapParams& p) {
    if (!(p.mu_in > 0.0) || !(p.mu_out > 0.0))
        fail(ErrorCode::NonPositiveInput, "expected weights must be positive");
    if (p.n_in == 0 || p.n_in >= p.n_total)
        fail(ErrorCode::InvalidArgument, "need 0 < n_in < n_total");

    double mu_in = p.mu_in;
    double mu_out = p.mu_out;
    double n_in = static_cast<double>(p.n_in);
    double n_total = static_cast<double>(p.n_total);

    double inlier_degree = mu_in * n_in * n_in + mu_out * n_in * (n_total - n_in);
    double z = inlier_degree * (inlier_degree + mu_out * n_total);
    double numerator = mu_out * n_in * n_in * n_total * (mu_in - 2.0 * mu_out) +
                       2.0 * mu_out * mu_out * n_in * n_in * n_in;
    return numerator / z + 1.0 / n_total;
}

bool separation_condition(double mu_in, double mu_out) {
    if (!(mu_in > 0.0) || !(mu_out > 0.0))
        fail(ErrorCode::NonPositiveInput, "expected weights must be positive");
    return mu_in > 2.0 * mu_out;
}

std::pair<double, double> empirical_mu(const AffinityMatrix& w, const std::vector<int>& labels) {
    const std::size_t m = w.size();
    if (labels.size() != m)
        fail(ErrorCode::LengthMismatch, "labels cover " + std::to_string(labels.size()) +
                                            " vertices, matrix has " + std::to_string(m));
    for (int l : labels) {
        if (l < 0) fail(ErrorCode::InvalidArgument, "labels must be nonnegative, 0 = outlier");
    }

    double strong_sum = 0.0;
    double weak_sum = 0.0;
    std::size_t strong_count = 0;
    std::size_t weak_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (labels[i] == labels[j] && labels[i] > 0) {
                strong_sum += w.at(i, j);
                strong_count += 1;
            } else {
                weak_sum += w.at(i, j);
                weak_count += 1;
            }
        }
    }
    if (strong_count == 0) fail(ErrorCode::NoStrongLinks, "no within-inlier-cluster pairs");
    if (weak_count == 0) fail(ErrorCode::NoWeakLinks, "no between-cluster or outlier pairs");
    return {strong_sum / static_cast<double>(strong_count),
            weak_sum / static_cast<double>(weak_count)};
}

namespace {

// Unaveraged association: sum over clusters of W(V_l,V_l)/W(V_l,V).
// Equals arity * k_assoc; the arity multipliers in the optimality
// inequalities cancel the 1/K averaging exactly.
double assoc_sum(const AffinityMatrix& w, const Partition& p) {
    ClusterSums sums = cluster_sums(w, p);
    double acc = 0.0;
    for (std::size_t l = 0; l < sums.degree.size(); ++l) {
        if (sums.degree[l] <= 0.0)
            fail(ErrorCode::DegenerateCluster, "cluster " + std::to_string(l));
        acc += sums.within[l] / sums.degree[l];
    }
    return acc;
}

} // namespace

bool local_optimality(const AffinityMatrix& w, const Partition& p_km1, const Partition& p_k,
                      const Partition& p_kp1) {
    const int k = p_k.k;
    if (k < 2) fail(ErrorCode::KTooSmall, "local optimality needs K >= 2");
    if (p_km1.k != k - 1 || p_kp1.k != k + 1)
        fail(ErrorCode::InvalidArgument, "neighbor partitions must have K-1 and K+1 clusters");

    double below = assoc_sum(w, p_km1);
    double mid = assoc_sum(w, p_k);
    double above = assoc_sum(w, p_kp1);
    return below < mid && mid > above;
}

} // namespace idc
