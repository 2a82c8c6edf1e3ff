#include "idc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>

#include "idc/error.hpp"

namespace idc {

namespace {

struct Contingency {
    std::vector<std::vector<std::size_t>> counts; // rows: truth classes, cols: predicted
    std::vector<std::size_t> row_sums;
    std::vector<std::size_t> col_sums;
    std::size_t n = 0;
};

Contingency contingency_table(const std::vector<int>& truth, const std::vector<int>& predicted) {
    if (truth.size() != predicted.size())
        fail(ErrorCode::LengthMismatch, std::to_string(truth.size()) + " vs " +
                                            std::to_string(predicted.size()) + " labels");
    if (truth.size() < 2) fail(ErrorCode::InvalidArgument, "need at least 2 samples");

    std::map<int, std::size_t> row_of;
    std::map<int, std::size_t> col_of;
    for (int t : truth) row_of.emplace(t, 0);
    for (int p : predicted) col_of.emplace(p, 0);
    std::size_t r = 0;
    for (auto& [label, idx] : row_of) idx = r++;
    std::size_t c = 0;
    for (auto& [label, idx] : col_of) idx = c++;

    Contingency table;
    table.n = truth.size();
    table.counts.assign(row_of.size(), std::vector<std::size_t>(col_of.size(), 0));
    table.row_sums.assign(row_of.size(), 0);
    table.col_sums.assign(col_of.size(), 0);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        std::size_t ri = row_of[truth[i]];
        std::size_t ci = col_of[predicted[i]];
        table.counts[ri][ci] += 1;
        table.row_sums[ri] += 1;
        table.col_sums[ci] += 1;
    }
    return table;
}

double choose2(double x) { return 0.5 * x * (x - 1.0); }

bool identical_up_to_renaming(const Contingency& t) {
    for (const std::vector<std::size_t>& row : t.counts) {
        std::size_t nonzero = 0;
        for (std::size_t v : row) nonzero += v > 0 ? 1 : 0;
        if (nonzero != 1) return false;
    }
    std::vector<std::size_t> col_nonzero(t.col_sums.size(), 0);
    for (const std::vector<std::size_t>& row : t.counts)
        for (std::size_t j = 0; j < row.size(); ++j) col_nonzero[j] += row[j] > 0 ? 1 : 0;
    return std::all_of(col_nonzero.begin(), col_nonzero.end(),
                       [](std::size_t v) { return v == 1; });
}

double entropy(const std::vector<std::size_t>& sums, std::size_t n) {
    double h = 0.0;
    for (std::size_t s : sums) {
        if (s == 0) continue;
        double p = static_cast<double>(s) / static_cast<double>(n);
        h -= p * std::log(p);
    }
    return h;
}

double mutual_information(const Contingency& t) {
    double mi = 0.0;
    double n = static_cast<double>(t.n);
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
            std::size_t nij = t.counts[i][j];
            if (nij == 0) continue;
            double pij = static_cast<double>(nij) / n;
            mi += pij * std::log(n * static_cast<double>(nij) /
                                 (static_cast<double>(t.row_sums[i]) *
                                  static_cast<double>(t.col_sums[j])));
        }
    }
    return mi;
}

/// Exact expectation of MI over the hypergeometric model: for each cell,
/// sum the MI contribution of every feasible count weighted by
/// C(a, nij) * C(n-a, b-nij) / C(n, b).
double expected_mutual_information(const Contingency& t) {
    double n = static_cast<double>(t.n);
    double emi = 0.0;
    for (std::size_t a_i : t.row_sums) {
        for (std::size_t b_j : t.col_sums) {
            double a = static_cast<double>(a_i);
            double b = static_cast<double>(b_j);
            std::size_t lo = a_i + b_j > t.n ? a_i + b_j - t.n : 1;
            if (lo < 1) lo = 1;
            std::size_t hi = std::min(a_i, b_j);
            for (std::size_t nij = lo; nij <= hi; ++nij) {
                double v = static_cast<double>(nij);
                double log_prob = std::lgamma(a + 1.0) - std::lgamma(v + 1.0) -
                                  std::lgamma(a - v + 1.0) + std::lgamma(n - a + 1.0) -
                                  std::lgamma(b - v + 1.0) - std::lgamma(n - a - b + v + 1.0) -
                                  (std::lgamma(n + 1.0) - std::lgamma(b + 1.0) -
                                   std::lgamma(n - b + 1.0));
                emi += (v / n) * std::log(n * v / (a * b)) * std::exp(log_prob);
            }
        }
    }
    return emi;
}

} // namespace

double adjusted_rand_index(const std::vector<int>& truth, const std::vector<int>& predicted) {
    Contingency t = contingency_table(truth, predicted);

    double index = 0.0;
    for (const std::vector<std::size_t>& row : t.counts)
        for (std::size_t nij : row) index += choose2(static_cast<double>(nij));
    double a = 0.0;
    for (std::size_t s : t.row_sums) a += choose2(static_cast<double>(s));
    double b = 0.0;
    for (std::size_t s : t.col_sums) b += choose2(static_cast<double>(s));

    double total_pairs = choose2(static_cast<double>(t.n));
    double expected = a * b / total_pairs;
    double max_index = 0.5 * (a + b);
    if (max_index == expected) return 1.0;
    return (index - expected) / (max_index - expected);
}

double adjusted_mutual_info(const std::vector<int>& truth, const std::vector<int>& predicted) {
    Contingency t = contingency_table(truth, predicted);

    double mi = mutual_information(t);
    double emi = expected_mutual_information(t);
    double h_mean = 0.5 * (entropy(t.row_sums, t.n) + entropy(t.col_sums, t.n));
    double normalizer = h_mean - emi;
    if (std::fabs(normalizer) < 1e-12) return identical_up_to_renaming(t) ? 1.0 : 0.0;
    return (mi - emi) / normalizer;
}

double outlier_f1(const std::vector<bool>& truth_is_outlier,
                  const std::vector<bool>& predicted_is_outlier) {
    if (truth_is_outlier.size() != predicted_is_outlier.size())
        fail(ErrorCode::LengthMismatch, std::to_string(truth_is_outlier.size()) + " vs " +
                                            std::to_string(predicted_is_outlier.size()) +
                                            " flags");
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    for (std::size_t i = 0; i < truth_is_outlier.size(); ++i) {
        if (predicted_is_outlier[i] && truth_is_outlier[i]) tp += 1;
        if (predicted_is_outlier[i] && !truth_is_outlier[i]) fp += 1;
        if (!predicted_is_outlier[i] && truth_is_outlier[i]) fn += 1;
    }
    double precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    double recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

double cluster_count_error(int true_k, int estimated_k, CountErrorMode mode) {
    if (true_k < 1 || estimated_k < 1)
        fail(ErrorCode::InvalidArgument, "cluster counts must be >= 1");
    int target = mode == CountErrorMode::IdcTarget ? true_k + 1 : true_k;
    return std::fabs(static_cast<double>(estimated_k - target));
}

} // namespace idc
