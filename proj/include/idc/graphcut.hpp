#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "idc/core.hpp"

namespace idc {

/// Sum of edge weights between two vertex sets, counting ordered pairs:
/// sum over i in a, j in b of W_ij.  Overlap is allowed (the diagonal is
/// zero, so i == j contributes nothing).
double link_weight(const AffinityMatrix& w, const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b);

/// Two-way normalized cut of the bipartition (a, complement of a):
/// W(a, comp)/W(a, V) + W(a, comp)/W(comp, V).
double ncut2(const AffinityMatrix& w, const std::vector<std::size_t>& a);

/// Two-way normalized association, the density complement of ncut2:
/// W(a, a)/W(a, V) + W(comp, comp)/W(comp, V).
double nassoc2(const AffinityMatrix& w, const std::vector<std::size_t>& a);

/// K-way normalized cut: (1/K) * sum_l W(V_l, comp V_l) / W(V_l, V).
double k_ncut(const AffinityMatrix& w, const Partition& p);

/// K-way association: (1/K) * sum_l W(V_l, V_l) / W(V_l, V).
/// Satisfies k_assoc + k_ncut == 1.
double k_assoc(const AffinityMatrix& w, const Partition& p);

/// Expected-weight model of the outlier/inlier boundary: a graph of
/// n_total vertices, an inlier cluster of n_in with strong links of mean
/// weight mu_in, everything else weak with mean mu_out, and one probe
/// vertex with only weak links.
struct OutlierGapParams {
    double mu_in = 0.0;
    double mu_out = 0.0;
    std::size_t n_in = 0;
    std::size_t n_total = 0;
    std::size_t n_out = 0;
};

/// Closed-form approximate gain in 2-way association from assigning the
/// probe vertex to the outlier cluster instead of the inlier cluster.
/// Positive whenever mu_in > 2 mu_out: weakly linked vertices prefer to
/// congregate, which is what makes one outlier cluster form.
double outlier_gap_closed_form(const OutlierGapParams& p);

/// The separation condition itself: strictly mu_in > 2 mu_out.
bool separation_condition(double mu_in, double mu_out);

/// Mean weights of strong links (within an inlier cluster) and weak links
/// (everything else, including pairs inside the outlier set) under
/// ground-truth labels where 0 marks outliers.  Pairs are unordered.
std::pair<double, double> empirical_mu(const AffinityMatrix& w, const std::vector<int>& labels);

/// Local optimality of the K-way partition against its K-1 and K+1
/// neighbors.  Each side is the partition's arity times its k_assoc —
/// i.e. the unaveraged association sum S(p) = sum W(V_l,V_l)/W(V_l,V) —
/// and the predicate is S(K-1) < S(K) > S(K+1): association peaks at K.
bool local_optimality(const AffinityMatrix& w, const Partition& p_km1, const Partition& p_k,
                      const Partition& p_kp1);

} // namespace idc
