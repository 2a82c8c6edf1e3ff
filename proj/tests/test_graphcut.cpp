#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "idc/error.hpp"
#include "idc/graphcut.hpp"

using namespace idc;
using testutil::check_error;

namespace {

// Independent association sum: arity * k_assoc computed by raw loops.
double assoc_sum_oracle(const AffinityMatrix& w, const Partition& p) {
    double acc = 0.0;
    for (int c = 0; c < p.k; ++c) {
        double within = 0.0;
        double degree = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (p.labels[i] != c) continue;
            for (std::size_t j = 0; j < w.size(); ++j) {
                degree += w.at(i, j);
                if (p.labels[j] == c) within += w.at(i, j);
            }
        }
        acc += within / degree;
    }
    return acc;
}

double k_ncut_oracle(const AffinityMatrix& w, const Partition& p) {
    double acc = 0.0;
    for (int c = 0; c < p.k; ++c) {
        double cross = 0.0;
        double degree = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (p.labels[i] != c) continue;
            for (std::size_t j = 0; j < w.size(); ++j) {
                degree += w.at(i, j);
                if (p.labels[j] != c) cross += w.at(i, j);
            }
        }
        acc += cross / degree;
    }
    return acc / static_cast<double>(p.k);
}

} // namespace

TEST_CASE("link_weight sums ordered pairs between vertex sets") {
    std::mt19937_64 gen(61);
    AffinityMatrix w = testutil::random_affinity(6, gen);

    CHECK(link_weight(w, {0}, {1}) == w.at(0, 1));
    CHECK(link_weight(w, {0}, {0}) == 0.0);  // zero diagonal
    CHECK(link_weight(w, {0, 1}, {2}) == doctest::Approx(w.at(0, 2) + w.at(1, 2)).epsilon(1e-15));

    // W(A, V) equals the degree sum of A
    std::vector<std::size_t> a{0, 3, 4};
    std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
    double degrees = 0.0;
    for (std::size_t i : a)
        for (std::size_t j = 0; j < 6; ++j) degrees += w.at(i, j);
    CHECK(link_weight(w, a, all) == doctest::Approx(degrees).epsilon(1e-13));

    check_error([&] { link_weight(w, {7}, {0}); }, ErrorCode::IndexOutOfRange);
}

TEST_CASE("two-way normalized cut hand value") {
    // two strong pairs (01, 23) with cross weight 1/6 gives NCut exactly 1/2
    Matrix raw(4, 4);
    raw.at(0, 1) = 1.0;
    raw.at(2, 3) = 1.0;
    const double c = 1.0 / 6.0;
    for (std::size_t i : {0u, 1u})
        for (std::size_t j : {2u, 3u}) raw.at(i, j) = c;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) raw.at(j, i) = raw.at(i, j);
    AffinityMatrix w = validate_affinity(raw);

    CHECK(ncut2(w, {0, 1}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(nassoc2(w, {0, 1}) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("ncut2 of a split single edge") {
    Matrix raw(2, 2);
    raw.at(0, 1) = 1.0;
    raw.at(1, 0) = 1.0;
    AffinityMatrix w = validate_affinity(raw);
    CHECK(ncut2(w, {0}) == 2.0);
    CHECK(nassoc2(w, {0}) == 0.0);
}

TEST_CASE("ncut2 and nassoc2 always sum to two") {
    std::mt19937_64 gen(62);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t m = 3 + gen() % 15;
        AffinityMatrix w = testutil::random_affinity(m, gen);
        std::size_t a_size = 1 + gen() % (m - 1);
        std::vector<std::size_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), gen);
        std::vector<std::size_t> a(idx.begin(), idx.begin() + static_cast<long>(a_size));
        CHECK(ncut2(w, a) + nassoc2(w, a) == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("ncut2 argument validation") {
    std::mt19937_64 gen(63);
    AffinityMatrix w = testutil::random_affinity(4, gen);
    check_error([&] { ncut2(w, {}); }, ErrorCode::InvalidArgument);
    check_error([&] { ncut2(w, {0, 1, 2, 3}); }, ErrorCode::InvalidArgument);

    Matrix raw(3, 3);
    raw.at(0, 1) = 1.0;
    raw.at(1, 0) = 1.0;  // vertex 2 isolated
    AffinityMatrix wi = validate_affinity(raw);
    check_error([&] { ncut2(wi, {2}); }, ErrorCode::DegenerateCluster);
}

TEST_CASE("k-way cut and association identities") {
    std::mt19937_64 gen(64);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t m = 4 + gen() % 16;
        int k = 2 + static_cast<int>(gen() % 4);
        if (static_cast<std::size_t>(k) > m) k = static_cast<int>(m);
        AffinityMatrix w = testutil::random_affinity(m, gen);
        Partition p = testutil::random_partition(m, k, gen);

        CHECK(k_ncut(w, p) + k_assoc(w, p) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(k_ncut(w, p) == doctest::Approx(k_ncut_oracle(w, p)).epsilon(1e-11));

        if (k == 2) {
            std::vector<std::size_t> a;
            for (std::size_t i = 0; i < m; ++i)
                if (p.labels[i] == 0) a.push_back(i);
            CHECK(k_ncut(w, p) == doctest::Approx(ncut2(w, a) / 2.0).epsilon(1e-12));
            CHECK(k_assoc(w, p) == doctest::Approx(nassoc2(w, a) / 2.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("k-way cut extremes") {
    std::mt19937_64 gen(65);

    // whole graph as one cluster
    AffinityMatrix w = testutil::random_affinity(8, gen);
    Partition whole{std::vector<int>(8, 0), 1};
    CHECK(k_ncut(w, whole) == 0.0);
    CHECK(k_assoc(w, whole) == 1.0);

    // connected components of a block-diagonal matrix
    AffinityMatrix blocks = testutil::block_affinity({3, 4}, 0.7, 0.0);
    Partition comp{testutil::block_labels({3, 4}), 2};
    CHECK(k_ncut(blocks, comp) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(k_assoc(blocks, comp) == doctest::Approx(1.0).epsilon(1e-15));

    // all-singleton partition has zero association (zero diagonal)
    Partition singles{{0, 1, 2, 3, 4, 5, 6, 7}, 8};
    CHECK(k_assoc(w, singles) == 0.0);
    CHECK(k_ncut(w, singles) == 1.0);

    Partition bad{std::vector<int>(8, 0), 2};  // cluster 1 empty
    check_error([&] { k_ncut(w, bad); }, ErrorCode::DegenerateCluster);
    Partition wrong_len{{0, 1}, 2};
    check_error([&] { k_ncut(w, wrong_len); }, ErrorCode::LengthMismatch);
}

TEST_CASE("three-block k_ncut against direct summation") {
    AffinityMatrix w = testutil::block_affinity({4, 4, 4}, 0.9, 0.1);
    Partition p{testutil::block_labels({4, 4, 4}), 3};
    // per cluster: cross = 4 * 8 * 0.1 = 3.2, degree = 4 * (3*0.9 + 8*0.1) = 14
    double expected = 3.2 / 14.0;
    CHECK(k_ncut(w, p) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(k_ncut(w, p) == doctest::Approx(k_ncut_oracle(w, p)).epsilon(1e-13));
}

TEST_CASE("outlier gap closed form hand value") {
    OutlierGapParams p;
    p.mu_in = 1.0;
    p.mu_out = 0.3;
    p.n_in = 10;
    p.n_total = 30;
    p.n_out = 20;
    double expected = 540.0 / 27040.0 + 1.0 / 30.0;
    CHECK(outlier_gap_closed_form(p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(outlier_gap_closed_form(p) == doctest::Approx(0.05331).epsilon(1e-3));
}

TEST_CASE("outlier gap is positive whenever the separation condition holds") {
    std::mt19937_64 gen(66);
    std::uniform_real_distribution<double> ratio(2.0001, 10.0);
    std::uniform_real_distribution<double> base(0.05, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        OutlierGapParams p;
        p.mu_out = base(gen);
        p.mu_in = p.mu_out * ratio(gen);
        p.n_in = 2 + gen() % 49;
        p.n_total = p.n_in + 2 + gen() % 150;
        p.n_out = p.n_total - p.n_in;
        CHECK(outlier_gap_closed_form(p) > 0.0);
    }
}

TEST_CASE("outlier gap argument validation") {
    OutlierGapParams p;
    p.mu_in = 1.0;
    p.mu_out = 0.3;
    p.n_in = 10;
    p.n_total = 30;
    p.n_out = 20;

    OutlierGapParams bad = p;
    bad.mu_out = 0.0;
    check_error([&] { outlier_gap_closed_form(bad); }, ErrorCode::NonPositiveInput);
    bad = p;
    bad.n_in = 30;
    check_error([&] { outlier_gap_closed_form(bad); }, ErrorCode::InvalidArgument);
}

TEST_CASE("separation condition is strict") {
    CHECK(separation_condition(1.0, 0.3));
    CHECK(separation_condition(1.0, 0.499));
    CHECK_FALSE(separation_condition(1.0, 0.5));
    CHECK_FALSE(separation_condition(1.0, 0.501));
    check_error([] { separation_condition(0.0, 0.1); }, ErrorCode::NonPositiveInput);
    check_error([] { separation_condition(1.0, -0.1); }, ErrorCode::NonPositiveInput);
}

TEST_CASE("empirical strong and weak link means") {
    std::mt19937_64 gen(67);
    AffinityMatrix w = testutil::random_affinity(4, gen);

    // labels: one inlier cluster {0,1}, outliers {2,3}
    std::vector<int> labels{1, 1, 0, 0};
    auto [mu_in, mu_out] = empirical_mu(w, labels);
    CHECK(mu_in == doctest::Approx(w.at(0, 1)).epsilon(1e-15));
    double weak = (w.at(0, 2) + w.at(0, 3) + w.at(1, 2) + w.at(1, 3) + w.at(2, 3)) / 5.0;
    CHECK(mu_out == doctest::Approx(weak).epsilon(1e-13));

    // two inlier clusters: cross-inlier links are weak too
    std::vector<int> two{1, 1, 2, 2};
    auto [in2, out2] = empirical_mu(w, two);
    CHECK(in2 == doctest::Approx(0.5 * (w.at(0, 1) + w.at(2, 3))).epsilon(1e-13));
    double weak2 = (w.at(0, 2) + w.at(0, 3) + w.at(1, 2) + w.at(1, 3)) / 4.0;
    CHECK(out2 == doctest::Approx(weak2).epsilon(1e-13));

    check_error([&] { empirical_mu(w, {0, 0, 0, 0}); }, ErrorCode::NoStrongLinks);
    check_error([&] { empirical_mu(w, {1, 1, 1, 1}); }, ErrorCode::NoWeakLinks);
    check_error([&] { empirical_mu(w, {1, 1, -2, 0}); }, ErrorCode::InvalidArgument);
}

TEST_CASE("local optimality holds for three clear blocks") {
    AffinityMatrix w = testutil::block_affinity({4, 4, 4}, 0.9, 0.1);
    Partition p3{testutil::block_labels({4, 4, 4}), 3};
    Partition p2{{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1}, 2};            // blocks 1+2 merged
    Partition p4{{0, 0, 3, 3, 1, 1, 1, 1, 2, 2, 2, 2}, 4};            // block 0 split
    CHECK(local_optimality(w, p2, p3, p4));

    // association sums bracket as the predicate says
    CHECK(assoc_sum_oracle(w, p2) < assoc_sum_oracle(w, p3));
    CHECK(assoc_sum_oracle(w, p3) > assoc_sum_oracle(w, p4));
}

TEST_CASE("local optimality fails everywhere on a uniform graph") {
    Matrix raw(12, 12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            if (i != j) raw.at(i, j) = 0.4;
    AffinityMatrix w = validate_affinity(raw);

    std::mt19937_64 gen(68);
    for (int k = 2; k <= 6; ++k) {
        Partition pk = testutil::random_partition(12, k, gen);
        Partition pkm1 = testutil::random_partition(12, k - 1, gen);
        Partition pkp1 = testutil::random_partition(12, k + 1, gen);
        CHECK_FALSE(local_optimality(w, pkm1, pk, pkp1));
    }
}

TEST_CASE("local optimality agrees with direct evaluation on random instances") {
    std::mt19937_64 gen(69);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t m = 8 + gen() % 10;
        int k = 3 + static_cast<int>(gen() % 3);
        AffinityMatrix w = testutil::random_affinity(m, gen);
        Partition pk = testutil::random_partition(m, k, gen);
        Partition pkm1 = testutil::random_partition(m, k - 1, gen);
        Partition pkp1 = testutil::random_partition(m, k + 1, gen);

        double below = assoc_sum_oracle(w, pkm1);
        double mid = assoc_sum_oracle(w, pk);
        double above = assoc_sum_oracle(w, pkp1);
        CHECK(local_optimality(w, pkm1, pk, pkp1) == (below < mid && mid > above));
    }
}

TEST_CASE("local optimality argument validation") {
    std::mt19937_64 gen(70);
    AffinityMatrix w = testutil::random_affinity(8, gen);
    Partition p1{std::vector<int>(8, 0), 1};
    Partition p2 = testutil::random_partition(8, 2, gen);
    Partition p3 = testutil::random_partition(8, 3, gen);
    check_error([&] { local_optimality(w, p1, p1, p2); }, ErrorCode::KTooSmall);
    check_error([&] { local_optimality(w, p3, p2, p3); }, ErrorCode::InvalidArgument);
    CHECK_NOTHROW(local_optimality(w, p1, p2, p3));
}

TEST_CASE("weakly linked vertices prefer the outlier cluster") {
    // planted two-expectation graphs: moving the probe vertex out of the
    // inlier cluster raises the two-way association in nearly every draw
    std::mt19937_64 gen(71);
    std::uniform_real_distribution<double> strong(0.8, 1.0);
    std::uniform_real_distribution<double> weak(0.25, 0.35);
    const std::size_t n_in = 12;
    const std::size_t n_out = 6;
    const std::size_t m = n_in + n_out;

    int improved = 0;
    const int trials = 200;
    for (int rep = 0; rep < trials; ++rep) {
        Matrix raw(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                double v = (i < n_in && j < n_in) ? strong(gen) : weak(gen);
                raw.at(i, j) = v;
                raw.at(j, i) = v;
            }
        AffinityMatrix w = validate_affinity(raw);

        std::vector<std::size_t> inliers;
        for (std::size_t i = 0; i < n_in; ++i) inliers.push_back(i);
        std::vector<std::size_t> with_probe = inliers;
        with_probe.push_back(n_in);  // first outlier joins the inlier cluster

        if (nassoc2(w, inliers) > nassoc2(w, with_probe)) improved += 1;
    }
    CHECK(improved >= trials * 95 / 100);
}
