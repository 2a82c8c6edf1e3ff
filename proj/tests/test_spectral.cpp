#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "idc/error.hpp"
#include "idc/metrics.hpp"
#include "idc/spectral.hpp"

using namespace idc;
using testutil::check_error;

TEST_CASE("unnormalized laplacian of a single edge") {
    Matrix raw(2, 2);
    raw.at(0, 1) = 1.0;
    raw.at(1, 0) = 1.0;
    AffinityMatrix w = validate_affinity(raw);
    Matrix l = laplacian(w, LaplacianKind::Unnormalized);
    CHECK(l.at(0, 0) == 1.0);
    CHECK(l.at(0, 1) == -1.0);
    CHECK(l.at(1, 0) == -1.0);
    CHECK(l.at(1, 1) == 1.0);

    Matrix ls = laplacian(w, LaplacianKind::SymmetricNormalized);
    CHECK(ls.at(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ls.at(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("unnormalized laplacian rows sum to zero") {
    std::mt19937_64 gen(51);
    AffinityMatrix w = testutil::random_affinity(11, gen);
    Matrix l = laplacian(w, LaplacianKind::Unnormalized);
    for (std::size_t i = 0; i < 11; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < 11; ++j) s += l.at(i, j);
        CHECK(s == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("an isolated vertex keeps both laplacians finite") {
    Matrix raw(3, 3);
    raw.at(0, 1) = 1.0;
    raw.at(1, 0) = 1.0;  // vertex 2 has no edges
    AffinityMatrix w = validate_affinity(raw);

    Matrix lu = laplacian(w, LaplacianKind::Unnormalized);
    CHECK(lu.at(2, 2) == 0.0);
    CHECK(lu.at(2, 0) == 0.0);

    Matrix ls = laplacian(w, LaplacianKind::SymmetricNormalized);
    CHECK(ls.at(2, 2) == 1.0);
    CHECK(ls.at(2, 0) == 0.0);
    for (double v : ls.data) CHECK(std::isfinite(v));
}

TEST_CASE("zero-eigenvalue multiplicity equals the number of connected components") {
    std::mt19937_64 gen(52);
    std::vector<std::size_t> sizes{3, 4, 5};
    AffinityMatrix w = testutil::block_affinity(sizes, 0.0, 0.0);
    // fill within-block weights randomly, keep blocks disconnected
    Matrix raw = w.weights;
    std::size_t offset = 0;
    std::uniform_real_distribution<double> dist(0.3, 1.0);
    for (std::size_t s : sizes) {
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j) {
                double v = dist(gen);
                raw.at(offset + i, offset + j) = v;
                raw.at(offset + j, offset + i) = v;
            }
        offset += s;
    }
    AffinityMatrix blocks = validate_affinity(raw);

    for (LaplacianKind kind : {LaplacianKind::Unnormalized, LaplacianKind::SymmetricNormalized}) {
        EigenDecomposition eig = sym_eigen(laplacian(blocks, kind));
        int near_zero = 0;
        for (double v : eig.values)
            if (std::abs(v) < 1e-8) near_zero += 1;
        CHECK(near_zero == 3);
    }
}

TEST_CASE("spectral embedding shape and row normalization") {
    std::mt19937_64 gen(53);
    AffinityMatrix w = testutil::random_affinity(10, gen);
    Matrix e = spectral_embed(w, 3, LaplacianKind::SymmetricNormalized);
    CHECK(e.rows == 10);
    CHECK(e.cols == 3);
    for (std::size_t i = 0; i < e.rows; ++i) {
        double n = 0.0;
        for (std::size_t j = 0; j < e.cols; ++j) n += e.at(i, j) * e.at(i, j);
        CHECK(std::sqrt(n) == doctest::Approx(1.0).epsilon(1e-10));
    }

    Matrix eu = spectral_embed(w, 3, LaplacianKind::Unnormalized);
    CHECK(eu.rows == 10);
    CHECK(eu.cols == 3);
}

TEST_CASE("block structure collapses to identical embedding rows per block") {
    std::vector<std::size_t> sizes{4, 3, 5};
    AffinityMatrix w = testutil::block_affinity(sizes, 0.9, 0.0);
    Matrix e = spectral_embed(w, 3, LaplacianKind::SymmetricNormalized);
    std::vector<int> labels = testutil::block_labels(sizes);
    for (std::size_t i = 0; i < e.rows; ++i)
        for (std::size_t j = i + 1; j < e.rows; ++j) {
            if (labels[i] != labels[j]) continue;
            for (std::size_t c = 0; c < e.cols; ++c)
                CHECK(e.at(i, c) == doctest::Approx(e.at(j, c)).scale(1.0).epsilon(1e-8));
        }
}

TEST_CASE("spectral clustering recovers perfect blocks exactly") {
    std::mt19937_64 gen(54);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<std::size_t> sizes{3 + gen() % 4, 3 + gen() % 4, 3 + gen() % 4};
        AffinityMatrix w = testutil::block_affinity(sizes, 0.8, 0.05);
        std::vector<int> truth = testutil::block_labels(sizes);
        for (LaplacianKind kind :
             {LaplacianKind::Unnormalized, LaplacianKind::SymmetricNormalized}) {
            Partition p = spectral_cluster(w, 3, kind, 7);
            CHECK(adjusted_rand_index(truth, p.labels) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("spectral_cluster matches kmeans on the embedding it advertises") {
    std::mt19937_64 gen(55);
    AffinityMatrix w = testutil::random_affinity(14, gen);
    Matrix e = spectral_embed(w, 4, LaplacianKind::SymmetricNormalized);
    KMeansResult km = kmeans(e, 4, 11);
    Partition p = spectral_cluster(w, 4, LaplacianKind::SymmetricNormalized, 11);
    CHECK(p.labels == km.labels);
    CHECK(p.k == 4);
}

TEST_CASE("spectral argument validation") {
    std::mt19937_64 gen(56);
    AffinityMatrix w = testutil::random_affinity(5, gen);
    check_error([&] { spectral_embed(w, 0, LaplacianKind::SymmetricNormalized); },
                ErrorCode::KTooSmall);
    check_error([&] { spectral_embed(w, 6, LaplacianKind::SymmetricNormalized); },
                ErrorCode::KTooLarge);
    check_error([&] { spectral_cluster(w, 1, LaplacianKind::SymmetricNormalized, 0); },
                ErrorCode::KTooSmall);
}
