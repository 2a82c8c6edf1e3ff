#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "idc/core.hpp"
#include "idc/error.hpp"

using namespace idc;
using testutil::check_error;

TEST_CASE("validate_affinity accepts a symmetric matrix and zeroes the diagonal") {
    Matrix raw(2, 2);
    raw.at(0, 0) = 5.0;
    raw.at(0, 1) = 1.5;
    raw.at(1, 0) = 1.5;
    raw.at(1, 1) = 7.0;
    AffinityMatrix w = validate_affinity(raw);
    CHECK(w.size() == 2);
    CHECK(w.at(0, 0) == 0.0);
    CHECK(w.at(1, 1) == 0.0);
    CHECK(w.at(0, 1) == 1.5);
    CHECK(w.at(1, 0) == 1.5);
}

TEST_CASE("validate_affinity repairs asymmetry below the tolerance by averaging") {
    Matrix raw(2, 2);
    raw.at(0, 1) = 1.0;
    raw.at(1, 0) = 1.0 + 4e-10;
    AffinityMatrix w = validate_affinity(raw);
    CHECK(w.at(0, 1) == w.at(1, 0));
    CHECK(w.at(0, 1) == doctest::Approx(1.0 + 2e-10).epsilon(1e-15));
}

TEST_CASE("validate_affinity rejects bad input") {
    check_error([] { validate_affinity(Matrix(2, 3)); }, ErrorCode::NonSquare);

    Matrix asym(2, 2);
    asym.at(0, 1) = 1.0;
    asym.at(1, 0) = 1.0 + 1e-6;
    check_error([&] { validate_affinity(asym); }, ErrorCode::Asymmetric);

    Matrix neg(2, 2);
    neg.at(0, 1) = -0.1;
    neg.at(1, 0) = -0.1;
    check_error([&] { validate_affinity(neg); }, ErrorCode::NegativeWeight);

    Matrix nan_m(2, 2);
    nan_m.at(0, 1) = std::numeric_limits<double>::quiet_NaN();
    nan_m.at(1, 0) = std::numeric_limits<double>::quiet_NaN();
    check_error([&] { validate_affinity(nan_m); }, ErrorCode::NonFinite);

    Matrix inf_m(2, 2);
    inf_m.at(0, 1) = std::numeric_limits<double>::infinity();
    inf_m.at(1, 0) = std::numeric_limits<double>::infinity();
    check_error([&] { validate_affinity(inf_m); }, ErrorCode::NonFinite);
}

TEST_CASE("validate_partition checks label ranges and nonempty clusters") {
    Partition good{{0, 1, 2, 0}, 3};
    validate_partition(good, true);

    Partition out_of_range{{0, 3}, 3};
    check_error([&] { validate_partition(out_of_range, false); }, ErrorCode::IndexOutOfRange);

    Partition negative{{0, -1}, 2};
    check_error([&] { validate_partition(negative, false); }, ErrorCode::IndexOutOfRange);

    Partition bad_k{{0, 0}, 0};
    check_error([&] { validate_partition(bad_k, false); }, ErrorCode::KTooSmall);

    Partition hole{{0, 2, 0}, 3};
    validate_partition(hole, false);
    check_error([&] { validate_partition(hole, true); }, ErrorCode::EmptyCluster);
}

TEST_CASE("cluster_sizes counts members per cluster") {
    Partition p{{0, 1, 1, 2, 1}, 3};
    std::vector<std::size_t> sizes = cluster_sizes(p);
    REQUIRE(sizes.size() == 3);
    CHECK(sizes[0] == 1);
    CHECK(sizes[1] == 3);
    CHECK(sizes[2] == 1);
}

TEST_CASE("random affinities satisfy the advertised invariants") {
    std::mt19937_64 gen(21);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t n = 2 + gen() % 20;
        AffinityMatrix w = testutil::random_affinity(n, gen);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(w.at(i, i) == 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(w.at(i, j) == w.at(j, i));
                CHECK(w.at(i, j) >= 0.0);
            }
        }
    }
}
