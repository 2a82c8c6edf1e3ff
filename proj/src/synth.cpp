#include "idc/synth.hpp"

#include <cmath>
#include <string>

#include "idc/error.hpp"
#include "idc/rng.hpp"

namespace idc {

std::vector<std::size_t> sizes_from_gaussian(double mean, double std, std::size_t n,
                                             std::uint64_t seed) {
    if (!(mean > 0.0)) fail(ErrorCode::NonPositiveInput, "mean = " + std::to_string(mean));
    if (std < 0.0) fail(ErrorCode::InvalidArgument, "std must be nonnegative");
    std::mt19937_64 gen(seed);
    std::vector<std::size_t> sizes(n);
    for (std::size_t i = 0; i < n; ++i) {
        long long s = std::llround(mean + std * rng::normal(gen));
        sizes[i] = s < 1 ? 1 : static_cast<std::size_t>(s);
    }
    return sizes;
}

LabeledDataset generate(const SynthConfig& cfg) {
    if (cfg.dim < 1) fail(ErrorCode::InvalidArgument, "dim must be >= 1");
    if (cfg.n_inlier_clusters < 1)
        fail(ErrorCode::InvalidArgument, "need at least one inlier cluster");
    if (cfg.inlier_std < 0.0) fail(ErrorCode::InvalidArgument, "inlier_std must be nonnegative");

    const std::size_t n_clusters = static_cast<std::size_t>(cfg.n_inlier_clusters);
    const std::size_t d = cfg.dim;

    std::vector<std::size_t> sizes;
    if (const std::size_t* fixed = std::get_if<std::size_t>(&cfg.cluster_sizes)) {
        if (*fixed < 1) fail(ErrorCode::InvalidArgument, "cluster size must be >= 1");
        sizes.assign(n_clusters, *fixed);
    } else {
        const GaussianSpec& spec = std::get<GaussianSpec>(cfg.cluster_sizes);
        sizes = sizes_from_gaussian(spec.mean, spec.std, n_clusters, rng::derive_seed(cfg.seed, 0));
    }

    std::size_t n_out = 0;
    if (const std::size_t* fixed = std::get_if<std::size_t>(&cfg.n_outliers)) {
        n_out = *fixed;
    } else {
        const GaussianSpec& spec = std::get<GaussianSpec>(cfg.n_outliers);
        if (spec.std < 0.0) fail(ErrorCode::InvalidArgument, "std must be nonnegative");
        std::mt19937_64 gen(rng::derive_seed(cfg.seed, 1));
        long long c = std::llround(spec.mean + spec.std * rng::normal(gen));
        n_out = c < 0 ? 0 : static_cast<std::size_t>(c);
    }

    Matrix centers(n_clusters, d);
    {
        std::mt19937_64 gen(rng::derive_seed(cfg.seed, 2));
        for (std::size_t c = 0; c < n_clusters; ++c)
            for (std::size_t j = 0; j < d; ++j) centers.at(c, j) = rng::uniform_open_sym(gen);
    }

    std::size_t n_in_total = 0;
    for (std::size_t s : sizes) n_in_total += s;
    const std::size_t m = n_in_total + n_out;

    LabeledDataset data;
    data.features = Matrix(m, d);
    data.labels.resize(m);
    data.dim = d;
    data.n_inlier_clusters = cfg.n_inlier_clusters;

    std::size_t row = 0;
    {
        std::mt19937_64 gen(rng::derive_seed(cfg.seed, 3));
        for (std::size_t c = 0; c < n_clusters; ++c) {
            for (std::size_t s = 0; s < sizes[c]; ++s, ++row) {
                data.labels[row] = static_cast<int>(c) + 1;
                for (std::size_t j = 0; j < d; ++j)
                    data.features.at(row, j) = centers.at(c, j) + cfg.inlier_std * rng::normal(gen);
            }
        }
    }
    {
        std::mt19937_64 gen(rng::derive_seed(cfg.seed, 4));
        for (std::size_t o = 0; o < n_out; ++o, ++row) {
            data.labels[row] = 0;
            for (std::size_t j = 0; j < d; ++j)
                data.features.at(row, j) = rng::uniform_open_sym(gen);
        }
    }
    return data;
}

} // namespace idc
