#include "idc/spectral.hpp"

#include <cmath>
#include <string>

#include "idc/error.hpp"
#include "idc/kernels.hpp"

namespace idc {

Matrix laplacian(const AffinityMatrix& w, LaplacianKind kind) {
    const std::size_t m = w.size();
    std::vector<double> degree(m);
    for (std::size_t i = 0; i < m; ++i) degree[i] = kern::sum(w.weights.row(i), m);

    Matrix l(m, m);
    if (kind == LaplacianKind::Unnormalized) {
        for (std::size_t i = 0; i < m; ++i) {
            l.at(i, i) = degree[i];
            for (std::size_t j = 0; j < m; ++j) {
                if (j != i) l.at(i, j) = -w.at(i, j);
            }
        }
    } else {
        std::vector<double> inv_sqrt(m);
        for (std::size_t i = 0; i < m; ++i)
            inv_sqrt[i] = degree[i] > 0.0 ? 1.0 / std::sqrt(degree[i]) : 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            l.at(i, i) = 1.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j != i) l.at(i, j) = -inv_sqrt[i] * w.at(i, j) * inv_sqrt[j];
            }
        }
    }
    return l;
}

namespace detail {

Matrix embed_from_eigen(const EigenDecomposition& eig, int k, LaplacianKind kind) {
    const std::size_t m = eig.vectors.rows;
    const std::size_t kk = static_cast<std::size_t>(k);
    Matrix embedding(m, kk);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < kk; ++j) embedding.at(i, j) = eig.vectors.at(i, j);

    if (kind == LaplacianKind::SymmetricNormalized) {
        for (std::size_t i = 0; i < m; ++i) {
            double norm = std::sqrt(kern::dot(embedding.row(i), embedding.row(i), kk));
            if (norm > 0.0) {
                double inv = 1.0 / norm;
                for (std::size_t j = 0; j < kk; ++j) embedding.at(i, j) *= inv;
            }
        }
    }
    return embedding;
}

} // namespace detail

Matrix spectral_embed(const AffinityMatrix& w, int k, LaplacianKind kind) {
    if (k < 1) fail(ErrorCode::KTooSmall, "k = " + std::to_string(k));
    if (static_cast<std::size_t>(k) > w.size())
        fail(ErrorCode::KTooLarge,
             "k = " + std::to_string(k) + " with M = " + std::to_string(w.size()));
    EigenDecomposition eig = sym_eigen(laplacian(w, kind));
    return detail::embed_from_eigen(eig, k, kind);
}

Partition spectral_cluster(const AffinityMatrix& w, int k, LaplacianKind kind,
                           std::uint64_t seed) {
    if (k < 2) fail(ErrorCode::KTooSmall, "k = " + std::to_string(k));
    Matrix embedding = spectral_embed(w, k, kind);
    KMeansResult km = kmeans(embedding, k, seed);
    Partition p;
    p.labels = std::move(km.labels);
    p.k = k;
    return p;
}

} // namespace idc
