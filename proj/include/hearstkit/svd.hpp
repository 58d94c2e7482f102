#ifndef HEARSTKIT_SVD_HPP
#define HEARSTKIT_SVD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hearstkit/scorer.hpp"
#include "hearstkit/sparse.hpp"

namespace hearstkit {

// Truncated SVD factors: `u` and `v` hold the factor rows in row-major
// layout (one length-r row per term), singular values are non-increasing.
// The vocabulary is empty for purely numeric use and attached when the
// model scores term pairs.
struct SvdModel {
    size_t rank = 0;
    size_t u_rows = 0;
    size_t v_rows = 0;
    std::vector<double> singular_values;
    std::vector<double> u;
    std::vector<double> v;
    Weighting weighting = Weighting::Ppmi;
    Vocabulary vocab;

    // u_row' diag(sigma) v_col. Throws std::out_of_range on bad indices.
    double reconstruct(size_t row, size_t col) const;

    // Smoothed pair score; nullopt for OOV terms.
    std::optional<double> score(const std::string& x, const std::string& y) const;

    // Keeps the leading `r` triplets. r must not exceed rank.
    SvdModel truncated(size_t r) const;
};

// Deterministic truncated SVD of a sparse matrix via thick-restart
// Golub-Kahan-Lanczos bidiagonalization with full reorthogonalization.
// The seed fixes the start vector; identical (matrix, rank, seed) inputs
// produce bit-identical factors. Singular vector signs are normalized so
// the largest-magnitude entry of each U column is positive.
//
// Throws if rank < 1 or rank exceeds either dimension, and if the top-rank
// singular values do not settle (relative change 1e-10) within 1000
// restarts. An all-zero matrix yields zero singular values.
SvdModel truncated_svd(const CsrMatrix& matrix, size_t rank, uint64_t seed);

}  // namespace hearstkit

#endif
