#ifndef HEARSTKIT_DIH_HPP
#define HEARSTKIT_DIH_HPP

#include <cstdint>
#include <span>

#include "hearstkit/dist_space.hpp"

namespace hearstkit {

// A sparse non-negative vector view: parallel (index, value) spans with
// strictly increasing indices.
struct SparseVec {
    std::span<const uint32_t> idx;
    std::span<const double> val;

    static SparseVec row(const CsrMatrix& m, size_t r) {
        return {m.row_indices(r), m.row_values(r)};
    }
};

// All measures assume non-negative entries. Measures taking x's sum throw
// on an all-zero x.
double cosine(SparseVec x, SparseVec y);
double weeds_prec(SparseVec x, SparseVec y);  // sum_i x_i [y_i > 0] / sum_i x_i
double cl(SparseVec x, SparseVec y);          // sum_i min(x_i, y_i) / sum_i x_i
double inv_cl(SparseVec x, SparseVec y);      // sqrt(cl(x,y) (1 - cl(y,x)))

// Median entropy of the term's top-N contexts, ranked by descending PPMI
// weight with ties broken by context index. Even counts average the two
// middle values. Throws on an unknown term.
double slqs_entropy(const DistributionalSpace& space, const std::string& term, size_t n_contexts);

// 1 - E_x / E_y; throws when E_y is zero.
double slqs(const DistributionalSpace& space, const std::string& x, const std::string& y,
            size_t n_contexts);

// slqs(x,y,N) * cosine(x,y) over the space's weighted rows.
double slqs_cos(const DistributionalSpace& space, const std::string& x, const std::string& y,
                size_t n_contexts);

}  // namespace hearstkit

#endif
