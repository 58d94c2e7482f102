#include "hearstkit/dih.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hearstkit {

namespace {

double sum(SparseVec v) {
    double s = 0.0;
    for (double x : v.val) s += x;
    return s;
}

uint32_t term_row(const DistributionalSpace& space, const std::string& term) {
    auto idx = space.index(term);
    if (!idx) throw std::out_of_range("term not in space: " + term);
    return *idx;
}

}  // namespace

double cosine(SparseVec x, SparseVec y) {
    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (double v : x.val) nx += v * v;
    for (double v : y.val) ny += v * v;
    if (nx == 0.0 || ny == 0.0) throw std::domain_error("cosine of a zero vector");
    size_t i = 0, j = 0;
    while (i < x.idx.size() && j < y.idx.size()) {
        if (x.idx[i] == y.idx[j]) {
            dot += x.val[i] * y.val[j];
            ++i;
            ++j;
        } else if (x.idx[i] < y.idx[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return dot / (std::sqrt(nx) * std::sqrt(ny));
}

double weeds_prec(SparseVec x, SparseVec y) {
    const double sx = sum(x);
    if (sx == 0.0) throw std::domain_error("weeds_prec with zero x");
    double inc = 0.0;
    size_t i = 0, j = 0;
    while (i < x.idx.size() && j < y.idx.size()) {
        if (x.idx[i] == y.idx[j]) {
            if (y.val[j] > 0) inc += x.val[i];
            ++i;
            ++j;
        } else if (x.idx[i] < y.idx[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return inc / sx;
}

double cl(SparseVec x, SparseVec y) {
    const double sx = sum(x);
    if (sx == 0.0) throw std::domain_error("cl with zero x");
    double overlap = 0.0;
    size_t i = 0, j = 0;
    while (i < x.idx.size() && j < y.idx.size()) {
        if (x.idx[i] == y.idx[j]) {
            overlap += std::min(x.val[i], y.val[j]);
            ++i;
            ++j;
        } else if (x.idx[i] < y.idx[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return overlap / sx;
}

double inv_cl(SparseVec x, SparseVec y) {
    return std::sqrt(cl(x, y) * (1.0 - cl(y, x)));
}

double slqs_entropy(const DistributionalSpace& space, const std::string& term,
                    size_t n_contexts) {
    if (n_contexts < 1) throw std::invalid_argument("need at least one context");
    const uint32_t r = term_row(space, term);
    auto idx = space.ppmi.row_indices(r);
    auto val = space.ppmi.row_values(r);
    if (idx.empty()) throw std::domain_error("term has no contexts: " + term);

    std::vector<std::pair<double, uint32_t>> ranked(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) ranked[k] = {val[k], idx[k]};
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    const size_t take = std::min(n_contexts, ranked.size());

    std::vector<double> entropies(take);
    for (size_t k = 0; k < take; ++k) entropies[k] = space.context_entropy[ranked[k].second];
    std::sort(entropies.begin(), entropies.end());
    if (take % 2 == 1) return entropies[take / 2];
    return 0.5 * (entropies[take / 2 - 1] + entropies[take / 2]);
}

double slqs(const DistributionalSpace& space, const std::string& x, const std::string& y,
            size_t n_contexts) {
    const double ex = slqs_entropy(space, x, n_contexts);
    const double ey = slqs_entropy(space, y, n_contexts);
    if (ey == 0.0) throw std::domain_error("slqs with zero hypernym entropy");
    return 1.0 - ex / ey;
}

double slqs_cos(const DistributionalSpace& space, const std::string& x, const std::string& y,
                size_t n_contexts) {
    const double s = slqs(space, x, y, n_contexts);
    const double c = cosine(SparseVec::row(space.ppmi, term_row(space, x)),
                            SparseVec::row(space.ppmi, term_row(space, y)));
    return s * c;
}

}  // namespace hearstkit
