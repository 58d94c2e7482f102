#include "hearstkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hearstkit {

double average_precision(const std::vector<std::pair<double, bool>>& items) {
    std::vector<size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return items[a].first > items[b].first; });
    double ap = 0.0;
    size_t positives = 0;
    for (size_t rank = 0; rank < order.size(); ++rank) {
        if (items[order[rank]].second) {
            ++positives;
            ap += static_cast<double>(positives) / static_cast<double>(rank + 1);
        }
    }
    if (positives == 0) throw std::domain_error("average precision needs a positive item");
    return ap / static_cast<double>(positives);
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    const size_t n = values.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

double spearman(const std::vector<double>& pred, const std::vector<double>& gold) {
    if (pred.size() != gold.size()) throw std::invalid_argument("length mismatch");
    if (pred.size() < 2) throw std::invalid_argument("need at least two pairs");
    const auto rp = average_ranks(pred);
    const auto rg = average_ranks(gold);
    const double n = static_cast<double>(pred.size());
    double mp = 0.0, mg = 0.0;
    for (size_t i = 0; i < pred.size(); ++i) {
        mp += rp[i];
        mg += rg[i];
    }
    mp /= n;
    mg /= n;
    double cov = 0.0, vp = 0.0, vg = 0.0;
    for (size_t i = 0; i < pred.size(); ++i) {
        const double dp = rp[i] - mp;
        const double dg = rg[i] - mg;
        cov += dp * dg;
        vp += dp * dp;
        vg += dg * dg;
    }
    if (vp == 0.0 || vg == 0.0) throw std::domain_error("zero rank variance");
    return cov / std::sqrt(vp * vg);
}

}  // namespace hearstkit
