#ifndef HEARSTKIT_METRICS_HPP
#define HEARSTKIT_METRICS_HPP

#include <utility>
#include <vector>

namespace hearstkit {

// Average precision of a global ranking. Items are (score, is_positive);
// ranking is by descending score, stable, so ties keep input order.
// Throws when there are no positives.
double average_precision(const std::vector<std::pair<double, bool>>& items);

// Ranks with ties averaged: (1 + 2)/2 style mid-ranks, 1-based.
std::vector<double> average_ranks(const std::vector<double>& values);

// Spearman's rank correlation with average ranks for ties. Throws on
// length mismatch, fewer than two items, or zero rank variance.
double spearman(const std::vector<double>& pred, const std::vector<double>& gold);

}  // namespace hearstkit

#endif
