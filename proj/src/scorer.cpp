#include "hearstkit/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hearstkit {

Vocabulary::Vocabulary(std::vector<std::string> terms) : terms_(std::move(terms)) {
    index_.reserve(terms_.size());
    for (uint32_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
    if (index_.size() != terms_.size()) throw std::invalid_argument("duplicate vocabulary term");
}

Vocabulary Vocabulary::from_counts(const PairCounts& counts) {
    std::vector<std::string> terms;
    for (const auto& [key, entry] : counts.entries()) {
        terms.push_back(key.first);
        terms.push_back(key.second);
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return Vocabulary(std::move(terms));
}

std::optional<uint32_t> Vocabulary::index(const std::string& term) const {
    auto it = index_.find(term);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

void require_nonempty(const PairCounts& counts) {
    if (counts.total() == 0) throw std::runtime_error("empty pair counts (W = 0)");
}

}  // namespace

double prob(const PairCounts& counts, const std::string& x, const std::string& y) {
    require_nonempty(counts);
    return static_cast<double>(counts.count(x, y)) / static_cast<double>(counts.total());
}

Marginals marginals(const PairCounts& counts) {
    require_nonempty(counts);
    Marginals m;
    const double w = static_cast<double>(counts.total());
    for (const auto& [key, entry] : counts.entries()) {
        m.as_hypo[key.first] += entry.count / w;
        m.as_hyper[key.second] += entry.count / w;
    }
    return m;
}

double ppmi(const PairCounts& counts, const std::string& x, const std::string& y) {
    const double p = prob(counts, x, y);
    if (p == 0.0) return 0.0;
    Marginals m = marginals(counts);
    const double px = m.as_hypo.at(x);
    const double py = m.as_hyper.at(y);
    return std::max(0.0, std::log(p / (px * py)));
}

std::optional<double> PairModel::score(const std::string& x, const std::string& y) const {
    auto xi = vocab.index(x);
    auto yi = vocab.index(y);
    if (!xi || !yi) return std::nullopt;
    return matrix.at(*xi, *yi);
}

PairModel build_matrix(const PairCounts& counts, Weighting weighting) {
    require_nonempty(counts);
    PairModel model;
    model.weighting = weighting;
    model.vocab = Vocabulary::from_counts(counts);
    const size_t m = model.vocab.size();
    const double w = static_cast<double>(counts.total());

    model.p_hypo.assign(m, 0.0);
    model.p_hyper.assign(m, 0.0);
    for (const auto& [key, entry] : counts.entries()) {
        model.p_hypo[*model.vocab.index(key.first)] += entry.count / w;
        model.p_hyper[*model.vocab.index(key.second)] += entry.count / w;
    }

    // PairCounts iterates in (hypo, hyper) lexicographic order, which is
    // exactly (row, col) order under the sorted vocabulary.
    CsrBuilder builder(m, m);
    for (const auto& [key, entry] : counts.entries()) {
        const uint32_t r = *model.vocab.index(key.first);
        const uint32_t c = *model.vocab.index(key.second);
        double value;
        if (weighting == Weighting::Prob) {
            value = entry.count / w;
        } else {
            const double p = entry.count / w;
            value = std::max(0.0, std::log(p / (model.p_hypo[r] * model.p_hyper[c])));
        }
        if (value != 0.0) builder.push(r, c, value);
    }
    model.matrix = builder.finish();
    return model;
}

}  // namespace hearstkit
