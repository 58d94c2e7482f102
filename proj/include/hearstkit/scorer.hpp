#ifndef HEARSTKIT_SCORER_HPP
#define HEARSTKIT_SCORER_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hearstkit/pair_counts.hpp"
#include "hearstkit/sparse.hpp"

namespace hearstkit {

// Dense term <-> index bijection over the unique terms of a pair table.
// Indices are assigned in lexicographic term order, so models built from
// the same counts are file-stable.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> terms);
    static Vocabulary from_counts(const PairCounts& counts);

    size_t size() const { return terms_.size(); }
    const std::string& term(size_t index) const { return terms_.at(index); }
    const std::vector<std::string>& terms() const { return terms_; }
    std::optional<uint32_t> index(const std::string& term) const;

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, uint32_t> index_;
};

enum class Weighting { Prob, Ppmi };

// Extraction probability p(x,y) = w(x,y)/W. 0 for unobserved pairs and
// OOV terms. Throws if the counts are empty (W = 0).
double prob(const PairCounts& counts, const std::string& x, const std::string& y);

struct Marginals {
    std::unordered_map<std::string, double> as_hypo;   // p-(x)
    std::unordered_map<std::string, double> as_hyper;  // p+(x)
};

// p-(x) = sum_y w(x,y)/W and p+(x) = sum_y w(y,x)/W. Each sums to 1.
Marginals marginals(const PairCounts& counts);

// max(0, ln p(x,y) / (p-(x) p+(y))); 0 when p(x,y) = 0.
double ppmi(const PairCounts& counts, const std::string& x, const std::string& y);

// Sparse m-by-m pair-score matrix: rows index the hyponym slot, columns the
// hypernym slot, one shared vocabulary. Zero entries are not stored (PPMI
// clamps at zero, so observed pairs can be absent).
struct PairModel {
    Vocabulary vocab;
    Weighting weighting = Weighting::Ppmi;
    CsrMatrix matrix;
    std::vector<double> p_hypo;   // per-term p-(x)
    std::vector<double> p_hyper;  // per-term p+(x)

    // nullopt for OOV terms; 0.0 for in-vocabulary unobserved pairs.
    std::optional<double> score(const std::string& x, const std::string& y) const;
};

// Entries match the per-pair prob/ppmi values exactly. Throws on empty
// counts.
PairModel build_matrix(const PairCounts& counts, Weighting weighting);

}  // namespace hearstkit

#endif
