#ifndef HEARSTKIT_EVAL_HPP
#define HEARSTKIT_EVAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hearstkit/dataset.hpp"

namespace hearstkit {

// Abstract pair scorer. Implementations must be deterministic: the same
// pair always gets the same outcome. nullopt marks an out-of-vocabulary
// pair; the protocols own the OOV policy.
class Scorer {
public:
    virtual ~Scorer() = default;
    virtual std::optional<double> score(const std::string& x, const std::string& y) const = 0;
    virtual std::string name() const = 0;
    virtual std::string hyperparams() const { return ""; }
};

struct EvalResult {
    std::string metric;
    double value = 0.0;
    size_t n_pairs = 0;
    size_t n_oov = 0;
    std::string hyperparams;
    uint64_t seed = 0;
};

// Detection: global ranking of all pairs scored with AP, positives are the
// `hyper`-labelled records. OOV pairs share a sentinel strictly below
// every real score and keep their input order.
EvalResult detection_eval(const Scorer& scorer, const std::vector<DatasetRecord>& dataset);

// Direction on positive pairs only: seeded shuffle, 10% reserved for
// validation (hyperparameter selection elsewhere), accuracy on the rest.
// A pair is correct iff score(x,y) > score(y,x); OOV or ties count wrong.
EvalResult direction_bless(const Scorer& scorer, const std::vector<DatasetRecord>& dataset,
                           uint64_t seed);

// 1000 iterations; each draws 2% (at least one pair) as validation to fit
// a threshold maximizing validation accuracy, then tests on the rest.
// Prediction: hyper iff score(x,y) >= t and score(x,y) > score(y,x).
// Mean accuracy over iterations; bit-identical for any `jobs`.
EvalResult direction_wbless(const Scorer& scorer, const std::vector<DatasetRecord>& dataset,
                            uint64_t seed, int jobs = 1, size_t iterations = 1000);

// Three-way variant over labels {hyper, hypo, other}: stage one thresholds
// max(score(x,y), score(y,x)) for relatedness in either direction, stage
// two compares the two directions.
EvalResult direction_bibless(const Scorer& scorer, const std::vector<DatasetRecord>& dataset,
                             uint64_t seed, int jobs = 1, size_t iterations = 1000);

// Graded entailment: Spearman correlation against gold scores; OOV pairs
// are imputed with the median of the scored pairs.
EvalResult graded_eval(const Scorer& scorer, const std::vector<DatasetRecord>& dataset);

// Grid selection: evaluates each value, returns the maximizer with ties
// going to the smallest value.
struct SweepResult {
    size_t best = 0;
    std::vector<std::pair<size_t, double>> points;
};
SweepResult sweep(const std::vector<size_t>& grid,
                  const std::function<double(size_t)>& evaluate);

// Shared rank / context-count grid.
const std::vector<size_t>& default_sweep_grid();

}  // namespace hearstkit

#endif
