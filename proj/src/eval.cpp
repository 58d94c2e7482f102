#include "hearstkit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hearstkit/metrics.hpp"
#include "hearstkit/rng.hpp"

namespace hearstkit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct ScoredPair {
    double fwd;  // score(x, y), -inf when OOV
    double rev;  // score(y, x), -inf when OOV
    bool oov;
    const DatasetRecord* rec;
};

std::vector<ScoredPair> score_pairs(const Scorer& scorer,
                                    const std::vector<DatasetRecord>& dataset) {
    std::vector<ScoredPair> out;
    out.reserve(dataset.size());
    for (const auto& rec : dataset) {
        auto f = scorer.score(rec.x, rec.y);
        auto r = scorer.score(rec.y, rec.x);
        out.push_back(ScoredPair{f.value_or(kNegInf), r.value_or(kNegInf), !f || !r, &rec});
    }
    return out;
}

// Threshold candidates: midpoints between consecutive distinct validation
// scores, plus -inf/+inf for the all-pass and none-pass policies. The
// infinite sentinels keep the fit invariant under monotone transforms of
// the scores, which finite offsets would break.
std::vector<double> threshold_candidates(std::vector<double> scores) {
    scores.erase(std::remove_if(scores.begin(), scores.end(),
                                [](double s) { return !std::isfinite(s); }),
                 scores.end());
    std::sort(scores.begin(), scores.end());
    scores.erase(std::unique(scores.begin(), scores.end()), scores.end());
    std::vector<double> cands;
    cands.push_back(kNegInf);
    for (size_t i = 0; i + 1 < scores.size(); ++i)
        cands.push_back(0.5 * (scores[i] + scores[i + 1]));
    cands.push_back(std::numeric_limits<double>::infinity());
    return cands;
}

// Scans candidates in ascending order keeping the first maximizer, so ties
// resolve to the smaller threshold.
double fit_threshold(const std::vector<double>& candidates,
                     const std::function<double(double)>& accuracy_at) {
    double best_t = candidates.front();
    double best_acc = -1.0;
    for (double t : candidates) {
        const double acc = accuracy_at(t);
        if (acc > best_acc) {
            best_acc = acc;
            best_t = t;
        }
    }
    return best_t;
}

double mean_over_iterations(size_t iterations, int jobs,
                            const std::function<double(size_t)>& run_iteration) {
    std::vector<double> acc(iterations, 0.0);
    const int workers = std::max(1, jobs);
    if (workers == 1) {
        for (size_t i = 0; i < iterations; ++i) acc[i] = run_iteration(i);
    } else {
        std::vector<std::thread> pool;
        const size_t per = (iterations + workers - 1) / static_cast<size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const size_t lo = std::min(iterations, static_cast<size_t>(w) * per);
            const size_t hi = std::min(iterations, lo + per);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (size_t i = lo; i < hi; ++i) acc[i] = run_iteration(i);
            });
        }
        for (auto& t : pool) t.join();
    }
    // Fixed summation order keeps the mean bit-identical across job counts.
    double sum = 0.0;
    for (size_t i = 0; i < iterations; ++i) sum += acc[i];
    return sum / static_cast<double>(iterations);
}

size_t count_oov(const std::vector<ScoredPair>& scored) {
    size_t n = 0;
    for (const auto& sp : scored) n += sp.oov ? 1 : 0;
    return n;
}

}  // namespace

EvalResult detection_eval(const Scorer& scorer, const std::vector<DatasetRecord>& dataset) {
    std::vector<std::optional<double>> raw;
    raw.reserve(dataset.size());
    double min_real = std::numeric_limits<double>::infinity();
    size_t n_oov = 0;
    for (const auto& rec : dataset) {
        auto s = scorer.score(rec.x, rec.y);
        if (s) {
            min_real = std::min(min_real, *s);
        } else {
            ++n_oov;
        }
        raw.push_back(s);
    }
    const double sentinel = std::isfinite(min_real)
                                ? std::nextafter(min_real, kNegInf)
                                : 0.0;
    std::vector<std::pair<double, bool>> items;
    items.reserve(dataset.size());
    for (size_t i = 0; i < dataset.size(); ++i) {
        items.emplace_back(raw[i].value_or(sentinel), dataset[i].relation == "hyper");
    }
    EvalResult res;
    res.metric = "AP";
    res.value = average_precision(items);
    res.n_pairs = dataset.size();
    res.n_oov = n_oov;
    res.hyperparams = scorer.hyperparams();
    return res;
}

EvalResult direction_bless(const Scorer& scorer, const std::vector<DatasetRecord>& dataset,
                           uint64_t seed) {
    for (const auto& rec : dataset) {
        if (rec.relation != "hyper")
            throw std::invalid_argument("direction expects positive (hyper) pairs only, got '" +
                                        rec.relation + "'");
    }
    auto scored = score_pairs(scorer, dataset);
    std::vector<size_t> order(scored.size());
    std::iota(order.begin(), order.end(), 0);
    Xoshiro256pp rng(derive_seed(seed, 0));
    shuffle(order, rng);
    const size_t n_val = static_cast<size_t>(std::llround(0.10 * static_cast<double>(order.size())));
    if (n_val >= order.size())
        throw std::runtime_error("empty test split in direction evaluation");

    size_t correct = 0, total = 0;
    for (size_t k = n_val; k < order.size(); ++k) {
        const auto& sp = scored[order[k]];
        correct += (!sp.oov && sp.fwd > sp.rev) ? 1 : 0;
        ++total;
    }
    EvalResult res;
    res.metric = "accuracy";
    res.value = static_cast<double>(correct) / static_cast<double>(total);
    res.n_pairs = total;
    res.n_oov = count_oov(scored);
    res.hyperparams = scorer.hyperparams();
    res.seed = seed;
    return res;
}

namespace {

// One wbless-style iteration: split, fit, test. `predict` maps (pair,
// threshold) to a label index, `label_of` supplies gold label indices, and
// `val_ok` guards against single-class validation draws.
struct IterationProtocol {
    const std::vector<ScoredPair>& scored;
    std::function<int(const ScoredPair&, double)> predict;
    std::function<int(const ScoredPair&)> label_of;
    std::function<double(const ScoredPair&)> threshold_key;
    std::function<bool(const std::vector<size_t>&)> val_ok;

    double run(uint64_t iter_seed) const {
        const size_t n = scored.size();
        // Floor of two: the validation draw must be able to hold both
        // classes for threshold fitting.
        const size_t n_val = std::max<size_t>(
            2, static_cast<size_t>(std::llround(0.02 * static_cast<double>(n))));
        if (n_val >= n) throw std::runtime_error("dataset too small for a 2% validation split");

        Xoshiro256pp rng(iter_seed);
        std::vector<size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<size_t> val;
        bool ok = false;
        for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
            shuffle(order, rng);
            val.assign(order.begin(), order.begin() + static_cast<long>(n_val));
            ok = val_ok(val);
        }
        if (!ok)
            throw std::runtime_error(
                "could not draw a validation split with both classes after 100 retries");

        std::vector<double> val_scores;
        val_scores.reserve(n_val);
        for (size_t i : val) val_scores.push_back(threshold_key(scored[i]));
        const auto cands = threshold_candidates(val_scores);
        const double t = fit_threshold(cands, [&](double cand) {
            size_t good = 0;
            for (size_t i : val)
                good += predict(scored[i], cand) == label_of(scored[i]) ? 1 : 0;
            return static_cast<double>(good) / static_cast<double>(val.size());
        });

        size_t good = 0, total = 0;
        for (size_t k = n_val; k < n; ++k) {
            const auto& sp = scored[order[k]];
            good += predict(sp, t) == label_of(sp) ? 1 : 0;
            ++total;
        }
        return static_cast<double>(good) / static_cast<double>(total);
    }
};

}  // namespace

EvalResult direction_wbless(const Scorer& scorer, const std::vector<DatasetRecord>& dataset,
                            uint64_t seed, int jobs, size_t iterations) {
    if (dataset.empty()) throw std::invalid_argument("empty dataset");
    auto scored = score_pairs(scorer, dataset);

    IterationProtocol proto{
        scored,
        [](const ScoredPair& sp, double t) { return (sp.fwd >= t && sp.fwd > sp.rev) ? 1 : 0; },
        [](const ScoredPair& sp) { return sp.rec->relation == "hyper" ? 1 : 0; },
        [](const ScoredPair& sp) { return sp.fwd; },
        [&](const std::vector<size_t>& val) {
            bool pos = false, neg = false;
            for (size_t i : val)
                (scored[i].rec->relation == "hyper" ? pos : neg) = true;
            return pos && neg;
        }};

    EvalResult res;
    res.metric = "mean-accuracy";
    res.value = mean_over_iterations(
        iterations, jobs, [&](size_t i) { return proto.run(derive_seed(seed, i)); });
    res.n_pairs = dataset.size();
    res.n_oov = count_oov(scored);
    res.hyperparams = scorer.hyperparams();
    res.seed = seed;
    return res;
}

EvalResult direction_bibless(const Scorer& scorer, const std::vector<DatasetRecord>& dataset,
                             uint64_t seed, int jobs, size_t iterations) {
    if (dataset.empty()) throw std::invalid_argument("empty dataset");
    auto label_index = [](const std::string& rel) {
        if (rel == "hyper") return 1;
        if (rel == "hypo") return -1;
        if (rel == "other") return 0;
        throw std::invalid_argument("bibless labels must be hyper/hypo/other, got '" + rel +
                                    "'");
    };
    for (const auto& rec : dataset) label_index(rec.relation);
    auto scored = score_pairs(scorer, dataset);

    IterationProtocol proto{
        scored,
        [](const ScoredPair& sp, double t) {
            const double related = std::max(sp.fwd, sp.rev);
            if (!(related >= t)) return 0;
            return sp.fwd > sp.rev ? 1 : -1;
        },
        [&](const ScoredPair& sp) { return label_index(sp.rec->relation); },
        [](const ScoredPair& sp) { return std::max(sp.fwd, sp.rev); },
        [&](const std::vector<size_t>& val) {
            bool related = false, other = false;
            for (size_t i : val)
                (scored[i].rec->relation == "other" ? other : related) = true;
            return related && other;
        }};

    EvalResult res;
    res.metric = "mean-accuracy";
    res.value = mean_over_iterations(
        iterations, jobs, [&](size_t i) { return proto.run(derive_seed(seed, i)); });
    res.n_pairs = dataset.size();
    res.n_oov = count_oov(scored);
    res.hyperparams = scorer.hyperparams();
    res.seed = seed;
    return res;
}

EvalResult graded_eval(const Scorer& scorer, const std::vector<DatasetRecord>& dataset) {
    std::vector<std::optional<double>> raw;
    std::vector<double> gold, known;
    for (const auto& rec : dataset) {
        if (!rec.gold_score) throw std::invalid_argument("graded dataset needs gold scores");
        auto s = scorer.score(rec.x, rec.y);
        raw.push_back(s);
        gold.push_back(*rec.gold_score);
        if (s) known.push_back(*s);
    }
    if (known.empty()) throw std::runtime_error("every pair is out of vocabulary");
    std::sort(known.begin(), known.end());
    const double median = known.size() % 2 == 1
                              ? known[known.size() / 2]
                              : 0.5 * (known[known.size() / 2 - 1] + known[known.size() / 2]);
    std::vector<double> pred;
    pred.reserve(raw.size());
    for (const auto& s : raw) pred.push_back(s.value_or(median));

    EvalResult res;
    res.metric = "spearman";
    res.value = spearman(pred, gold);
    res.n_pairs = dataset.size();
    res.n_oov = raw.size() - known.size();
    res.hyperparams = scorer.hyperparams();
    return res;
}

SweepResult sweep(const std::vector<size_t>& grid,
                  const std::function<double(size_t)>& evaluate) {
    if (grid.empty()) throw std::invalid_argument("empty sweep grid");
    auto sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    SweepResult res;
    double best = -std::numeric_limits<double>::infinity();
    for (size_t g : sorted) {
        const double v = evaluate(g);
        res.points.emplace_back(g, v);
        if (v > best) {
            best = v;
            res.best = g;
        }
    }
    return res;
}

const std::vector<size_t>& default_sweep_grid() {
    static const std::vector<size_t> grid = {5,  10, 15,  20,  25,  50, 100,
                                             150, 200, 250, 300, 500, 1000};
    return grid;
}

}  // namespace hearstkit
