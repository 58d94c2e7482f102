#ifndef HEARSTKIT_SCORERS_HPP
#define HEARSTKIT_SCORERS_HPP

#include <memory>
#include <string>

#include "hearstkit/dih.hpp"
#include "hearstkit/dist_space.hpp"
#include "hearstkit/eval.hpp"
#include "hearstkit/scorer.hpp"
#include "hearstkit/svd.hpp"

namespace hearstkit {

// Sparse count-model scorer: p(x,y) or ppmi(x,y) lookups.
class PairModelScorer : public Scorer {
public:
    explicit PairModelScorer(const PairModel& model) : model_(&model) {}
    std::optional<double> score(const std::string& x, const std::string& y) const override {
        return model_->score(x, y);
    }
    std::string name() const override {
        return model_->weighting == Weighting::Prob ? "p(x, y)" : "ppmi(x, y)";
    }

private:
    const PairModel* model_;
};

// Smoothed scorer over truncated SVD factors: sp(x,y) or spmi(x,y).
class SvdScorer : public Scorer {
public:
    explicit SvdScorer(const SvdModel& model) : model_(&model) {}
    std::optional<double> score(const std::string& x, const std::string& y) const override {
        return model_->score(x, y);
    }
    std::string name() const override {
        return model_->weighting == Weighting::Prob ? "sp(x, y)" : "spmi(x, y)";
    }
    std::string hyperparams() const override { return "r=" + std::to_string(model_->rank); }

private:
    const SvdModel* model_;
};

enum class DihMeasure { Cosine, WeedsPrec, Cl, InvCl, Slqs, SlqsCos };

class DihScorer : public Scorer {
public:
    DihScorer(const DistributionalSpace& space, DihMeasure measure, size_t n_contexts = 50)
        : space_(&space), measure_(measure), n_contexts_(n_contexts) {}

    std::optional<double> score(const std::string& x, const std::string& y) const override {
        auto xi = space_->index(x);
        auto yi = space_->index(y);
        if (!xi || !yi) return std::nullopt;
        SparseVec vx = SparseVec::row(space_->ppmi, *xi);
        SparseVec vy = SparseVec::row(space_->ppmi, *yi);
        switch (measure_) {
            case DihMeasure::Cosine: return cosine(vx, vy);
            case DihMeasure::WeedsPrec: return weeds_prec(vx, vy);
            case DihMeasure::Cl: return cl(vx, vy);
            case DihMeasure::InvCl: return inv_cl(vx, vy);
            case DihMeasure::Slqs: return slqs(*space_, x, y, n_contexts_);
            case DihMeasure::SlqsCos: return slqs_cos(*space_, x, y, n_contexts_);
        }
        return std::nullopt;
    }

    std::string name() const override {
        switch (measure_) {
            case DihMeasure::Cosine: return "cosine";
            case DihMeasure::WeedsPrec: return "weedsprec";
            case DihMeasure::Cl: return "cl";
            case DihMeasure::InvCl: return "invcl";
            case DihMeasure::Slqs: return "slqs";
            case DihMeasure::SlqsCos: return "slqs-cos";
        }
        return "?";
    }

    std::string hyperparams() const override {
        if (measure_ == DihMeasure::Slqs || measure_ == DihMeasure::SlqsCos)
            return "N=" + std::to_string(n_contexts_);
        return "";
    }

private:
    const DistributionalSpace* space_;
    DihMeasure measure_;
    size_t n_contexts_;
};

}  // namespace hearstkit

#endif
