// Test-side reference implementations. Everything here is deliberately
// brute-force and independent of the library code paths it checks.
#ifndef HEARSTKIT_TESTS_ORACLES_HPP
#define HEARSTKIT_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hearstkit/dataset.hpp"
#include "hearstkit/eval.hpp"
#include "hearstkit/rng.hpp"
#include "hearstkit/sparse.hpp"

namespace oracles {

inline Eigen::MatrixXd to_dense(const hearstkit::CsrMatrix& m) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows),
                                              static_cast<Eigen::Index>(m.cols));
    for (size_t r = 0; r < m.rows; ++r) {
        for (uint64_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
            d(static_cast<Eigen::Index>(r), m.col_idx[k]) = m.values[k];
        }
    }
    return d;
}

// Dense SVD oracle (Jacobi).
struct DenseSvd {
    Eigen::VectorXd sigma;
    Eigen::MatrixXd u;
    Eigen::MatrixXd v;
};

inline DenseSvd dense_svd(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

// Best rank-r reconstruction from the dense oracle.
inline Eigen::MatrixXd dense_truncation(const Eigen::MatrixXd& m, size_t r) {
    DenseSvd s = dense_svd(m);
    const auto rr = static_cast<Eigen::Index>(r);
    return s.u.leftCols(rr) * s.sigma.head(rr).asDiagonal() * s.v.leftCols(rr).transpose();
}

// PPMI by direct evaluation over a raw pair->count map.
struct BrutePairTable {
    std::map<std::pair<std::string, std::string>, uint64_t> counts;

    double total() const {
        double w = 0;
        for (const auto& [k, c] : counts) w += static_cast<double>(c);
        return w;
    }
    double prob(const std::string& x, const std::string& y) const {
        auto it = counts.find({x, y});
        return it == counts.end() ? 0.0 : static_cast<double>(it->second) / total();
    }
    double p_hypo(const std::string& x) const {
        double s = 0;
        for (const auto& [k, c] : counts)
            if (k.first == x) s += static_cast<double>(c);
        return s / total();
    }
    double p_hyper(const std::string& y) const {
        double s = 0;
        for (const auto& [k, c] : counts)
            if (k.second == y) s += static_cast<double>(c);
        return s / total();
    }
    double ppmi(const std::string& x, const std::string& y) const {
        const double p = prob(x, y);
        if (p == 0.0) return 0.0;
        return std::max(0.0, std::log(p / (p_hypo(x) * p_hyper(y))));
    }
};

// DIH measures on dense non-negative vectors.
inline double cosine(const std::vector<double>& x, const std::vector<double>& y) {
    double dot = 0, nx = 0, ny = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * y[i];
        nx += x[i] * x[i];
        ny += y[i] * y[i];
    }
    return dot / (std::sqrt(nx) * std::sqrt(ny));
}

inline double weeds_prec(const std::vector<double>& x, const std::vector<double>& y) {
    double num = 0, den = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (y[i] > 0) num += x[i];
        den += x[i];
    }
    return num / den;
}

inline double cl(const std::vector<double>& x, const std::vector<double>& y) {
    double num = 0, den = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        num += std::min(x[i], y[i]);
        den += x[i];
    }
    return num / den;
}

inline double inv_cl(const std::vector<double>& x, const std::vector<double>& y) {
    return std::sqrt(cl(x, y) * (1.0 - cl(y, x)));
}

inline double shannon_entropy_bits(const std::vector<double>& counts) {
    double total = 0;
    for (double c : counts) total += c;
    double h = 0;
    for (double c : counts) {
        if (c > 0) {
            const double p = c / total;
            h -= p * std::log2(p);
        }
    }
    return h;
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.size() % 2 == 1 ? v[v.size() / 2]
                             : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

// Spearman straight from the definition: rank with average ties, Pearson.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    auto rank = [](const std::vector<double>& v) {
        std::vector<double> r(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            double less = 0, equal = 0;
            for (size_t j = 0; j < v.size(); ++j) {
                if (v[j] < v[i]) ++less;
                if (v[j] == v[i]) ++equal;
            }
            r[i] = less + 0.5 * (equal + 1);
        }
        return r;
    };
    auto ra = rank(a), rb = rank(b);
    const double n = static_cast<double>(a.size());
    double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double cov = 0, va = 0, vb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    return cov / std::sqrt(va * vb);
}

// Reference reimplementation of the 1000-iteration direction protocols,
// written as plain loops. Shares only the seeded RNG primitives, which are
// part of the protocol definition.
struct RefDirectionInput {
    std::vector<double> fwd;  // -inf when OOV
    std::vector<double> rev;
    std::vector<int> label;  // wbless: 1 hyper / 0 other; bibless: 1/-1/0
};

inline double ref_threshold_fit(const std::vector<double>& keys,
                                const std::vector<size_t>& val,
                                const std::function<int(size_t, double)>& predict,
                                const std::vector<int>& label) {
    std::vector<double> finite;
    for (size_t i : val)
        if (std::isfinite(keys[i])) finite.push_back(keys[i]);
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    std::vector<double> cands;
    cands.push_back(-std::numeric_limits<double>::infinity());
    for (size_t i = 0; i + 1 < finite.size(); ++i)
        cands.push_back(0.5 * (finite[i] + finite[i + 1]));
    cands.push_back(std::numeric_limits<double>::infinity());
    double best_t = cands.front();
    double best_acc = -1;
    for (double t : cands) {
        double acc = 0;
        for (size_t i : val) acc += predict(i, t) == label[i] ? 1 : 0;
        acc /= static_cast<double>(val.size());
        if (acc > best_acc) {
            best_acc = acc;
            best_t = t;
        }
    }
    return best_t;
}

inline double ref_iterated_direction(const RefDirectionInput& in, uint64_t seed,
                                     size_t iterations, bool two_stage) {
    const size_t n = in.fwd.size();
    auto predict = [&](size_t i, double t) -> int {
        if (!two_stage) return (in.fwd[i] >= t && in.fwd[i] > in.rev[i]) ? 1 : 0;
        const double related = std::max(in.fwd[i], in.rev[i]);
        if (!(related >= t)) return 0;
        return in.fwd[i] > in.rev[i] ? 1 : -1;
    };
    auto key = [&](size_t i) { return two_stage ? std::max(in.fwd[i], in.rev[i]) : in.fwd[i]; };
    auto is_val_ok = [&](const std::vector<size_t>& val) {
        bool a = false, b = false;
        for (size_t i : val) {
            const bool positive = two_stage ? in.label[i] != 0 : in.label[i] == 1;
            (positive ? a : b) = true;
        }
        return a && b;
    };

    const size_t n_val =
        std::max<size_t>(2, static_cast<size_t>(std::llround(0.02 * static_cast<double>(n))));
    std::vector<double> keys(n);
    for (size_t i = 0; i < n; ++i) keys[i] = key(i);

    double sum = 0;
    for (size_t iter = 0; iter < iterations; ++iter) {
        hearstkit::Xoshiro256pp rng(hearstkit::derive_seed(seed, iter));
        std::vector<size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<size_t> val;
        bool ok = false;
        for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
            hearstkit::shuffle(order, rng);
            val.assign(order.begin(), order.begin() + static_cast<long>(n_val));
            ok = is_val_ok(val);
        }
        const double t = ref_threshold_fit(keys, val, predict, in.label);
        double good = 0, total = 0;
        for (size_t k = n_val; k < n; ++k) {
            good += predict(order[k], t) == in.label[order[k]] ? 1 : 0;
            total += 1;
        }
        sum += good / total;
    }
    return sum / static_cast<double>(iterations);
}

}  // namespace oracles

#endif
