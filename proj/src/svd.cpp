#include "hearstkit/svd.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hearstkit/rng.hpp"

namespace hearstkit {

double SvdModel::reconstruct(size_t row, size_t col) const {
    if (row >= u_rows) throw std::out_of_range("row index out of range");
    if (col >= v_rows) throw std::out_of_range("column index out of range");
    const double* ur = u.data() + row * rank;
    const double* vr = v.data() + col * rank;
    double acc = 0.0;
    for (size_t k = 0; k < rank; ++k) acc += ur[k] * singular_values[k] * vr[k];
    return acc;
}

std::optional<double> SvdModel::score(const std::string& x, const std::string& y) const {
    auto xi = vocab.index(x);
    auto yi = vocab.index(y);
    if (!xi || !yi) return std::nullopt;
    return reconstruct(*xi, *yi);
}

SvdModel SvdModel::truncated(size_t r) const {
    if (r > rank) throw std::invalid_argument("cannot truncate to a larger rank");
    SvdModel out;
    out.rank = r;
    out.u_rows = u_rows;
    out.v_rows = v_rows;
    out.weighting = weighting;
    out.vocab = vocab;
    out.singular_values.assign(singular_values.begin(), singular_values.begin() + r);
    out.u.resize(u_rows * r);
    out.v.resize(v_rows * r);
    for (size_t i = 0; i < u_rows; ++i)
        std::copy_n(u.data() + i * rank, r, out.u.data() + i * r);
    for (size_t i = 0; i < v_rows; ++i)
        std::copy_n(v.data() + i * rank, r, out.v.data() + i * r);
    return out;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Two-pass classical Gram-Schmidt against the first `ncols` columns of
// `basis`. Coefficients of the first pass are accumulated into `coeffs`
// when provided (they feed the projected matrix during restarts).
void reorthogonalize(const MatrixXd& basis, Eigen::Index ncols, VectorXd& vec,
                     VectorXd* coeffs = nullptr) {
    if (ncols == 0) return;
    auto block = basis.leftCols(ncols);
    VectorXd proj = block.transpose() * vec;
    vec.noalias() -= block * proj;
    if (coeffs) *coeffs = proj;
    VectorXd proj2 = block.transpose() * vec;
    vec.noalias() -= block * proj2;
    if (coeffs) *coeffs += proj2;
}

void fill_random_unit(VectorXd& vec, Xoshiro256pp& rng) {
    for (Eigen::Index i = 0; i < vec.size(); ++i) vec[i] = rng.uniform_sym();
    double n = vec.norm();
    if (n > 0) vec /= n;
}

SvdModel zero_model(size_t rows, size_t cols, size_t rank) {
    SvdModel model;
    model.rank = rank;
    model.u_rows = rows;
    model.v_rows = cols;
    model.singular_values.assign(rank, 0.0);
    model.u.assign(rows * rank, 0.0);
    model.v.assign(cols * rank, 0.0);
    for (size_t k = 0; k < rank; ++k) {
        model.u[k * rank + k] = 1.0;  // e_k rows: orthonormal columns
        model.v[k * rank + k] = 1.0;
    }
    return model;
}

}  // namespace

SvdModel truncated_svd(const CsrMatrix& matrix, size_t rank, uint64_t seed) {
    const size_t m = matrix.rows;
    const size_t n = matrix.cols;
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    if (rank > m || rank > n)
        throw std::invalid_argument("rank " + std::to_string(rank) +
                                    " exceeds matrix dimension " +
                                    std::to_string(std::min(m, n)));

    double fro = 0.0;
    for (double v : matrix.values) fro += v * v;
    fro = std::sqrt(fro);
    if (fro == 0.0) return zero_model(m, n, rank);

    const size_t dim = std::min(m, n);
    const size_t work = std::min(dim, std::max(2 * rank + 10, size_t{30}));
    const double breakdown_tol = 1e-14 * fro;
    const double sv_tol = 1e-10;     // relative change between restarts
    const size_t max_cycles = 1000;

    Xoshiro256pp rng(seed);
    MatrixXd U = MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(work));
    MatrixXd V = MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(work));
    MatrixXd B = MatrixXd::Zero(static_cast<Eigen::Index>(work), static_cast<Eigen::Index>(work));
    VectorXd f(static_cast<Eigen::Index>(n)), g(static_cast<Eigen::Index>(m));
    VectorXd v_next = VectorXd::Zero(static_cast<Eigen::Index>(n));

    auto apply = [&](const VectorXd& x, VectorXd& y) {
        matrix.multiply({x.data(), static_cast<size_t>(x.size())},
                        {y.data(), static_cast<size_t>(y.size())});
    };
    auto apply_t = [&](const VectorXd& x, VectorXd& y) {
        matrix.multiply_transpose({x.data(), static_cast<size_t>(x.size())},
                                  {y.data(), static_cast<size_t>(y.size())});
    };

    size_t start = 0;       // columns already in place when a cycle begins
    double beta_last = 0.0; // residual coupling after the last expansion
    VectorXd sigma_prev;
    double last_relchange = -1.0;
    double last_residual = -1.0;

    // Cold start.
    {
        VectorXd v0(static_cast<Eigen::Index>(n));
        fill_random_unit(v0, rng);
        apply(v0, g);
        double alpha = g.norm();
        while (alpha <= breakdown_tol) {
            fill_random_unit(v0, rng);
            apply(v0, g);
            alpha = g.norm();
        }
        V.col(0) = v0;
        U.col(0) = g / alpha;
        B(0, 0) = alpha;
        start = 1;
    }

    for (size_t cycle = 0; cycle < max_cycles; ++cycle) {
        // Expand the factorization to the full working subspace.
        for (size_t j = start - 1; j + 1 <= work; ++j) {
            apply_t(U.col(static_cast<Eigen::Index>(j)), f);
            f.noalias() -= B(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) *
                           V.col(static_cast<Eigen::Index>(j));
            reorthogonalize(V, static_cast<Eigen::Index>(j + 1), f);
            double beta = f.norm();
            if (j + 1 == work) {
                beta_last = beta;
                v_next = beta > breakdown_tol ? VectorXd(f / beta)
                                              : VectorXd::Zero(static_cast<Eigen::Index>(n));
                break;
            }
            if (beta <= breakdown_tol) {
                fill_random_unit(f, rng);
                reorthogonalize(V, static_cast<Eigen::Index>(j + 1), f);
                f.normalize();
                beta = 0.0;
            } else {
                f /= beta;
            }
            V.col(static_cast<Eigen::Index>(j + 1)) = f;
            B(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j + 1)) = beta;

            apply(V.col(static_cast<Eigen::Index>(j + 1)), g);
            g.noalias() -= beta * U.col(static_cast<Eigen::Index>(j));
            reorthogonalize(U, static_cast<Eigen::Index>(j + 1), g);
            double alpha = g.norm();
            if (alpha <= breakdown_tol) {
                fill_random_unit(g, rng);
                reorthogonalize(U, static_cast<Eigen::Index>(j + 1), g);
                g.normalize();
                alpha = 0.0;
            } else {
                g /= alpha;
            }
            U.col(static_cast<Eigen::Index>(j + 1)) = g;
            B(static_cast<Eigen::Index>(j + 1), static_cast<Eigen::Index>(j + 1)) = alpha;
        }

        Eigen::JacobiSVD<MatrixXd> svd(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const VectorXd& sigma = svd.singularValues();
        const MatrixXd& P = svd.matrixU();
        const MatrixXd& Q = svd.matrixV();

        double max_resid = 0.0;
        for (size_t i = 0; i < rank; ++i) {
            max_resid = std::max(
                max_resid, beta_last * std::abs(P(static_cast<Eigen::Index>(work - 1),
                                                  static_cast<Eigen::Index>(i))));
        }
        double relchange = std::numeric_limits<double>::infinity();
        if (sigma_prev.size() >= static_cast<Eigen::Index>(rank)) {
            relchange = 0.0;
            for (size_t i = 0; i < rank; ++i) {
                const double cur = sigma[static_cast<Eigen::Index>(i)];
                const double prev = sigma_prev[static_cast<Eigen::Index>(i)];
                const double denom = std::max(cur, 1e-12 * sigma[0] + 1e-300);
                relchange = std::max(relchange, std::abs(cur - prev) / denom);
            }
        }
        last_relchange = relchange;
        last_residual = max_resid;

        const bool converged =
            max_resid <= 1e-12 * std::max(sigma[0], fro) || relchange <= sv_tol;
        if (converged) {
            SvdModel model;
            model.rank = rank;
            model.u_rows = m;
            model.v_rows = n;
            model.singular_values.resize(rank);
            model.u.assign(m * rank, 0.0);
            model.v.assign(n * rank, 0.0);
            MatrixXd Uout = U * P.leftCols(static_cast<Eigen::Index>(rank));
            MatrixXd Vout = V * Q.leftCols(static_cast<Eigen::Index>(rank));
            for (size_t k = 0; k < rank; ++k) {
                auto col = Uout.col(static_cast<Eigen::Index>(k));
                Eigen::Index arg = 0;
                col.cwiseAbs().maxCoeff(&arg);
                if (col[arg] < 0.0) {
                    Uout.col(static_cast<Eigen::Index>(k)) = -col;
                    Vout.col(static_cast<Eigen::Index>(k)) =
                        -Vout.col(static_cast<Eigen::Index>(k));
                }
                model.singular_values[k] = sigma[static_cast<Eigen::Index>(k)];
            }
            for (size_t i = 0; i < m; ++i)
                for (size_t k = 0; k < rank; ++k)
                    model.u[i * rank + k] =
                        Uout(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
            for (size_t i = 0; i < n; ++i)
                for (size_t k = 0; k < rank; ++k)
                    model.v[i * rank + k] =
                        Vout(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
            return model;
        }

        // Thick restart: keep the leading Ritz triplets plus the coupling
        // vector, then continue the expansion from there.
        sigma_prev = sigma;
        const size_t kept = std::min(rank + 5, work - 3 > 0 ? work - 3 : 1);
        MatrixXd Ukept = U * P.leftCols(static_cast<Eigen::Index>(kept));
        MatrixXd Vkept = V * Q.leftCols(static_cast<Eigen::Index>(kept));
        U.leftCols(static_cast<Eigen::Index>(kept)) = Ukept;
        V.leftCols(static_cast<Eigen::Index>(kept)) = Vkept;
        V.col(static_cast<Eigen::Index>(kept)) = v_next;
        B.setZero();
        for (size_t i = 0; i < kept; ++i) {
            B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
                sigma[static_cast<Eigen::Index>(i)];
        }
        apply(V.col(static_cast<Eigen::Index>(kept)), g);
        VectorXd coeffs;
        reorthogonalize(U, static_cast<Eigen::Index>(kept), g, &coeffs);
        for (size_t i = 0; i < kept; ++i) {
            B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(kept)) =
                coeffs[static_cast<Eigen::Index>(i)];
        }
        double alpha = g.norm();
        if (alpha <= breakdown_tol) {
            fill_random_unit(g, rng);
            reorthogonalize(U, static_cast<Eigen::Index>(kept), g);
            g.normalize();
            alpha = 0.0;
        } else {
            g /= alpha;
        }
        U.col(static_cast<Eigen::Index>(kept)) = g;
        B(static_cast<Eigen::Index>(kept), static_cast<Eigen::Index>(kept)) = alpha;
        start = kept + 1;
    }

    std::ostringstream msg;
    msg << "truncated SVD failed to converge after " << max_cycles
        << " restarts: residual " << last_residual << ", relative change " << last_relchange;
    throw std::runtime_error(msg.str());
}

}  // namespace hearstkit
