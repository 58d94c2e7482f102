#include "hearstkit/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hearstkit {

double CsrMatrix::at(size_t r, size_t c) const {
    auto cols = row_indices(r);
    auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<uint32_t>(c));
    if (it == cols.end() || *it != c) return 0.0;
    return values[row_ptr[r] + static_cast<size_t>(it - cols.begin())];
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    assert(x.size() == cols && y.size() == rows);
    for (size_t r = 0; r < rows; ++r) {
        double acc = 0.0;
        for (uint64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            acc += values[k] * x[col_idx[k]];
        }
        y[r] = acc;
    }
}

void CsrMatrix::multiply_transpose(std::span<const double> x, std::span<double> y) const {
    assert(x.size() == rows && y.size() == cols);
    std::fill(y.begin(), y.end(), 0.0);
    for (size_t r = 0; r < rows; ++r) {
        const double xr = x[r];
        if (xr == 0.0) continue;
        for (uint64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            y[col_idx[k]] += values[k] * xr;
        }
    }
}

CsrBuilder::CsrBuilder(size_t rows, size_t cols) {
    m_.rows = rows;
    m_.cols = cols;
    m_.row_ptr.assign(rows + 1, 0);
}

void CsrBuilder::push(size_t row, size_t col, double value) {
    if (done_) throw std::logic_error("builder already finished");
    if (row >= m_.rows || col >= m_.cols) throw std::out_of_range("entry outside matrix");
    const bool row_open = m_.row_ptr[current_row_ + 1] > m_.row_ptr[current_row_];
    if (row < current_row_ ||
        (row == current_row_ && row_open && col <= m_.col_idx.back()))
        throw std::logic_error("entries must arrive in (row, col) order");
    while (current_row_ < row) {
        ++current_row_;
        m_.row_ptr[current_row_] = m_.col_idx.size();
    }
    m_.col_idx.push_back(static_cast<uint32_t>(col));
    m_.values.push_back(value);
    m_.row_ptr[row + 1] = m_.col_idx.size();
}

CsrMatrix CsrBuilder::finish() {
    for (size_t r = current_row_ + 1; r <= m_.rows; ++r) m_.row_ptr[r] = m_.col_idx.size();
    done_ = true;
    return std::move(m_);
}

}  // namespace hearstkit
