#ifndef HEARSTKIT_SPARSE_HPP
#define HEARSTKIT_SPARSE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hearstkit {

// Compressed sparse row matrix, entries sorted by (row, col).
struct CsrMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint64_t> row_ptr;  // size rows + 1
    std::vector<uint32_t> col_idx;
    std::vector<double> values;

    size_t nnz() const { return values.size(); }

    std::span<const uint32_t> row_indices(size_t r) const {
        return {col_idx.data() + row_ptr[r], col_idx.data() + row_ptr[r + 1]};
    }
    std::span<const double> row_values(size_t r) const {
        return {values.data() + row_ptr[r], values.data() + row_ptr[r + 1]};
    }

    // 0.0 for entries not stored.
    double at(size_t r, size_t c) const;

    void multiply(std::span<const double> x, std::span<double> y) const;            // y = A x
    void multiply_transpose(std::span<const double> x, std::span<double> y) const;  // y = A' x
};

// Assembles a CsrMatrix from entries pushed in strictly increasing
// (row, col) order.
class CsrBuilder {
public:
    CsrBuilder(size_t rows, size_t cols);
    void push(size_t row, size_t col, double value);
    CsrMatrix finish();

private:
    CsrMatrix m_;
    size_t current_row_ = 0;
    bool done_ = false;
};

}  // namespace hearstkit

#endif
