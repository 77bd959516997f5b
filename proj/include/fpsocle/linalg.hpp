#pragma once

#include <cstdint>
#include <vector>

#include "fp.hpp"

namespace fpsocle {

// Dense matrix over F_p, row-major. Sized for degreewise computations on
// artinian quotients, where dimensions stay small.
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Gaussian elimination; leaves the matrix in row echelon form.
    std::size_t row_reduce() {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
            std::uint32_t inv = fp_inv(at(rank, col), p_);
            for (std::size_t c = col; c < cols_; ++c) at(rank, c) = fp_mul(at(rank, c), inv, p_);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || at(r, col) == 0) continue;
                std::uint32_t f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) = fp_sub(at(r, c), fp_mul(f, at(rank, c), p_), p_);
            }
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const {
        FpMatrix copy = *this;
        return copy.row_reduce();
    }

    // Dimension of {v : Av = 0} with columns as the domain.
    std::size_t kernel_dim() const { return cols_ - rank(); }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

} // namespace fpsocle
