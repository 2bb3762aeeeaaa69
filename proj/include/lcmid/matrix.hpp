#pragma once

#include "lcmid/errors.hpp"
#include "lcmid/rational.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace lcmid {

/// Dense row-major matrix. Element type need not be default-constructible.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Copy with one row and one column removed.
    Matrix without(std::size_t row, std::size_t col) const {
        if (row >= rows_ || col >= cols_) {
            throw StructuralError("minor index out of range");
        }
        Matrix out(rows_ - 1, cols_ - 1, data_.front());
        for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
            if (r == row) continue;
            for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
                if (c == col) continue;
                out(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return out;
    }

    /// Sub-matrix on the given row and column index lists.
    Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Matrix out(rows.size(), cols.size(), data_.front());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
        return out;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> mapped;
        mapped.reserve(data_.size());
        for (const auto& x : data_) mapped.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(mapped));
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

/// Exact determinant over a commutative ring by Laplace expansion along rows
/// 0, 1, ..., with minors memoised on their column set. Zero entries are
/// skipped, so the cost tracks the number of non-vanishing partial
/// permutations rather than n!. Requires n <= 62.
///
/// Ring needs copy, +=, -=, binary * and a free is_zero(const Ring&).
template <class Ring>
Ring laplace_determinant(const Matrix<Ring>& m, const Ring& one) {
    const std::size_t n = m.rows();
    if (n != m.cols()) {
        throw StructuralError("determinant of a non-square matrix");
    }
    if (n > 62) {
        throw LimitExceeded("laplace_determinant supports at most 62 rows");
    }
    Ring zero = one;
    zero -= one;
    if (n == 0) return one;

    std::unordered_map<std::uint64_t, Ring> memo;
    std::function<const Ring&(std::uint64_t)> minor = [&](std::uint64_t mask) -> const Ring& {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        Ring acc = zero;
        if (row == n) {
            acc = one;
        } else {
            bool negative = false;
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint64_t bit = std::uint64_t{1} << c;
                if (!(mask & bit)) continue;
                const Ring& entry = m(row, c);
                if (!is_zero(entry)) {
                    const Ring& sub = minor(mask & ~bit);
                    if (!is_zero(sub)) {
                        if (negative) {
                            acc -= entry * sub;
                        } else {
                            acc += entry * sub;
                        }
                    }
                }
                negative = !negative;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return minor(full);
}

}  // namespace lcmid
