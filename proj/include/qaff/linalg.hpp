#pragma once

#include <optional>
#include <vector>

#include "qaff/polyq.hpp"

namespace qaff {

using Vec = std::vector<RatFunc>;

/// Dense matrix over Q(q).  Sizes stay small (dimension <= 64), so all
/// operations are straightforward exact arithmetic with zero-skipping.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, Vec(cols)) {}

    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    RatFunc& at(size_t i, size_t j) { return a_[i][j]; }
    const RatFunc& at(size_t i, size_t j) const { return a_[i][j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const RatFunc& f) const;
    bool is_zero() const;

    Vec apply(const Vec& v) const;   // matrix * column vector

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Vec> a_;
};

/// Kronecker product acting on stacked tensor indices (row-major:
/// index = i1 * dim2 + i2).
Mat kron(const Mat& a, const Mat& b);

/// Kernel of a matrix: basis of the right null space.
std::vector<Vec> kernel(const Mat& m);

/// Incrementally maintained reduced row space, used both for submodule
/// closures and for expressing vectors in a computed basis.
class RowSpace {
public:
    /// Reduces v against the stored rows; if a nonzero remainder is left,
    /// normalizes it, back-eliminates and stores it.  Returns whether the
    /// rank grew.
    bool insert(Vec v);

    /// Coordinates of v in the stored basis rows, or nullopt when v is
    /// outside the span.
    std::optional<Vec> coords(Vec v) const;

    size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    std::vector<Vec> rows_;      // reduced, pivot entry 1
    std::vector<size_t> pivots_;
};

} // namespace qaff
