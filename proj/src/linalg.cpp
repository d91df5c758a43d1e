#include "qaff/linalg.hpp"

#include <stdexcept>

namespace qaff {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.a_[i][i] = RatFunc(1);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: size mismatch");
    Mat m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.a_[i][j] = a_[i][j] + o.a_[i][j];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: size mismatch");
    Mat m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.a_[i][j] = a_[i][j] - o.a_[i][j];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: size mismatch in product");
    Mat m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const RatFunc& f = a_[i][k];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.a_[k][j].is_zero()) continue;
                m.a_[i][j] += f * o.a_[k][j];
            }
        }
    }
    return m;
}

Mat Mat::scaled(const RatFunc& f) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!a_[i][j].is_zero()) m.a_[i][j] = a_[i][j] * f;
    return m;
}

bool Mat::is_zero() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!a_[i][j].is_zero()) return false;
    return true;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
    Vec out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!a_[i][j].is_zero() && !v[j].is_zero()) out[i] += a_[i][j] * v[j];
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return m;
}

std::vector<Vec> kernel(const Mat& m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<Vec> a(rows, Vec(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    std::vector<long long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        RatFunc inv = a[rank][c].inverse();
        for (size_t j = c; j < cols; ++j)
            if (!a[rank][j].is_zero()) a[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            RatFunc f = a[r][c];
            for (size_t j = c; j < cols; ++j)
                if (!a[rank][j].is_zero()) a[r][j] -= f * a[rank][j];
        }
        pivot_of_col[c] = static_cast<long long>(rank);
        ++rank;
    }

    std::vector<Vec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(cols);
        v[c] = RatFunc(1);
        for (size_t cc = 0; cc < cols; ++cc) {
            if (pivot_of_col[cc] < 0) continue;
            const RatFunc& entry = a[static_cast<size_t>(pivot_of_col[cc])][c];
            if (!entry.is_zero()) v[cc] = -entry;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowSpace::insert(Vec v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const RatFunc& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        RatFunc f = c;
        for (size_t j = 0; j < v.size(); ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    RatFunc inv = v[p].inverse();
    for (size_t j = p; j < v.size(); ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const RatFunc& c = rows_[r][p];
        if (c.is_zero()) continue;
        RatFunc f = c;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

std::optional<Vec> RowSpace::coords(Vec v) const {
    Vec c(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        const RatFunc& f = v[pivots_[r]];
        if (f.is_zero()) continue;
        c[r] = f;
        for (size_t j = 0; j < v.size(); ++j)
            if (!rows_[r][j].is_zero()) v[j] -= c[r] * rows_[r][j];
    }
    for (const RatFunc& x : v)
        if (!x.is_zero()) return std::nullopt;
    return c;
}

} // namespace qaff
