#include "coamoeba/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "coamoeba/errors.hpp"

namespace coamoeba {

namespace {
const Rational kZero = Rational(0);
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), sparse_(false), dense_(rows * cols, Rational(0))
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Rational(1));
    return m;
}

RationalMatrix RationalMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& entries)
{
    RationalMatrix m(rows, cols);
    for (const auto& [r, c, v] : entries)
        m.set(r, c, m.at(r, c) + v);
    m.compact();
    return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("RationalMatrix::at");
    if (sparse_) {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? kZero : it->second;
    }
    return dense_[r * cols_ + c];
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v)
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("RationalMatrix::set");
    if (sparse_) {
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    } else {
        dense_[r * cols_ + c] = v;
    }
}

std::size_t RationalMatrix::nonzero_count() const
{
    if (sparse_)
        return entries_.size();
    std::size_t n = 0;
    for (const auto& v : dense_)
        if (v != 0)
            ++n;
    return n;
}

void RationalMatrix::compact()
{
    if (sparse_ || rows_ * cols_ == 0)
        return;
    std::size_t nnz = nonzero_count();
    if (4 * nnz < rows_ * cols_) {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (dense_[r * cols_ + c] != 0)
                    entries_[{r, c}] = dense_[r * cols_ + c];
        dense_.clear();
        sparse_ = true;
    }
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("RationalMatrix::multiply: shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(k, j);
                if (b != 0)
                    out.set(i, j, out.at(i, j) + a * b);
            }
        }
    return out;
}

bool RationalMatrix::is_zero() const
{
    return nonzero_count() == 0;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const
{
    std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r][c] = at(r, c);
    return out;
}

std::size_t rank(const RationalMatrix& m)
{
    std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;

    // Clear denominators row by row, then run the fraction-free recurrence.
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Int lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const Int d = denominator(m.at(r, c));
            lcm = lcm / gcd(lcm, d) * d;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& q = m.at(r, c);
            a[r][c] = numerator(q) * (lcm / denominator(q));
        }
    }

    std::size_t rk = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pivot = rk;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rk], a[pivot]);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rk][col] * a[i][j] - a[i][col] * a[rk][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

std::vector<std::vector<Rational>> rref(const std::vector<std::vector<Rational>>& rows_in,
                                        std::vector<std::size_t>* pivots)
{
    std::vector<std::vector<Rational>> a = rows_in;
    if (pivots)
        pivots->clear();
    if (a.empty())
        return a;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[r], a[pivot]);
        const Rational inv = a[r][col];
        for (std::size_t j = col; j < cols; ++j)
            a[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0)
                continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        if (pivots)
            pivots->push_back(col);
        ++r;
    }
    a.resize(r);  // drop zero rows
    return a;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m)
{
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    auto r = rref(m.to_dense(), &pivots);

    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> reduce_against(std::vector<Rational> v,
                                     const std::vector<std::vector<Rational>>& rows,
                                     const std::vector<std::size_t>& pivots)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational f = v[pivots[i]];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] -= f * rows[i][j];
    }
    return v;
}

SubquotientBasis cohomology(const RationalMatrix& d_in, const RationalMatrix& d_out, int degree)
{
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("cohomology: d_in lands in a space of different dimension");
    if (d_in.cols() > 0 && d_out.rows() > 0 && !d_out.multiply(d_in).is_zero())
        throw CompositionNotZero("cohomology: d_out * d_in != 0");

    const std::size_t ambient = d_in.rows();
    SubquotientBasis out;
    out.ambient_dim = ambient;
    out.degree = degree;

    std::vector<std::vector<Rational>> image_rows;
    for (std::size_t c = 0; c < d_in.cols(); ++c) {
        std::vector<Rational> col(ambient);
        for (std::size_t r = 0; r < ambient; ++r)
            col[r] = d_in.at(r, c);
        image_rows.push_back(std::move(col));
    }
    std::vector<std::size_t> image_pivots;
    auto image = rref(image_rows, &image_pivots);

    std::vector<std::vector<Rational>> reduced;
    for (auto& k : kernel_basis(d_out)) {
        auto v = reduce_against(std::move(k), image, image_pivots);
        if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; }))
            reduced.push_back(std::move(v));
    }
    out.representatives = rref(reduced);
    return out;
}

}  // namespace coamoeba
