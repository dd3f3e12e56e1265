#ifndef COAMOEBA_LINALG_HPP
#define COAMOEBA_LINALG_HPP

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "coamoeba/rational.hpp"

namespace coamoeba {

/**
 * Dense-or-sparse matrix over the rationals.
 *
 * Storage switches to a coordinate map when fewer than a quarter of the
 * entries are nonzero; all arithmetic is exact.  Matrices act on column
 * vectors, so kernels live in Q^cols and images are spanned by columns.
 */
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_triplets(
        std::size_t rows, std::size_t cols,
        const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& v);

    bool sparse_storage() const { return sparse_; }
    std::size_t nonzero_count() const;

    /// Repacks into sparse storage when density drops below 25%.
    void compact();

    RationalMatrix multiply(const RationalMatrix& rhs) const;
    bool is_zero() const;

    std::vector<std::vector<Rational>> to_dense() const;

private:
    std::size_t rows_, cols_;
    bool sparse_ = false;
    std::vector<Rational> dense_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

/// Reduced row echelon form; pivot column indices returned through `pivots`.
std::vector<std::vector<Rational>> rref(const std::vector<std::vector<Rational>>& rows,
                                        std::vector<std::size_t>* pivots = nullptr);

/// Basis of ker(m), one vector per free column, in column order.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/**
 * Canonical representatives of a subquotient ker(d_out)/im(d_in).
 *
 * Representatives are reduced against the echelon form of the image and
 * re-echelonized, so equal subquotients produce identical vectors.
 */
struct SubquotientBasis {
    std::size_t ambient_dim = 0;
    int degree = 0;
    std::vector<std::vector<Rational>> representatives;

    std::size_t dim() const { return representatives.size(); }
};

/// Throws CompositionNotZero unless d_out * d_in == 0.
SubquotientBasis cohomology(const RationalMatrix& d_in, const RationalMatrix& d_out,
                            int degree = 0);

/// Reduces `v` against echelonized `rows` (pivot columns from rref).
std::vector<Rational> reduce_against(std::vector<Rational> v,
                                     const std::vector<std::vector<Rational>>& rows,
                                     const std::vector<std::size_t>& pivots);

}  // namespace coamoeba

#endif
