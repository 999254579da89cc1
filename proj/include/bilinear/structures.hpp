#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilinear/counted.hpp"

namespace bilinear {

enum class Kind
{
    Circulant,
    FCirculant,
    Toeplitz,
    Hankel,
    UpperTriangularToeplitz,
    ToeplitzPlusHankel,
    Symmetric,
    SkewSymmetric,
    Sparse,
    Multilevel,
};

//! Canonical lower_snake_case name ("f_circulant", "toeplitz_plus_hankel", ...).
std::string_view kind_name(Kind kind);
//! Accepts canonical names plus the short aliases "tph", "triangular_toeplitz".
Kind parse_kind(std::string_view name);

//! Set of (row, column) positions of an rows x cols matrix, kept sorted.
class SparsityPattern
{
  public:
    using Entry = std::pair<std::size_t, std::size_t>;

    SparsityPattern() = default;
    //! Throws MalformedStructure on duplicates or out-of-range entries.
    SparsityPattern(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    std::vector<Entry> const& entries() const { return entries_; }

    friend bool operator==(SparsityPattern const&, SparsityPattern const&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> entries_;
};

/*!
 * Structural description of a square structured matrix, without its data.
 *
 * f is used by FCirculant, omega by Sparse, and levels by Multilevel (outer
 * level first). For Multilevel, n is the product of the level orders.
 */
struct Shape
{
    Kind kind = Kind::Circulant;
    std::size_t n = 1;
    Complex f{1.0, 0.0};
    SparsityPattern omega;
    std::vector<Shape> levels;

    friend bool operator==(Shape const&, Shape const&) = default;
};

Shape make_shape(Kind kind, std::size_t n);
Shape make_f_circulant_shape(std::size_t n, Complex f);
Shape make_sparse_shape(SparsityPattern omega);
//! Validates every level and multiplies the orders.
Shape make_multilevel_shape(std::vector<Shape> levels);

//! Number of data parameters a shape takes (see the canonical orders below).
std::size_t param_count(Shape const& shape);

/*!
 * Structured matrix: a shape plus its data parameters.
 *
 * Canonical data orders:
 *  - Circulant, FCirculant: first row, left to right.
 *  - Toeplitz: diagonals t_{-(n-1)} ... t_{n-1} with entry (i, j) = t_{j-i}.
 *  - Hankel: anti-diagonals x_0 ... x_{2n-2} with entry (i, j) = x_{i+j}.
 *  - UpperTriangularToeplitz: a_0 ... a_{n-1} with entry (i, j) = a_{j-i}, j >= i.
 *  - ToeplitzPlusHankel: the 2n-1 Toeplitz diagonals, then the 2n-1 Hankel
 *    anti-diagonals.
 *  - Symmetric: row-major upper triangle including the diagonal.
 *  - SkewSymmetric: row-major strict upper triangle.
 *  - Sparse: values in the sorted order of the pattern.
 *  - Multilevel: lexicographic over levels, outermost varying slowest.
 */
struct StructuredMatrix
{
    Shape shape;
    TrackedVector data;

    friend bool operator==(StructuredMatrix const&, StructuredMatrix const&) = default;
};

//! Throws MalformedStructure when the data length does not match the shape.
void validate(StructuredMatrix const& m);

//! Dense row-major matrix of tracked scalars.
class TrackedMatrix
{
  public:
    TrackedMatrix() = default;
    TrackedMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    TrackedScalar& operator()(std::size_t i, std::size_t j)
    {
        return entries_[i * cols_ + j];
    }
    TrackedScalar const& operator()(std::size_t i, std::size_t j) const
    {
        return entries_[i * cols_ + j];
    }
    TrackedVector const& entries() const { return entries_; }

    static TrackedMatrix from_values(std::size_t rows,
                                     std::size_t cols,
                                     std::vector<Complex> const& row_major,
                                     ScalarKind kind = ScalarKind::Variable);
    std::vector<Complex> values() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    TrackedVector entries_;
};

//! Dense expansion; entries not determined by data are Constant zero.
TrackedMatrix densify(StructuredMatrix const& m);

//! Entrywise product skipping Constant-zero entries.
TrackedVector naive_matvec(TrackedMatrix const& a, TrackedSpan x, CountContext& ctx);
TrackedVector naive_matvec(StructuredMatrix const& m, TrackedSpan x, CountContext& ctx);
//! Plain dense product, every entry multiplied.
TrackedMatrix naive_matmul(TrackedMatrix const& a, TrackedMatrix const& b, CountContext& ctx);

/*!
 * Spanning set of the structure's linear space: element p has data parameter
 * p equal to Constant 1 and all other parameters Constant 0.
 *
 * For every kind except ToeplitzPlusHankel the elements are a basis. For
 * n >= 2 the Toeplitz-plus-Hankel parameterization has two redundant
 * directions (the all-ones matrix and the checkerboard (-1)^(i+j) are both
 * Toeplitz and Hankel), so its 4n - 2 elements span a space of dimension
 * 4n - 4.
 */
std::vector<StructuredMatrix> basis(Shape const& shape);

//! Dimension of the structure's linear space.
std::size_t structure_dimension(Shape const& shape);

// Index helpers for the canonical orders.
std::size_t symmetric_index(std::size_t n, std::size_t i, std::size_t j);
std::size_t skew_index(std::size_t n, std::size_t i, std::size_t j);

}  // namespace bilinear
