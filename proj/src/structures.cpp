#include "bilinear/structures.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bilinear/errors.hpp"

namespace bilinear {

namespace {

struct KindName
{
    Kind kind;
    std::string_view name;
};

constexpr std::array<KindName, 10> kind_names{{
    {Kind::Circulant, "circulant"},
    {Kind::FCirculant, "f_circulant"},
    {Kind::Toeplitz, "toeplitz"},
    {Kind::Hankel, "hankel"},
    {Kind::UpperTriangularToeplitz, "upper_triangular_toeplitz"},
    {Kind::ToeplitzPlusHankel, "toeplitz_plus_hankel"},
    {Kind::Symmetric, "symmetric"},
    {Kind::SkewSymmetric, "skew_symmetric"},
    {Kind::Sparse, "sparse"},
    {Kind::Multilevel, "multilevel"},
}};

}  // namespace

std::string_view kind_name(Kind kind)
{
    for (auto const& entry : kind_names)
    {
        if (entry.kind == kind)
        {
            return entry.name;
        }
    }
    return "unknown";
}

Kind parse_kind(std::string_view name)
{
    for (auto const& entry : kind_names)
    {
        if (entry.name == name)
        {
            return entry.kind;
        }
    }
    if (name == "tph")
    {
        return Kind::ToeplitzPlusHankel;
    }
    if (name == "triangular_toeplitz" || name == "utt")
    {
        return Kind::UpperTriangularToeplitz;
    }
    if (name == "skew_circulant")
    {
        return Kind::FCirculant;
    }
    throw UnsupportedKind("unknown structure kind '" + std::string(name) + "'");
}

SparsityPattern::SparsityPattern(std::size_t rows,
                                 std::size_t cols,
                                 std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    for (auto const& [i, j] : entries_)
    {
        if (i >= rows_ || j >= cols_)
        {
            std::ostringstream msg;
            msg << "sparsity entry (" << i << ", " << j << ") outside a "
                << rows_ << "x" << cols_ << " matrix";
            throw MalformedStructure(msg.str());
        }
    }
    std::sort(entries_.begin(), entries_.end());
    if (std::adjacent_find(entries_.begin(), entries_.end()) != entries_.end())
    {
        throw MalformedStructure("duplicate entry in sparsity pattern");
    }
}

Shape make_shape(Kind kind, std::size_t n)
{
    if (kind == Kind::Multilevel || kind == Kind::Sparse)
    {
        throw MalformedStructure(std::string(kind_name(kind))
                                 + " shapes need their own constructor");
    }
    if (n == 0)
    {
        throw MalformedStructure("matrix order must be positive");
    }
    Shape shape;
    shape.kind = kind;
    shape.n = n;
    if (kind == Kind::FCirculant)
    {
        shape.f = Complex{-1.0, 0.0};
    }
    return shape;
}

Shape make_f_circulant_shape(std::size_t n, Complex f)
{
    if (f == Complex{})
    {
        throw MalformedStructure("f-circulant needs f != 0");
    }
    Shape shape = make_shape(Kind::FCirculant, n);
    shape.f = f;
    return shape;
}

Shape make_sparse_shape(SparsityPattern omega)
{
    if (omega.rows() != omega.cols() || omega.rows() == 0)
    {
        throw MalformedStructure("sparse structured matrices are square with n >= 1");
    }
    Shape shape;
    shape.kind = Kind::Sparse;
    shape.n = omega.rows();
    shape.omega = std::move(omega);
    return shape;
}

Shape make_multilevel_shape(std::vector<Shape> levels)
{
    if (levels.empty())
    {
        throw MalformedStructure("multilevel shape needs at least one level");
    }
    std::size_t n = 1;
    for (auto const& level : levels)
    {
        if (level.kind == Kind::Multilevel)
        {
            throw MalformedStructure("multilevel levels must be flat");
        }
        if (level.n == 0)
        {
            throw MalformedStructure("level order must be positive");
        }
        n *= level.n;
    }
    Shape shape;
    shape.kind = Kind::Multilevel;
    shape.n = n;
    shape.levels = std::move(levels);
    return shape;
}

std::size_t param_count(Shape const& shape)
{
    std::size_t const n = shape.n;
    switch (shape.kind)
    {
        case Kind::Circulant:
        case Kind::FCirculant:
        case Kind::UpperTriangularToeplitz:
            return n;
        case Kind::Toeplitz:
        case Kind::Hankel:
            return 2 * n - 1;
        case Kind::ToeplitzPlusHankel:
            return 4 * n - 2;
        case Kind::Symmetric:
            return n * (n + 1) / 2;
        case Kind::SkewSymmetric:
            return n * (n - 1) / 2;
        case Kind::Sparse:
            return shape.omega.size();
        case Kind::Multilevel:
        {
            std::size_t count = 1;
            for (auto const& level : shape.levels)
            {
                count *= param_count(level);
            }
            return count;
        }
    }
    return 0;
}

std::size_t structure_dimension(Shape const& shape)
{
    switch (shape.kind)
    {
        case Kind::ToeplitzPlusHankel:
            // the all-ones matrix and the checkerboard are both Toeplitz and Hankel
            return shape.n == 1 ? 1 : 4 * shape.n - 4;
        case Kind::Multilevel:
        {
            std::size_t dim = 1;
            for (auto const& level : shape.levels)
            {
                dim *= structure_dimension(level);
            }
            return dim;
        }
        default:
            return param_count(shape);
    }
}

void validate(StructuredMatrix const& m)
{
    std::size_t const expected = param_count(m.shape);
    if (m.data.size() != expected)
    {
        std::ostringstream msg;
        msg << kind_name(m.shape.kind) << " of order " << m.shape.n << " needs "
            << expected << " data entries, got " << m.data.size();
        throw MalformedStructure(msg.str());
    }
}

std::size_t symmetric_index(std::size_t n, std::size_t i, std::size_t j)
{
    if (i > j)
    {
        std::swap(i, j);
    }
    // row i starts after sum_{r<i} (n - r) entries
    return i * (2 * n - i + 1) / 2 + (j - i);
}

std::size_t skew_index(std::size_t n, std::size_t i, std::size_t j)
{
    if (i > j)
    {
        std::swap(i, j);
    }
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

TrackedMatrix TrackedMatrix::from_values(std::size_t rows,
                                         std::size_t cols,
                                         std::vector<Complex> const& row_major,
                                         ScalarKind kind)
{
    if (row_major.size() != rows * cols)
    {
        throw DimensionMismatch("matrix value count does not match its shape");
    }
    TrackedMatrix m(rows, cols);
    for (std::size_t k = 0; k < row_major.size(); ++k)
    {
        m.entries_[k] = TrackedScalar(row_major[k], kind);
    }
    return m;
}

std::vector<Complex> TrackedMatrix::values() const
{
    return values_of(entries_);
}

namespace {

struct CoefficientEntry
{
    std::size_t row;
    std::size_t col;
    Complex coeff;
};

using CoefficientList = std::vector<CoefficientEntry>;

TrackedMatrix densify_flat(StructuredMatrix const& m)
{
    std::size_t const n = m.shape.n;
    auto const& d = m.data;
    TrackedMatrix a(n, n);
    CountContext scratch;
    switch (m.shape.kind)
    {
        case Kind::Circulant:
        case Kind::FCirculant:
        {
            bool const scaled = m.shape.kind == Kind::FCirculant;
            for (std::size_t i = 0; i < n; ++i)
            {
                for (std::size_t j = 0; j < n; ++j)
                {
                    if (j >= i)
                    {
                        a(i, j) = d[j - i];
                    }
                    else
                    {
                        a(i, j) = scaled ? scale(m.shape.f, d[n + j - i], scratch)
                                         : d[n + j - i];
                    }
                }
            }
            break;
        }
        case Kind::Toeplitz:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = d[j + n - 1 - i];
            break;
        case Kind::Hankel:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = d[i + j];
            break;
        case Kind::UpperTriangularToeplitz:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    a(i, j) = d[j - i];
            break;
        case Kind::ToeplitzPlusHankel:
        {
            std::size_t const h0 = 2 * n - 1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = add(d[j + n - 1 - i], d[h0 + i + j], scratch);
            break;
        }
        case Kind::Symmetric:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = d[symmetric_index(n, i, j)];
            break;
        case Kind::SkewSymmetric:
            for (std::size_t i = 0; i < n; ++i)
            {
                for (std::size_t j = i + 1; j < n; ++j)
                {
                    a(i, j) = d[skew_index(n, i, j)];
                    a(j, i) = neg(d[skew_index(n, i, j)]);
                }
            }
            break;
        case Kind::Sparse:
        {
            auto const& entries = m.shape.omega.entries();
            for (std::size_t k = 0; k < entries.size(); ++k)
            {
                a(entries[k].first, entries[k].second) = d[k];
            }
            break;
        }
        case Kind::Multilevel:
            break;
    }
    return a;
}

//! Nonzero entries of every basis element of a flat shape.
std::vector<CoefficientList> level_coefficients(Shape const& level)
{
    std::vector<CoefficientList> out;
    for (auto const& element : basis(level))
    {
        TrackedMatrix const dense = densify_flat(element);
        CoefficientList list;
        for (std::size_t i = 0; i < dense.rows(); ++i)
        {
            for (std::size_t j = 0; j < dense.cols(); ++j)
            {
                if (dense(i, j).value() != Complex{})
                {
                    list.push_back({i, j, dense(i, j).value()});
                }
            }
        }
        out.push_back(std::move(list));
    }
    return out;
}

//! Coefficient lists of the multilevel basis, in canonical data order.
std::vector<CoefficientList> multilevel_coefficients(Shape const& shape)
{
    std::vector<CoefficientList> acc{CoefficientList{{0, 0, Complex{1.0, 0.0}}}};
    // Build from the outermost level inward: the new level becomes the
    // fastest-varying index and the innermost Kronecker factor.
    for (auto const& level : shape.levels)
    {
        auto const factor = level_coefficients(level);
        std::vector<CoefficientList> next;
        next.reserve(acc.size() * factor.size());
        for (auto const& outer : acc)
        {
            for (auto const& inner : factor)
            {
                CoefficientList combined;
                combined.reserve(outer.size() * inner.size());
                for (auto const& o : outer)
                {
                    for (auto const& in : inner)
                    {
                        combined.push_back({o.row * level.n + in.row,
                                            o.col * level.n + in.col,
                                            o.coeff * in.coeff});
                    }
                }
                next.push_back(std::move(combined));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

TrackedMatrix densify(StructuredMatrix const& m)
{
    validate(m);
    if (m.shape.kind != Kind::Multilevel)
    {
        return densify_flat(m);
    }
    std::size_t const n = m.shape.n;
    TrackedMatrix a(n, n);
    CountContext scratch;
    auto const coefficients = multilevel_coefficients(m.shape);
    for (std::size_t p = 0; p < coefficients.size(); ++p)
    {
        for (auto const& entry : coefficients[p])
        {
            TrackedScalar const term = (entry.coeff == Complex{1.0, 0.0})
                                           ? m.data[p]
                                           : scale(entry.coeff, m.data[p], scratch);
            auto& slot = a(entry.row, entry.col);
            slot = slot.is_structural_zero() ? term : add(slot, term, scratch);
        }
    }
    return a;
}

TrackedVector naive_matvec(TrackedMatrix const& a, TrackedSpan x, CountContext& ctx)
{
    if (x.size() != a.cols())
    {
        throw DimensionMismatch("matrix-vector dimensions do not conform");
    }
    TrackedVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        TrackedScalar acc;
        for (std::size_t j = 0; j < a.cols(); ++j)
        {
            if (a(i, j).is_structural_zero())
            {
                continue;
            }
            TrackedScalar const term = mul(a(i, j), x[j], ctx);
            acc = acc.is_structural_zero() ? term : add(acc, term, ctx);
        }
        out[i] = acc;
    }
    return out;
}

TrackedVector naive_matvec(StructuredMatrix const& m, TrackedSpan x, CountContext& ctx)
{
    return naive_matvec(densify(m), x, ctx);
}

TrackedMatrix naive_matmul(TrackedMatrix const& a, TrackedMatrix const& b, CountContext& ctx)
{
    if (a.cols() != b.rows())
    {
        throw DimensionMismatch("matrix-matrix dimensions do not conform");
    }
    TrackedMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        for (std::size_t k = 0; k < b.cols(); ++k)
        {
            TrackedScalar acc;
            for (std::size_t j = 0; j < a.cols(); ++j)
            {
                TrackedScalar const term = mul(a(i, j), b(j, k), ctx);
                acc = (j == 0) ? term : add(acc, term, ctx);
            }
            out(i, k) = acc;
        }
    }
    return out;
}

std::vector<StructuredMatrix> basis(Shape const& shape)
{
    std::size_t const count = param_count(shape);
    std::vector<StructuredMatrix> out;
    out.reserve(count);
    for (std::size_t p = 0; p < count; ++p)
    {
        StructuredMatrix element{shape, TrackedVector(count)};
        element.data[p] = TrackedScalar::constant(1.0);
        out.push_back(std::move(element));
    }
    return out;
}

}  // namespace bilinear
