#pragma once

#include <cstdint>
#include <utility>

#include "bilinear/counted.hpp"
#include "bilinear/structures.hpp"

namespace bilinear {

/*!
 * Minimum-multiplication structured products.
 *
 * Every kernel multiplies with the parameter-side operand on the left of each
 * bilinear product; decomposition extraction relies on this.
 */

struct KernelReport
{
    TrackedVector output;
    OperationCounts counts;
    std::uint64_t formula_count = 0;
};

//! Closed-form minimum multiplication count for a shape.
std::uint64_t formula_count(Shape const& shape);

//! Skew-symmetric bound n^2 - n - ceil((n-1)/2) + 1; 0 for n = 1.
std::uint64_t skew_symmetric_count(std::size_t n);

TrackedVector circulant_matvec(TrackedSpan c, TrackedSpan x, CountContext& ctx);
//! First row of the inverse; n divisions. Throws SingularMatrix.
TrackedVector circulant_inverse(TrackedSpan c, CountContext& ctx);

TrackedVector f_circulant_matvec(TrackedSpan c, Complex f, TrackedSpan x, CountContext& ctx);
TrackedVector f_circulant_inverse(TrackedSpan c, Complex f, CountContext& ctx);

//! (a + bi)(c + di) over the reals with three products.
std::pair<TrackedScalar, TrackedScalar> gauss_complex_mul(TrackedScalar a,
                                                          TrackedScalar b,
                                                          TrackedScalar c,
                                                          TrackedScalar d,
                                                          CountContext& ctx);

TrackedVector toeplitz_matvec(TrackedSpan t, TrackedSpan x, CountContext& ctx);
TrackedVector hankel_matvec(TrackedSpan h, TrackedSpan x, CountContext& ctx);
TrackedVector triangular_toeplitz_matvec(TrackedSpan a, TrackedSpan x, CountContext& ctx);
TrackedVector tph_matvec(TrackedSpan t, TrackedSpan h, TrackedSpan x, CountContext& ctx);
/*!
 * Toeplitz-plus-Hankel product with 4n - 4 products for n >= 2.
 *
 * The checkerboard (-1)^(i+j) is both Toeplitz and Hankel, so a second shift
 * cancels the frequency-n value as well. This matches the dimension of the
 * Toeplitz-plus-Hankel space, hence the rank of its matvec tensor.
 */
TrackedVector tph_matvec_tight(TrackedSpan t, TrackedSpan h, TrackedSpan x, CountContext& ctx);
TrackedVector symmetric_matvec(TrackedSpan s, TrackedSpan x, CountContext& ctx);
TrackedVector skew_symmetric_matvec(TrackedSpan w, TrackedSpan x, CountContext& ctx);
//! Throws UnsupportedKind for skew-symmetric or triangular Toeplitz levels.
TrackedVector multilevel_matvec(StructuredMatrix const& m, TrackedSpan x, CountContext& ctx);

//! T Y column by column.
TrackedMatrix toeplitz_matmul(TrackedSpan t, TrackedMatrix const& y, CountContext& ctx);

//! A X - X A for 2x2 matrices with six products; the result is trace-free.
TrackedMatrix commutator_2x2(TrackedMatrix const& a, TrackedMatrix const& x, CountContext& ctx);

//! Dispatches to the fast kernel for m's kind (naive product for Sparse).
TrackedVector structured_matvec(StructuredMatrix const& m, TrackedSpan x, CountContext& ctx);

//! Runs structured_matvec on a fresh context.
KernelReport run_kernel(StructuredMatrix const& m, TrackedSpan x);

}  // namespace bilinear
