#include "bilinear/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bilinear/decomposition.hpp"
#include "bilinear/errors.hpp"
#include "bilinear/spectral.hpp"

namespace bilinear {

namespace {

constexpr TrackedScalar zero_constant = TrackedScalar::constant(Complex{});

void require_size(TrackedSpan v, std::size_t expected, char const* what)
{
    if (v.size() != expected)
    {
        std::ostringstream msg;
        msg << what << " has length " << v.size() << ", expected " << expected;
        throw DimensionMismatch(msg.str());
    }
}

void require_nonempty(TrackedSpan x)
{
    if (x.empty())
    {
        throw DimensionMismatch("kernels need n >= 1");
    }
}

//! acc += coeff * value, where a Constant-zero acc means "empty".
void accumulate(TrackedScalar& acc, Complex coeff, TrackedScalar value, CountContext& ctx)
{
    TrackedScalar const term = (coeff == Complex{1.0, 0.0}) ? value : scale(coeff, value, ctx);
    acc = acc.is_structural_zero() ? term : add(acc, term, ctx);
}

void accumulate(TrackedScalar& acc, TrackedScalar value, CountContext& ctx)
{
    acc = acc.is_structural_zero() ? value : add(acc, value, ctx);
}

TrackedVector reversed(TrackedSpan v)
{
    return TrackedVector(v.rbegin(), v.rend());
}

/*!
 * Product a z in C[t]/(t^N - f) by evaluation at the roots of t^N = f.
 *
 * Bins flagged in skip are known to vanish on the a side and are never
 * multiplied.
 */
TrackedVector ring_product(TrackedSpan a,
                           TrackedSpan z,
                           Complex f,
                           std::vector<bool> const& skip,
                           CountContext& ctx)
{
    TrackedVector const a_hat = scaled_dft(a, f, ctx);
    TrackedVector const z_hat = scaled_dft(z, f, ctx);
    TrackedVector prod(a.size(), zero_constant);
    for (std::size_t k = 0; k < a.size(); ++k)
    {
        if (!skip[k])
        {
            prod[k] = mul(a_hat[k], z_hat[k], ctx);
        }
    }
    return scaled_idft(prod, f, ctx);
}

//! First row of the 2n circulant containing T, with y = -sum(t).
TrackedVector toeplitz_embedding(TrackedSpan t, std::size_t n, CountContext& ctx)
{
    TrackedScalar total = t[0];
    for (std::size_t k = 1; k < t.size(); ++k)
    {
        total = add(total, t[k], ctx);
    }
    TrackedVector a;
    a.reserve(2 * n);
    a.insert(a.end(), t.begin() + static_cast<std::ptrdiff_t>(n - 1), t.end());
    a.push_back(neg(total));
    a.insert(a.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n - 1));
    return a;
}

//! Toeplitz product through the circulant embedding, skipping the given bins.
TrackedVector toeplitz_embedded(TrackedSpan t,
                                TrackedSpan x,
                                std::vector<bool> const& skip,
                                CountContext& ctx)
{
    std::size_t const n = x.size();
    TrackedVector const a = toeplitz_embedding(t, n, ctx);
    // reverse of [x; 0]
    TrackedVector z(2 * n, zero_constant);
    for (std::size_t i = 0; i < n; ++i)
    {
        z[2 * n - 1 - i] = x[i];
    }
    TrackedVector const prod = ring_product(a, z, Complex{1.0, 0.0}, skip, ctx);
    TrackedVector out(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        out[i] = prod[2 * n - 1 - i];
    }
    return out;
}

void symmetric_peel(TrackedVector const& s,
                    std::size_t m,
                    TrackedSpan x,
                    TrackedVector& out,
                    std::size_t offset,
                    CountContext& ctx)
{
    if (m == 0)
    {
        return;
    }
    // first row, then down the last column
    TrackedVector h(2 * m - 1);
    for (std::size_t k = 0; k < m; ++k)
    {
        h[k] = s[symmetric_index(m, 0, k)];
    }
    for (std::size_t k = 1; k < m; ++k)
    {
        h[m - 1 + k] = s[symmetric_index(m, k, m - 1)];
    }
    TrackedVector const y = hankel_matvec(h, x, ctx);
    for (std::size_t i = 0; i < m; ++i)
    {
        accumulate(out[offset + i], y[i], ctx);
    }
    if (m <= 2)
    {
        return;
    }
    std::size_t const inner = m - 2;
    TrackedVector rest(inner * (inner + 1) / 2);
    for (std::size_t i = 0; i < inner; ++i)
    {
        for (std::size_t j = i; j < inner; ++j)
        {
            rest[symmetric_index(inner, i, j)] =
                sub(s[symmetric_index(m, i + 1, j + 1)], h[i + j + 2], ctx);
        }
    }
    symmetric_peel(rest, inner, x.subspan(1, inner), out, offset + 1, ctx);
}

bool allowed_level(Kind kind)
{
    switch (kind)
    {
        case Kind::Toeplitz:
        case Kind::Hankel:
        case Kind::Circulant:
        case Kind::FCirculant:
        case Kind::ToeplitzPlusHankel:
        case Kind::Symmetric:
        case Kind::Sparse:
            return true;
        default:
            return false;
    }
}

}  // namespace

std::uint64_t skew_symmetric_count(std::size_t n)
{
    if (n <= 1)
    {
        return 0;
    }
    return n * n - n - n / 2 + 1;  // ceil((n-1)/2) = floor(n/2)
}

std::uint64_t formula_count(Shape const& shape)
{
    std::uint64_t const n = shape.n;
    switch (shape.kind)
    {
        case Kind::Circulant:
        case Kind::FCirculant:
            return n;
        case Kind::Toeplitz:
        case Kind::Hankel:
        case Kind::UpperTriangularToeplitz:
            return 2 * n - 1;
        case Kind::ToeplitzPlusHankel:
            return 4 * n - 3;
        case Kind::Symmetric:
            return n * (n + 1) / 2;
        case Kind::SkewSymmetric:
            return skew_symmetric_count(shape.n);
        case Kind::Sparse:
            return shape.omega.size();
        case Kind::Multilevel:
        {
            std::uint64_t count = 1;
            for (auto const& level : shape.levels)
            {
                count *= formula_count(level);
            }
            return count;
        }
    }
    return 0;
}

TrackedVector f_circulant_matvec(TrackedSpan c, Complex f, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    require_size(c, x.size(), "circulant parameters");
    if (f == Complex{})
    {
        throw MalformedStructure("f-circulant needs f != 0");
    }
    // Circ_f(c) = J M(c) J with M(c) multiplication by c in C[t]/(t^n - f).
    TrackedVector const z = reversed(x);
    return reversed(ring_product(c, z, f, std::vector<bool>(x.size(), false), ctx));
}

TrackedVector circulant_matvec(TrackedSpan c, TrackedSpan x, CountContext& ctx)
{
    return f_circulant_matvec(c, Complex{1.0, 0.0}, x, ctx);
}

TrackedVector f_circulant_inverse(TrackedSpan c, Complex f, CountContext& ctx)
{
    require_nonempty(c);
    if (f == Complex{})
    {
        throw MalformedStructure("f-circulant needs f != 0");
    }
    double norm = 0.0;
    for (auto const& s : c)
    {
        norm += std::norm(s.value());
    }
    norm = std::sqrt(norm);

    TrackedVector const c_hat = scaled_dft(c, f, ctx);
    for (std::size_t k = 0; k < c_hat.size(); ++k)
    {
        if (norm == 0.0 || std::abs(c_hat[k].value()) <= 1e-12 * norm)
        {
            std::ostringstream msg;
            msg << "singular f-circulant: spectral value " << k << " vanishes";
            throw SingularMatrix(msg.str());
        }
    }
    TrackedVector inv_hat;
    inv_hat.reserve(c_hat.size());
    for (auto const& v : c_hat)
    {
        inv_hat.push_back(div(TrackedScalar::constant(1.0), v, ctx));
    }
    return scaled_idft(inv_hat, f, ctx);
}

TrackedVector circulant_inverse(TrackedSpan c, CountContext& ctx)
{
    return f_circulant_inverse(c, Complex{1.0, 0.0}, ctx);
}

std::pair<TrackedScalar, TrackedScalar> gauss_complex_mul(TrackedScalar a,
                                                          TrackedScalar b,
                                                          TrackedScalar c,
                                                          TrackedScalar d,
                                                          CountContext& ctx)
{
    TrackedScalar const m1 = mul(add(a, b, ctx), add(c, d, ctx), ctx);
    TrackedScalar const m2 = mul(a, c, ctx);
    TrackedScalar const m3 = mul(b, d, ctx);
    return {sub(m2, m3, ctx), sub(sub(m1, m2, ctx), m3, ctx)};
}

TrackedVector toeplitz_matvec(TrackedSpan t, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    require_size(t, 2 * x.size() - 1, "Toeplitz diagonals");
    std::vector<bool> skip(2 * x.size(), false);
    skip[0] = true;  // the embedded first row sums to zero
    return toeplitz_embedded(t, x, skip, ctx);
}

TrackedVector hankel_matvec(TrackedSpan h, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    require_size(h, 2 * x.size() - 1, "Hankel anti-diagonals");
    // Hank(h) = J Toep(h) under the canonical orders
    return reversed(toeplitz_matvec(h, x, ctx));
}

TrackedVector triangular_toeplitz_matvec(TrackedSpan a, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    std::size_t const n = x.size();
    require_size(a, n, "triangular Toeplitz coefficients");
    std::size_t const len = 2 * n - 1;
    TrackedVector pa(len, zero_constant);
    TrackedVector pv(len, zero_constant);
    for (std::size_t i = 0; i < n; ++i)
    {
        pa[i] = a[i];
        pv[n - 1 - i] = x[i];
    }
    TrackedVector const coeff =
        ring_product(pa, pv, Complex{1.0, 0.0}, std::vector<bool>(len, false), ctx);
    TrackedVector out(n);
    for (std::size_t r = 0; r < n; ++r)
    {
        out[r] = coeff[n - 1 - r];
    }
    return out;
}

namespace {

//! Moves shift * P from the Hankel part to the Toeplitz part, where P is the
//! all-ones matrix or the checkerboard (-1)^(i+j); both are in either space.
void move_between(TrackedVector& t,
                  TrackedVector& h,
                  TrackedScalar shift,
                  bool checkerboard,
                  CountContext& ctx)
{
    std::size_t const n = (t.size() + 1) / 2;
    auto const signed_shift = [&](std::size_t parity) {
        return (checkerboard && parity % 2 == 1) ? neg(shift) : shift;
    };
    for (std::size_t k = 0; k < t.size(); ++k)
    {
        // diagonal k has offset j - i = k - (n - 1); anti-diagonal k has i + j = k
        t[k] = add(t[k], signed_shift(k + n - 1), ctx);
        h[k] = sub(h[k], signed_shift(k), ctx);
    }
}

TrackedVector tph_combine(TrackedVector const& t,
                          TrackedVector const& h,
                          TrackedSpan x,
                          std::vector<bool> const& skip,
                          CountContext& ctx)
{
    TrackedVector out = toeplitz_embedded(t, x, skip, ctx);
    TrackedVector const hx = hankel_matvec(h, x, ctx);
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        out[i] = add(out[i], hx[i], ctx);
    }
    return out;
}

//! Shift that cancels the frequency-1 value of the Toeplitz embedding.
TrackedScalar frequency_one_shift(TrackedSpan t, std::size_t n, CountContext& ctx)
{
    // Adding s to every Toeplitz diagonal moves the frequency-1 value of the
    // embedding by s * (sum_{j != n} w^j - (2n - 1) w^n) = 2n s.
    RootTable const roots(2 * n);
    Complex slope{};
    for (std::size_t j = 0; j < 2 * n; ++j)
    {
        slope += (j == n) ? -static_cast<double>(2 * n - 1) * roots.power(static_cast<long long>(j))
                          : roots.power(static_cast<long long>(j));
    }
    double const expected = 2.0 * static_cast<double>(n);
    if (std::abs(slope - expected) > 1e-9 * expected)
    {
        throw std::logic_error("Toeplitz-plus-Hankel shift coefficient self-check failed");
    }
    TrackedVector const a = toeplitz_embedding(t, n, ctx);
    TrackedScalar first;
    for (std::size_t j = 0; j < 2 * n; ++j)
    {
        accumulate(first, roots.power(static_cast<long long>(j)), a[j], ctx);
    }
    return scale(-1.0 / expected, first, ctx);
}

}  // namespace

TrackedVector tph_matvec(TrackedSpan t, TrackedSpan h, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    std::size_t const n = x.size();
    require_size(t, 2 * n - 1, "Toeplitz diagonals");
    require_size(h, 2 * n - 1, "Hankel anti-diagonals");

    TrackedVector t_shift(t.begin(), t.end());
    TrackedVector h_shift(h.begin(), h.end());
    move_between(t_shift, h_shift, frequency_one_shift(t, n, ctx), false, ctx);
    std::vector<bool> skip(2 * n, false);
    skip[0] = true;
    skip[1] = true;
    return tph_combine(t_shift, h_shift, x, skip, ctx);
}

TrackedVector tph_matvec_tight(TrackedSpan t, TrackedSpan h, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    std::size_t const n = x.size();
    if (n == 1)
    {
        return tph_matvec(t, h, x, ctx);
    }
    require_size(t, 2 * n - 1, "Toeplitz diagonals");
    require_size(h, 2 * n - 1, "Hankel anti-diagonals");

    TrackedVector t_shift(t.begin(), t.end());
    TrackedVector h_shift(h.begin(), h.end());
    move_between(t_shift, h_shift, frequency_one_shift(t, n, ctx), false, ctx);

    // The checkerboard embeds as the character (-1)^j: it only moves the
    // frequency-n value, by 2n per unit, and leaves frequencies 0 and 1 alone.
    TrackedVector const a = toeplitz_embedding(t_shift, n, ctx);
    TrackedScalar middle;
    for (std::size_t j = 0; j < 2 * n; ++j)
    {
        accumulate(middle, Complex{j % 2 == 0 ? 1.0 : -1.0, 0.0}, a[j], ctx);
    }
    TrackedScalar const b = scale(-1.0 / (2.0 * static_cast<double>(n)), middle, ctx);
    move_between(t_shift, h_shift, b, true, ctx);

    std::vector<bool> skip(2 * n, false);
    skip[0] = true;
    skip[1] = true;
    skip[n] = true;
    return tph_combine(t_shift, h_shift, x, skip, ctx);
}

TrackedVector symmetric_matvec(TrackedSpan s, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    std::size_t const n = x.size();
    require_size(s, n * (n + 1) / 2, "symmetric parameters");
    TrackedVector out(n, zero_constant);
    symmetric_peel(TrackedVector(s.begin(), s.end()), n, x, out, 0, ctx);
    return out;
}

TrackedVector skew_symmetric_matvec(TrackedSpan w, TrackedSpan x, CountContext& ctx)
{
    require_nonempty(x);
    std::size_t const n = x.size();
    require_size(w, n * (n - 1) / 2, "skew-symmetric parameters");
    if (n == 1)
    {
        return TrackedVector(1, zero_constant);
    }
    auto entry = [&](std::size_t i, std::size_t j) {
        if (i == j)
        {
            return zero_constant;
        }
        return i < j ? w[skew_index(n, i, j)] : neg(w[skew_index(n, j, i)]);
    };

    // A = A_c + A_w with A_c the skew-circulant sharing A's first row.
    TrackedVector c(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        c[j] = entry(0, j);
    }
    auto circ_entry = [&](std::size_t i, std::size_t j) {
        return j >= i ? c[j - i] : neg(c[n + j - i]);
    };
    TrackedVector out = f_circulant_matvec(c, Complex{-1.0, 0.0}, x, ctx);

    // first column of A_w is antisymmetric under i <-> n - i
    for (std::size_t i = 1; 2 * i < n; ++i)
    {
        TrackedScalar const coeff = sub(entry(i, 0), circ_entry(i, 0), ctx);
        TrackedScalar const p = mul(coeff, x[0], ctx);
        out[i] = add(out[i], p, ctx);
        out[n - i] = sub(out[n - i], p, ctx);
    }
    for (std::size_t i = 1; i < n; ++i)
    {
        for (std::size_t j = 1; j < n; ++j)
        {
            if (i == j)
            {
                continue;
            }
            TrackedScalar const coeff = sub(entry(i, j), circ_entry(i, j), ctx);
            out[i] = add(out[i], mul(coeff, x[j], ctx), ctx);
        }
    }
    return out;
}

TrackedVector multilevel_matvec(StructuredMatrix const& m, TrackedSpan x, CountContext& ctx)
{
    if (m.shape.kind != Kind::Multilevel)
    {
        throw MalformedStructure("multilevel_matvec needs a multilevel matrix");
    }
    validate(m);
    require_size(x, m.shape.n, "input vector");
    auto const& levels = m.shape.levels;
    for (auto const& level : levels)
    {
        if (!allowed_level(level.kind))
        {
            throw UnsupportedKind(std::string(kind_name(level.kind))
                                  + " is not supported as a multilevel level");
        }
    }
    if (levels.size() == 1)
    {
        return structured_matvec(StructuredMatrix{levels[0], m.data}, x, ctx);
    }

    Shape const inner = (levels.size() == 2)
                            ? levels[1]
                            : make_multilevel_shape({levels.begin() + 1, levels.end()});
    std::size_t const inner_params = param_count(inner);
    std::size_t const inner_n = inner.n;
    auto const program = bilinear_program(levels[0]);
    BilinearProgram const& outer = *program;

    // Replay the outer program with block-valued operands; each outer product
    // is an inner structured product.
    TrackedVector out(m.shape.n, zero_constant);
    for (std::size_t i = 0; i < outer.size(); ++i)
    {
        StructuredMatrix block{inner, TrackedVector(inner_params, zero_constant)};
        for (std::size_t p = 0; p < outer.param_count; ++p)
        {
            Complex const coeff = outer.u[i][p];
            if (coeff == Complex{})
            {
                continue;
            }
            for (std::size_t q = 0; q < inner_params; ++q)
            {
                accumulate(block.data[q], coeff, m.data[p * inner_params + q], ctx);
            }
        }
        TrackedVector xi(inner_n, zero_constant);
        for (std::size_t q = 0; q < outer.input_count; ++q)
        {
            Complex const coeff = outer.v[i][q];
            if (coeff == Complex{})
            {
                continue;
            }
            for (std::size_t r = 0; r < inner_n; ++r)
            {
                accumulate(xi[r], coeff, x[q * inner_n + r], ctx);
            }
        }
        TrackedVector const prod = structured_matvec(block, xi, ctx);
        for (std::size_t k = 0; k < outer.w[i].size(); ++k)
        {
            Complex const coeff = outer.w[i][k];
            if (coeff == Complex{})
            {
                continue;
            }
            for (std::size_t r = 0; r < inner_n; ++r)
            {
                accumulate(out[k * inner_n + r], coeff, prod[r], ctx);
            }
        }
    }
    return out;
}

TrackedMatrix toeplitz_matmul(TrackedSpan t, TrackedMatrix const& y, CountContext& ctx)
{
    std::size_t const n = y.rows();
    if (n == 0 || y.cols() != n)
    {
        throw DimensionMismatch("toeplitz_matmul needs a square n x n right factor");
    }
    require_size(t, 2 * n - 1, "Toeplitz diagonals");
    TrackedMatrix out(n, n);
    TrackedVector column(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            column[i] = y(i, j);
        }
        TrackedVector const result = toeplitz_matvec(t, column, ctx);
        for (std::size_t i = 0; i < n; ++i)
        {
            out(i, j) = result[i];
        }
    }
    return out;
}

TrackedMatrix commutator_2x2(TrackedMatrix const& a, TrackedMatrix const& x, CountContext& ctx)
{
    if (a.rows() != 2 || a.cols() != 2 || x.rows() != 2 || x.cols() != 2)
    {
        throw DimensionMismatch("commutator_2x2 needs 2x2 matrices");
    }
    TrackedScalar const s1 = neg(a(1, 0));
    TrackedScalar const s2 = a(0, 1);
    TrackedScalar const s3 = sub(a(0, 0), a(1, 1), ctx);
    TrackedScalar const t1 = sub(x(0, 0), x(1, 1), ctx);
    TrackedScalar const t2 = x(0, 1);
    TrackedScalar const t3 = x(1, 0);

    TrackedScalar const p11 = mul(s1, t1, ctx);
    TrackedScalar const p33 = mul(s3, t3, ctx);
    TrackedScalar const p12 = mul(s1, t2, ctx);
    TrackedScalar const p23 = mul(s2, t3, ctx);
    TrackedScalar const p21 = mul(s2, t1, ctx);
    TrackedScalar const p32 = mul(s3, t2, ctx);

    TrackedScalar const w1 = add(p12, p23, ctx);
    TrackedScalar const w2 = sub(p32, p21, ctx);
    TrackedScalar const w3 = neg(add(p11, p33, ctx));

    TrackedMatrix out(2, 2);
    out(0, 0) = w1;
    out(0, 1) = w2;
    out(1, 0) = w3;
    out(1, 1) = neg(w1);
    return out;
}

TrackedVector structured_matvec(StructuredMatrix const& m, TrackedSpan x, CountContext& ctx)
{
    validate(m);
    require_size(x, m.shape.n, "input vector");
    TrackedSpan const d = m.data;
    std::size_t const n = m.shape.n;
    switch (m.shape.kind)
    {
        case Kind::Circulant:
            return circulant_matvec(d, x, ctx);
        case Kind::FCirculant:
            return f_circulant_matvec(d, m.shape.f, x, ctx);
        case Kind::Toeplitz:
            return toeplitz_matvec(d, x, ctx);
        case Kind::Hankel:
            return hankel_matvec(d, x, ctx);
        case Kind::UpperTriangularToeplitz:
            return triangular_toeplitz_matvec(d, x, ctx);
        case Kind::ToeplitzPlusHankel:
            return tph_matvec(d.first(2 * n - 1), d.subspan(2 * n - 1), x, ctx);
        case Kind::Symmetric:
            return symmetric_matvec(d, x, ctx);
        case Kind::SkewSymmetric:
            return skew_symmetric_matvec(d, x, ctx);
        case Kind::Sparse:
            return naive_matvec(m, x, ctx);
        case Kind::Multilevel:
            return multilevel_matvec(m, x, ctx);
    }
    throw UnsupportedKind("unknown structure kind");
}

KernelReport run_kernel(StructuredMatrix const& m, TrackedSpan x)
{
    CountContext ctx;
    KernelReport report;
    report.output = structured_matvec(m, x, ctx);
    report.counts = ctx.counts();
    report.formula_count = formula_count(m.shape);
    return report;
}

}  // namespace bilinear
