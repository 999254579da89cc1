#include <stdexcept>

#include "bilinear/errors.hpp"
#include "bilinear/group_algebra.hpp"
#include "bilinear/spectral.hpp"

namespace bilinear {

namespace {

constexpr TrackedScalar zero_constant = TrackedScalar::constant(Complex{});

int character(std::size_t m, int a, int b)
{
    int const alt = (a % 2 == 0) ? 1 : -1;
    int const refl = b ? -1 : 1;
    switch (m)
    {
        case 0: return 1;
        case 1: return refl;
        case 2: return alt;
        default: return alt * refl;
    }
}

using Rep = std::array<int, 4>;  // row-major 2x2

Rep rep_mul(Rep const& p, Rep const& q)
{
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
            p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

//! Two-dimensional representation: x -> rotation by 90 degrees, y -> diag(1, -1).
Rep rep(int a, int b)
{
    Rep const rotation{0, -1, 1, 0};
    Rep out{1, 0, 0, 1};
    for (int k = 0; k < a; ++k)
    {
        out = rep_mul(out, rotation);
    }
    if (b)
    {
        out = rep_mul(out, Rep{1, 0, 0, -1});
    }
    return out;
}

void accumulate(TrackedScalar& acc, double coeff, TrackedScalar value, CountContext& ctx)
{
    if (coeff == 0.0 || value.is_structural_zero())
    {
        return;
    }
    TrackedScalar const term = coeff == 1.0 ? value : coeff == -1.0 ? neg(value) : scale(coeff, value, ctx);
    acc = acc.is_structural_zero() ? term : add(acc, term, ctx);
}

void require_2x2(TrackedMatrix const& m, char const* what)
{
    if (m.rows() != 2 || m.cols() != 2)
    {
        throw DimensionMismatch(std::string(what) + " must be 2x2");
    }
}

TrackedMatrix matrix_of(TrackedScalar p, TrackedScalar q, TrackedScalar r, TrackedScalar s)
{
    TrackedMatrix m(2, 2);
    m(0, 0) = p;
    m(0, 1) = q;
    m(1, 0) = r;
    m(1, 1) = s;
    return m;
}

// Plain coefficient arrays of the x8 embedding for A = [[a, b], [c, d]] and
// B = [[e, f], [g, h]].
std::array<Complex, 8> embed_a(std::array<Complex, 4> const& a)
{
    std::array<Complex, 8> p{};
    p[3] = a[0];
    p[1] = a[1];
    p[2] = a[2];
    p[0] = a[3];
    return p;
}

std::array<Complex, 8> embed_b(std::array<Complex, 4> const& b)
{
    std::array<Complex, 8> p{};
    p[4] = b[0];
    p[0] = b[1];
    p[6] = b[2];
    p[2] = b[3];
    return p;
}

using Form = std::array<std::array<int, 4>, 4>;  // [A entry][B entry]

//! Bilinear form of coefficient k of the x8 product.
Form coefficient_form(std::size_t k)
{
    Form form{};
    for (std::size_t p = 0; p < 4; ++p)
    {
        for (std::size_t q = 0; q < 4; ++q)
        {
            std::array<Complex, 4> ea{};
            std::array<Complex, 4> eb{};
            ea[p] = 1.0;
            eb[q] = 1.0;
            auto const pa = embed_a(ea);
            auto const pb = embed_b(eb);
            double sum = 0.0;
            for (std::size_t i = 0; i < 8; ++i)
            {
                sum += (pa[i] * pb[(k + 8 - i) % 8]).real();
            }
            form[p][q] = static_cast<int>(sum);
        }
    }
    return form;
}

//! Bilinear form of entry (r, s) of A M where M(i, j) = B entry pick[i][j].
Form product_form(std::size_t r, std::size_t s, std::array<std::array<std::size_t, 2>, 2> const& pick)
{
    Form form{};
    for (std::size_t j = 0; j < 2; ++j)
    {
        form[r * 2 + j][pick[j][s]] += 1;
    }
    return form;
}

std::array<std::size_t, 4> identify(std::array<std::array<std::size_t, 2>, 2> const& pick)
{
    std::array<std::size_t, 4> positions{};
    for (std::size_t entry = 0; entry < 4; ++entry)
    {
        Form const target = product_form(entry / 2, entry % 2, pick);
        std::size_t matches = 0;
        for (std::size_t k = 0; k < 8; ++k)
        {
            if (coefficient_form(k) == target)
            {
                positions[entry] = k;
                ++matches;
            }
        }
        if (matches != 1)
        {
            throw std::logic_error("x8 read-off position is not unique");
        }
    }
    return positions;
}

}  // namespace

D4Coordinates d4_transform(GroupAlgebraElement const& a, CountContext& ctx)
{
    if (a.coefficients.size() != 8)
    {
        throw DimensionMismatch("D4 elements have 8 coefficients");
    }
    D4Coordinates out;
    out.characters.fill(zero_constant);
    out.block.fill(zero_constant);
    for (int b = 0; b < 2; ++b)
    {
        for (int e = 0; e < 4; ++e)
        {
            TrackedScalar const c = a.coefficients[d4_element(e, b)];
            for (std::size_t m = 0; m < 4; ++m)
            {
                accumulate(out.characters[m], character(m, e, b), c, ctx);
            }
            Rep const r = rep(e, b);
            for (std::size_t k = 0; k < 4; ++k)
            {
                accumulate(out.block[k], r[k], c, ctx);
            }
        }
    }
    return out;
}

GroupAlgebraElement d4_inverse_transform(D4Coordinates const& c, CountContext& ctx)
{
    GroupTable const g = dihedral8();
    GroupAlgebraElement out{TrackedVector(8, zero_constant)};
    for (int b = 0; b < 2; ++b)
    {
        for (int e = 0; e < 4; ++e)
        {
            std::size_t const idx = d4_element(e, b);
            std::size_t const inv = g.inverse(idx);
            int const ia = static_cast<int>(inv % 4);
            int const ib = static_cast<int>(inv / 4);
            TrackedScalar acc = zero_constant;
            for (std::size_t m = 0; m < 4; ++m)
            {
                accumulate(acc, character(m, ia, ib) / 8.0, c.characters[m], ctx);
            }
            // (2 / 8) tr(rho(g^-1) P)
            Rep const r = rep(ia, ib);
            for (std::size_t i = 0; i < 2; ++i)
            {
                for (std::size_t j = 0; j < 2; ++j)
                {
                    accumulate(acc, r[i * 2 + j] / 4.0, c.block[j * 2 + i], ctx);
                }
            }
            out.coefficients[idx] = acc;
        }
    }
    return out;
}

TrackedMatrix swap_rows(TrackedMatrix const& b)
{
    if (b.rows() != 2)
    {
        throw DimensionMismatch("row swap needs two rows");
    }
    TrackedMatrix out(2, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
    {
        out(0, j) = b(1, j);
        out(1, j) = b(0, j);
    }
    return out;
}

TrackedMatrix g_transform(TrackedMatrix const& b)
{
    require_2x2(b, "B");
    TrackedMatrix out = swap_rows(b);
    std::swap(out(0, 0), out(0, 1));
    return out;
}

SimultaneousProduct d4_simultaneous(TrackedMatrix const& a, TrackedMatrix const& b, CountContext& ctx)
{
    require_2x2(a, "A");
    require_2x2(b, "B");
    GroupAlgebraElement a_hat{TrackedVector(8, zero_constant)};
    a_hat.coefficients[d4_element(2, 0)] = a(0, 0);
    a_hat.coefficients[d4_element(0, 1)] = a(0, 1);
    a_hat.coefficients[d4_element(2, 1)] = a(1, 0);
    a_hat.coefficients[d4_element(0, 0)] = a(1, 1);
    GroupAlgebraElement b_hat{TrackedVector(8, zero_constant)};
    b_hat.coefficients[d4_element(3, 0)] = b(0, 0);
    b_hat.coefficients[d4_element(2, 1)] = b(0, 1);
    b_hat.coefficients[d4_element(3, 1)] = b(1, 0);
    b_hat.coefficients[d4_element(0, 0)] = b(1, 1);

    D4Coordinates const pa = d4_transform(a_hat, ctx);
    D4Coordinates const pb = d4_transform(b_hat, ctx);
    D4Coordinates prod;
    for (std::size_t m = 0; m < 4; ++m)
    {
        prod.characters[m] = mul(pa.characters[m], pb.characters[m], ctx);
    }
    // A's block is diagonal, so the 2x2 block product needs four products.
    prod.block.fill(zero_constant);
    for (std::size_t i = 0; i < 2; ++i)
    {
        for (std::size_t k = 0; k < 2; ++k)
        {
            for (std::size_t j = 0; j < 2; ++j)
            {
                TrackedScalar const lhs = pa.block[i * 2 + j];
                TrackedScalar const rhs = pb.block[j * 2 + k];
                if (lhs.is_structural_zero() || rhs.is_structural_zero())
                {
                    continue;
                }
                accumulate(prod.block[i * 2 + k], 1.0, mul(lhs, rhs, ctx), ctx);
            }
        }
    }
    auto const c = d4_inverse_transform(prod, ctx).coefficients;
    auto at = [&](int e, int f) { return c[d4_element(e, f)]; };
    return {matrix_of(at(1, 0), at(0, 1), at(3, 1), at(0, 0)),
            matrix_of(at(1, 1), at(2, 0), at(3, 0), at(2, 1))};
}

std::array<std::size_t, 4> const& x8_variant_positions()
{
    static std::array<std::size_t, 4> const positions = [] {
        // B = [[e, f], [g, h]] is indexed e=0, f=1, g=2, h=3.
        if (identify({{{0, 1}, {2, 3}}}) != std::array<std::size_t, 4>{7, 3, 6, 2})
        {
            throw std::logic_error("x8 embedding does not reproduce AB");
        }
        // B^g = [[h, g], [e, f]]
        return identify({{{3, 2}, {0, 1}}});
    }();
    return positions;
}

SimultaneousProduct x8_simultaneous(TrackedMatrix const& a, TrackedMatrix const& b, CountContext& ctx)
{
    require_2x2(a, "A");
    require_2x2(b, "B");
    TrackedVector pa(8, zero_constant);
    pa[3] = a(0, 0);
    pa[1] = a(0, 1);
    pa[2] = a(1, 0);
    pa[0] = a(1, 1);
    TrackedVector pb(8, zero_constant);
    pb[4] = b(0, 0);
    pb[0] = b(0, 1);
    pb[6] = b(1, 0);
    pb[2] = b(1, 1);

    TrackedVector const ha = dft(pa, ctx);
    TrackedVector const hb = dft(pb, ctx);
    TrackedVector prod(8);
    for (std::size_t k = 0; k < 8; ++k)
    {
        prod[k] = mul(ha[k], hb[k], ctx);
    }
    TrackedVector const u = idft(prod, ctx);
    auto const& g = x8_variant_positions();
    return {matrix_of(u[7], u[3], u[6], u[2]), matrix_of(u[g[0]], u[g[1]], u[g[2]], u[g[3]])};
}

TrackedMatrix blocked_variant(TrackedMatrix const& b, Variant variant)
{
    if (b.rows() != 2 || b.cols() == 0 || b.cols() % 2 != 0)
    {
        throw DimensionMismatch("B must be 2 x 2n with n >= 1");
    }
    TrackedMatrix out = swap_rows(b);
    if (variant == Variant::G)
    {
        std::size_t const pairs = b.cols() / 2;
        for (std::size_t i = 0; i < pairs / 2; ++i)
        {
            std::swap(out(0, 2 * i), out(0, 2 * i + 1));
        }
    }
    return out;
}

SimultaneousProduct blocked_simultaneous(TrackedMatrix const& a,
                                         TrackedMatrix const& b,
                                         Variant variant,
                                         CountContext& ctx)
{
    require_2x2(a, "A");
    if (b.rows() != 2 || b.cols() == 0 || b.cols() % 2 != 0)
    {
        throw DimensionMismatch("B must be 2 x 2n with n >= 1");
    }
    std::size_t const pairs = b.cols() / 2;
    SimultaneousProduct out{TrackedMatrix(2, b.cols()), TrackedMatrix(2, b.cols())};
    for (std::size_t i = 0; i < pairs; ++i)
    {
        TrackedMatrix const block = matrix_of(b(0, 2 * i), b(0, 2 * i + 1), b(1, 2 * i), b(1, 2 * i + 1));
        bool const use_g = variant == Variant::G && i < pairs / 2;
        SimultaneousProduct const part =
            use_g ? x8_simultaneous(a, block, ctx) : d4_simultaneous(a, block, ctx);
        for (std::size_t r = 0; r < 2; ++r)
        {
            for (std::size_t c = 0; c < 2; ++c)
            {
                out.product(r, 2 * i + c) = part.product(r, c);
                out.variant_product(r, 2 * i + c) = part.variant_product(r, c);
            }
        }
    }
    return out;
}

}  // namespace bilinear
