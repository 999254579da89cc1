#include <gtest/gtest.h>

#include "bilinear/errors.hpp"
#include "bilinear/group_algebra.hpp"
#include "bilinear/random.hpp"
#include "support.hpp"

namespace bilinear {
namespace {

using testing::expect_matrix;
using testing::expect_values;

TrackedMatrix mat2(std::vector<Complex> const& v)
{
    return TrackedMatrix::from_values(2, 2, v);
}

TrackedMatrix dense_product(TrackedMatrix const& a, TrackedMatrix const& b)
{
    CountContext ctx;
    return naive_matmul(a, b, ctx);
}

GroupAlgebraElement random_element(InputGenerator& gen, std::size_t order)
{
    return {gen.variables(order)};
}

TEST(Groups, Tables)
{
    GroupTable const trivial = cyclic_group(1);
    EXPECT_EQ(trivial.order(), 1u);
    GroupTable const c4 = cyclic_group(4);
    EXPECT_EQ(c4.mul(1, 3), c4.identity());
    GroupTable const d4 = dihedral8();
    std::size_t const x = d4.index_of("x");
    std::size_t const y = d4.index_of("y");
    EXPECT_EQ(d4.mul(d4.mul(y, x), y), d4.inverse(x));
    EXPECT_EQ(d4_element(3, 1), d4.index_of("x^3y"));
}

TEST(Groups, RejectsNonGroups)
{
    EXPECT_THROW(GroupTable({{0, 1}, {0, 1}}, {"a", "b"}), MalformedStructure);
}

TEST(Tpp, PresetsAndCounterexample)
{
    TppPreset const d4 = tpp_preset("d4-222");
    EXPECT_TRUE(tpp_check(d4.group, d4.s, d4.t, d4.u));
    GroupTable const g = dihedral8();
    std::vector<std::size_t> const s{g.index_of("y"), g.identity()};
    std::vector<std::size_t> const t{g.index_of("x^2y"), g.identity()};
    std::vector<std::size_t> const u{g.mul(g.inverse(g.index_of("x")), g.index_of("y")), g.identity()};
    EXPECT_TRUE(tpp_check(g, s, t, u));
    for (std::size_t n = 1; n <= 6; ++n)
    {
        TppPreset const c = tpp_preset("cyclic-1n1", n);
        EXPECT_TRUE(tpp_check(c.group, c.s, c.t, c.u));
    }
    GroupTable const c2 = cyclic_group(2);
    EXPECT_FALSE(tpp_check(c2, {0, 1}, {0, 1}, {0, 1}));
    EXPECT_THROW(tpp_preset("klein"), UnsupportedKind);
}

TEST(CohnUmans, Examples)
{
    TppPreset const c4 = tpp_preset("cyclic-1n1", 4);
    CountContext ctx;
    TrackedMatrix const row = TrackedMatrix::from_values(1, 4, {1, 2, 3, 4});
    TrackedMatrix const col = TrackedMatrix::from_values(4, 1, {5, 6, 7, 8});
    expect_matrix(cu_matmul(c4.group, c4.s, c4.t, c4.u, row, col, ctx), {70});

    TppPreset const d4 = tpp_preset("d4-222");
    TrackedMatrix const a = mat2({1, 2, 3, 4});
    TrackedMatrix const b = mat2({5, 6, 7, 8});
    expect_matrix(cu_matmul(d4.group, d4.s, d4.t, d4.u, a, b, ctx), {19, 22, 43, 50});
    expect_matrix(cu_matmul(d4.group, d4.s, d4.t, d4.u, mat2({1, 0, 0, 1}), b, ctx), {5, 6, 7, 8});
}

TEST(CohnUmans, Errors)
{
    GroupTable const c2 = cyclic_group(2);
    CountContext ctx;
    EXPECT_THROW(cu_matmul(c2, {0, 1}, {0, 1}, {0, 1}, mat2({1, 2, 3, 4}), mat2({1, 2, 3, 4}), ctx),
                 TripleProductViolation);
    TppPreset const d4 = tpp_preset("d4-222");
    EXPECT_THROW(cu_matmul(d4.group, d4.s, d4.t, d4.u, TrackedMatrix(3, 2), mat2({1, 2, 3, 4}), ctx),
                 DimensionMismatch);
}

TEST(CohnUmans, RandomAgreement)
{
    InputGenerator gen(41);
    TppPreset const d4 = tpp_preset("d4-222");
    for (int trial = 0; trial < 100; ++trial)
    {
        TrackedMatrix const a = gen.dense(2, 2);
        TrackedMatrix const b = gen.dense(2, 2);
        CountContext ctx;
        EXPECT_LT(testing::relative_error(cu_matmul(d4.group, d4.s, d4.t, d4.u, a, b, ctx).entries(),
                                          dense_product(a, b).entries()),
                  1e-9);
    }
}

TEST(GroupAlgebra, Products)
{
    GroupTable const c2 = cyclic_group(2);
    CountContext ctx;
    GroupAlgebraElement const p{testing::vars({1, 1})};
    GroupAlgebraElement const m{testing::vars({1, -1})};
    expect_values(group_algebra_mul(c2, p, m, ctx).coefficients, {0, 0});

    GroupTable const d4 = dihedral8();
    GroupAlgebraElement x{constants(std::vector<Complex>(8))};
    GroupAlgebraElement x3 = x;
    x.coefficients[d4.index_of("x")] = TrackedScalar::variable(1.0);
    x3.coefficients[d4.index_of("x^3")] = TrackedScalar::variable(1.0);
    std::vector<Complex> one(8);
    one[d4.identity()] = 1.0;
    expect_values(group_algebra_mul(d4, x, x3, ctx).coefficients, one);

    InputGenerator gen(42);
    GroupAlgebraElement const b = random_element(gen, 8);
    GroupAlgebraElement e{constants(std::vector<Complex>(8))};
    e.coefficients[d4.identity()] = TrackedScalar::constant(1.0);
    expect_values(group_algebra_mul(d4, e, b, ctx).coefficients, values_of(b.coefficients));
}

TEST(GroupAlgebra, Associative)
{
    InputGenerator gen(43);
    std::vector<GroupTable> groups;
    for (std::size_t n = 1; n <= 8; ++n)
    {
        groups.push_back(cyclic_group(n));
    }
    groups.push_back(dihedral8());
    for (GroupTable const& g : groups)
    {
        for (int trial = 0; trial < 5; ++trial)
        {
            GroupAlgebraElement const a = random_element(gen, g.order());
            GroupAlgebraElement const b = random_element(gen, g.order());
            GroupAlgebraElement const c = random_element(gen, g.order());
            CountContext ctx;
            auto const left = group_algebra_mul(g, group_algebra_mul(g, a, b, ctx), c, ctx);
            auto const right = group_algebra_mul(g, a, group_algebra_mul(g, b, c, ctx), ctx);
            EXPECT_LT(testing::relative_error(left.coefficients, right.coefficients), 1e-10);
        }
    }
}

TEST(Wedderburn, RoundTrip)
{
    InputGenerator gen(44);
    for (int trial = 0; trial < 20; ++trial)
    {
        GroupAlgebraElement const a = random_element(gen, 8);
        CountContext ctx;
        GroupAlgebraElement const back = d4_inverse_transform(d4_transform(a, ctx), ctx);
        EXPECT_LT(testing::relative_error(back.coefficients, a.coefficients), 1e-10);
        EXPECT_EQ(ctx.bilinear_mults(), 0u);
    }
}

TEST(Wedderburn, TransformIsMultiplicative)
{
    InputGenerator gen(45);
    GroupTable const d4 = dihedral8();
    GroupAlgebraElement const a = random_element(gen, 8);
    GroupAlgebraElement const b = random_element(gen, 8);
    CountContext ctx;
    D4Coordinates const ta = d4_transform(a, ctx);
    D4Coordinates const tb = d4_transform(b, ctx);
    D4Coordinates const tab = d4_transform(group_algebra_mul(d4, a, b, ctx), ctx);
    for (std::size_t i = 0; i < 4; ++i)
    {
        EXPECT_NEAR(std::abs(tab.characters[i].value() - ta.characters[i].value() * tb.characters[i].value()),
                    0.0,
                    1e-12);
    }
    for (std::size_t r = 0; r < 2; ++r)
    {
        for (std::size_t c = 0; c < 2; ++c)
        {
            Complex expected = ta.block[2 * r].value() * tb.block[c].value()
                               + ta.block[2 * r + 1].value() * tb.block[2 + c].value();
            EXPECT_NEAR(std::abs(tab.block[2 * r + c].value() - expected), 0.0, 1e-12);
        }
    }
}

TEST(Simultaneous, D4Example)
{
    CountContext ctx;
    SimultaneousProduct const p = d4_simultaneous(mat2({1, 2, 3, 4}), mat2({5, 6, 7, 8}), ctx);
    expect_matrix(p.product, {19, 22, 43, 50});
    expect_matrix(p.variant_product, {17, 20, 41, 48});
    EXPECT_EQ(ctx.bilinear_mults(), 8u);

    CountContext ctx2;
    TrackedMatrix const a = mat2({1, 2, 3, 4});
    SimultaneousProduct const q = d4_simultaneous(a, mat2({1, 0, 0, 1}), ctx2);
    expect_matrix(q.product, a.values());
    expect_matrix(q.variant_product, {2, 1, 4, 3});
}

TEST(Simultaneous, X8Example)
{
    TrackedMatrix const b = mat2({5, 6, 7, 8});
    expect_matrix(g_transform(b), {8, 7, 5, 6});
    CountContext ctx;
    SimultaneousProduct const p = x8_simultaneous(mat2({1, 2, 3, 4}), b, ctx);
    expect_matrix(p.product, {19, 22, 43, 50});
    expect_matrix(p.variant_product, {18, 19, 44, 45});
    EXPECT_EQ(ctx.bilinear_mults(), 8u);

    CountContext ctx2;
    SimultaneousProduct const q = x8_simultaneous(mat2({1, 0, 0, 1}), b, ctx2);
    expect_matrix(q.product, b.values());
    expect_matrix(q.variant_product, g_transform(b).values());
}

TEST(Simultaneous, X8PositionsAreIdentified)
{
    std::array<std::size_t, 4> const expected{5, 1, 4, 0};
    EXPECT_EQ(x8_variant_positions(), expected);
}

TEST(Simultaneous, RandomAgreement)
{
    InputGenerator gen(46);
    for (int trial = 0; trial < 100; ++trial)
    {
        TrackedMatrix const a = gen.dense(2, 2);
        TrackedMatrix const b = gen.dense(2, 2);
        CountContext c1;
        SimultaneousProduct const f = d4_simultaneous(a, b, c1);
        CountContext c2;
        SimultaneousProduct const g = x8_simultaneous(a, b, c2);
        EXPECT_EQ(c1.bilinear_mults(), 8u);
        EXPECT_EQ(c2.bilinear_mults(), 8u);
        EXPECT_LT(testing::relative_error(f.product.entries(), dense_product(a, b).entries()), 1e-9);
        EXPECT_LT(testing::relative_error(f.variant_product.entries(), dense_product(a, swap_rows(b)).entries()),
                  1e-9);
        EXPECT_LT(testing::relative_error(g.product.entries(), dense_product(a, b).entries()), 1e-9);
        EXPECT_LT(testing::relative_error(g.variant_product.entries(), dense_product(a, g_transform(b)).entries()),
                  1e-9);
    }
}

TEST(Blocked, CountsAndValues)
{
    InputGenerator gen(47);
    for (std::size_t pairs = 1; pairs <= 4; ++pairs)
    {
        for (Variant variant : {Variant::F, Variant::G})
        {
            TrackedMatrix const a = gen.dense(2, 2);
            TrackedMatrix const b = gen.dense(2, 2 * pairs);
            CountContext ctx;
            SimultaneousProduct const p = blocked_simultaneous(a, b, variant, ctx);
            EXPECT_EQ(ctx.bilinear_mults(), 8 * pairs);
            EXPECT_LT(testing::relative_error(p.product.entries(), dense_product(a, b).entries()), 1e-9);
            EXPECT_LT(testing::relative_error(p.variant_product.entries(),
                                              dense_product(a, blocked_variant(b, variant)).entries()),
                      1e-9);
        }
    }
}

TEST(Blocked, SinglePairIsTheKernel)
{
    TrackedMatrix const a = mat2({1, 2, 3, 4});
    TrackedMatrix const b = mat2({5, 6, 7, 8});
    CountContext ctx;
    expect_matrix(blocked_simultaneous(a, b, Variant::F, ctx).variant_product, {17, 20, 41, 48});
    CountContext ctx3;
    InputGenerator gen(48);
    blocked_simultaneous(gen.dense(2, 2), gen.dense(2, 6), Variant::G, ctx3);
    EXPECT_EQ(ctx3.bilinear_mults(), 24u);
}

TEST(Blocked, VariantGSwapsOnlyTheFirstPairs)
{
    TrackedMatrix const b = TrackedMatrix::from_values(2, 6, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    // floor(3/2) = 1 pair gets the first-row swap
    expect_matrix(blocked_variant(b, Variant::G), {8, 7, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6});
    expect_matrix(blocked_variant(b, Variant::F), {7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6});
}

TEST(Blocked, RejectsOddColumns)
{
    CountContext ctx;
    EXPECT_THROW(blocked_simultaneous(mat2({1, 2, 3, 4}), TrackedMatrix(2, 3), Variant::F, ctx),
                 DimensionMismatch);
}

}  // namespace
}  // namespace bilinear
