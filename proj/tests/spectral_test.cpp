#include <gtest/gtest.h>

#include <numbers>
#include <stdexcept>

#include "bilinear/random.hpp"
#include "bilinear/spectral.hpp"
#include "support.hpp"

namespace bilinear {
namespace {

using testing::expect_values;
using testing::vars;

TEST(Spectral, RootTableWrapsNegativePowers)
{
    RootTable const roots(4);
    EXPECT_NEAR(std::abs(roots.power(1) - Complex(0.0, 1.0)), 0.0, 1e-15);
    EXPECT_EQ(roots.power(-1), roots.power(3));
    EXPECT_EQ(roots.power(9), roots.power(1));
}

TEST(Spectral, DftOfSmallVector)
{
    CountContext ctx;
    expect_values(dft(vars({1.0, 2.0}), ctx), {3.0, -1.0});
    expect_values(dft(vars({1.0, 0.0, 0.0, 0.0}), ctx), {1.0, 1.0, 1.0, 1.0});
    EXPECT_EQ(ctx.bilinear_mults(), 0u);
}

TEST(Spectral, InverseRoundTrip)
{
    InputGenerator gen(11);
    for (std::size_t n = 1; n <= 9; ++n)
    {
        CountContext ctx;
        TrackedVector const v = gen.variables(n);
        EXPECT_LT(testing::relative_error(idft(dft(v, ctx), ctx), v), 1e-13);
        for (Complex f : {Complex{-1.0, 0.0}, Complex{2.0, 0.0}, Complex{0.0, 1.0}})
        {
            EXPECT_LT(testing::relative_error(scaled_idft(scaled_dft(v, f, ctx), f, ctx), v), 1e-12);
        }
        EXPECT_EQ(ctx.bilinear_mults(), 0u);
    }
}

TEST(Spectral, ScaledDftEvaluatesAtRootsOfF)
{
    CountContext ctx;
    // x^2 = -1 has roots i and -i, in that order
    expect_values(scaled_dft(vars({1.0, 2.0}), Complex{-1.0, 0.0}, ctx),
                  {Complex{1.0, 2.0}, Complex{1.0, -2.0}}, 1e-15);
    EXPECT_NEAR(std::abs(principal_root(Complex{-1.0, 0.0}, 2) - Complex(0.0, 1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(principal_root(Complex{-1.0, -0.0}, 2) - Complex(0.0, 1.0)), 0.0, 1e-15);
}

TEST(Spectral, ScaledDftWithUnitFMatchesDft)
{
    InputGenerator gen(3);
    CountContext ctx;
    TrackedVector const v = gen.variables(6);
    EXPECT_EQ(values_of(scaled_dft(v, Complex{1.0, 0.0}, ctx)), values_of(dft(v, ctx)));
}

TEST(Spectral, Errors)
{
    CountContext ctx;
    EXPECT_THROW(scaled_dft(vars({1.0}), Complex{}, ctx), std::invalid_argument);
    EXPECT_THROW(dft(TrackedVector{}, ctx), std::invalid_argument);
    EXPECT_THROW(RootTable(0), std::invalid_argument);
}

}  // namespace
}  // namespace bilinear
