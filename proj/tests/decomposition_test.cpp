#include <gtest/gtest.h>

#include "bilinear/decomposition.hpp"
#include "bilinear/kernels.hpp"
#include "bilinear/random.hpp"
#include "bilinear/tensor_lab.hpp"
#include "support.hpp"

namespace bilinear {
namespace {

TEST(Decomposition, CirculantOrderOneIsOneTerm)
{
    TensorDecomposition const d = extract_decomposition(make_shape(Kind::Circulant, 1));
    ASSERT_EQ(d.terms.size(), 1u);
    Complex const product = d.terms[0].lambda * d.terms[0].u[0] * d.terms[0].v[0] * d.terms[0].w[0];
    EXPECT_NEAR(std::abs(product - Complex(1.0)), 0.0, 1e-14);
}

TEST(Decomposition, ToeplitzOrderTwo)
{
    Shape const shape = make_shape(Kind::Toeplitz, 2);
    TensorDecomposition const d = extract_decomposition(shape);
    EXPECT_EQ(d.terms.size(), 3u);
    EXPECT_TRUE(verify_decomposition(structure_tensor(shape), d, 1e-8).pass);
}

TEST(Decomposition, SymmetricOrderThree)
{
    Shape const shape = make_shape(Kind::Symmetric, 3);
    TensorDecomposition const d = extract_decomposition(shape);
    EXPECT_EQ(d.terms.size(), 6u);
    EXPECT_TRUE(verify_decomposition(structure_tensor(shape), d, 1e-8).pass);
}

TEST(Decomposition, EveryFlatKindSumsToItsTensor)
{
    for (Kind kind : {Kind::Circulant,
                      Kind::FCirculant,
                      Kind::Toeplitz,
                      Kind::Hankel,
                      Kind::UpperTriangularToeplitz,
                      Kind::ToeplitzPlusHankel,
                      Kind::Symmetric,
                      Kind::SkewSymmetric})
    {
        for (std::size_t n = 1; n <= 6; ++n)
        {
            Shape const shape = make_shape(kind, n);
            TensorDecomposition const d = extract_decomposition(shape);
            EXPECT_EQ(d.terms.size(), formula_count(shape)) << kind_name(kind) << " n=" << n;
            VerifyReport const r = verify_decomposition(structure_tensor(shape), d, 1e-8);
            EXPECT_TRUE(r.pass) << kind_name(kind) << " n=" << n << " err=" << r.max_abs_error;
        }
    }
}

TEST(Decomposition, ProgramReplaysTheKernel)
{
    InputGenerator gen(31);
    Shape const shape = make_shape(Kind::ToeplitzPlusHankel, 4);
    auto const program = bilinear_program(shape);
    EXPECT_EQ(program->size(), 13u);
    StructuredMatrix const m = gen.matrix(shape);
    std::vector<Complex> const params = values_of(m.data);
    std::vector<Complex> const x = gen.complex_vector(4);
    std::vector<Complex> out(4);
    for (std::size_t i = 0; i < program->size(); ++i)
    {
        Complex lhs{};
        Complex rhs{};
        for (std::size_t p = 0; p < params.size(); ++p)
        {
            lhs += program->u[i][p] * params[p];
        }
        for (std::size_t q = 0; q < x.size(); ++q)
        {
            rhs += program->v[i][q] * x[q];
        }
        for (std::size_t k = 0; k < out.size(); ++k)
        {
            out[k] += program->w[i][k] * lhs * rhs;
        }
    }
    EXPECT_LT(testing::relative_error(out, values_of(run_kernel(m, variables(x)).output)), 1e-10);
    EXPECT_EQ(bilinear_program(shape).get(), program.get());
}

TEST(Decomposition, TightToeplitzPlusHankel)
{
    for (std::size_t n = 2; n <= 6; ++n)
    {
        Shape const shape = make_shape(Kind::ToeplitzPlusHankel, n);
        auto const kernel = [n](TrackedSpan p, TrackedSpan x, CountContext& ctx) {
            return tph_matvec_tight(p.first(2 * n - 1), p.subspan(2 * n - 1), x, ctx);
        };
        TensorDecomposition const d = to_decomposition(probe_program(param_count(shape), n, kernel));
        EXPECT_EQ(d.terms.size(), 4 * n - 4);
        EXPECT_TRUE(verify_decomposition(structure_tensor(shape), d, 1e-8).pass) << "n=" << n;
    }
}

TEST(Decomposition, MultilevelBttb)
{
    Shape const shape = make_multilevel_shape({make_shape(Kind::Toeplitz, 2), make_shape(Kind::Toeplitz, 2)});
    TensorDecomposition const d = extract_decomposition(shape);
    EXPECT_EQ(d.terms.size(), 9u);
    EXPECT_TRUE(verify_decomposition(structure_tensor(shape), d, 1e-8).pass);
}

}  // namespace
}  // namespace bilinear
