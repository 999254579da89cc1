#include "bilinear/random.hpp"

namespace bilinear {

double InputGenerator::uniform()
{
    double const u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

Complex InputGenerator::complex()
{
    double const re = uniform();
    double const im = uniform();
    return {re, im};
}

std::vector<Complex> InputGenerator::complex_vector(std::size_t n)
{
    std::vector<Complex> out(n);
    for (auto& v : out)
    {
        v = complex();
    }
    return out;
}

TrackedVector InputGenerator::variables(std::size_t n)
{
    return bilinear::variables(complex_vector(n));
}

std::size_t InputGenerator::index(std::size_t bound)
{
    // bound is tiny here, so the modulo bias is irrelevant for test inputs
    return static_cast<std::size_t>(engine_() % bound);
}

StructuredMatrix InputGenerator::matrix(Shape const& shape)
{
    return {shape, variables(param_count(shape))};
}

TrackedMatrix InputGenerator::dense(std::size_t rows, std::size_t cols)
{
    return TrackedMatrix::from_values(rows, cols, complex_vector(rows * cols));
}

}  // namespace bilinear
