#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bilinear/counted.hpp"
#include "bilinear/structures.hpp"

namespace bilinear {

/*!
 * Seeded source of test inputs.
 *
 * std::mt19937_64 with its standard seeding; a draw u = (next() >> 11) * 2^-53
 * lies in [0, 1) and is mapped to 2u - 1. Complex values draw the real part
 * first, then the imaginary part. The mapping avoids std distributions, whose
 * output is implementation-defined, so sequences are identical everywhere.
 */
class InputGenerator
{
  public:
    explicit InputGenerator(std::uint64_t seed) : engine_(seed) {}

    //! Uniform in [-1, 1).
    double uniform();
    Complex complex();
    std::vector<Complex> complex_vector(std::size_t n);
    //! n Variables with random values.
    TrackedVector variables(std::size_t n);
    //! Uniform integer in [0, bound).
    std::size_t index(std::size_t bound);

    //! Random data for a shape.
    StructuredMatrix matrix(Shape const& shape);
    //! Dense matrix of Variables.
    TrackedMatrix dense(std::size_t rows, std::size_t cols);

  private:
    std::mt19937_64 engine_;
};

}  // namespace bilinear
