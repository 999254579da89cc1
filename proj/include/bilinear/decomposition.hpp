#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "bilinear/structures.hpp"
#include "bilinear/tensor_lab.hpp"

namespace bilinear {

/*!
 * The straight-line bilinear program a kernel executes.
 *
 * Term i multiplies (u[i] . params) by (v[i] . x), and output k is
 * sum_i w[i][k] times that product.
 */
struct BilinearProgram
{
    std::size_t param_count = 0;
    std::size_t input_count = 0;
    std::vector<std::vector<Complex>> u;
    std::vector<std::vector<Complex>> v;
    std::vector<std::vector<Complex>> w;

    std::size_t size() const { return u.size(); }
};

//! Matrix-vector kernel taking its parameters and input as Variables.
using MatvecKernel = std::function<TrackedVector(TrackedSpan params, TrackedSpan x, CountContext& ctx)>;

/*!
 * Recovers the program of any kernel that multiplies parameter-side by
 * input-side operands, with a product count independent of the values.
 */
BilinearProgram probe_program(std::size_t param_count, std::size_t input_count, MatvecKernel const& kernel);

/*!
 * Recovers the program of structured_matvec for a shape by probing.
 *
 * Results for shapes other than Sparse and Multilevel are cached; the
 * function is thread-safe.
 */
std::shared_ptr<BilinearProgram const> bilinear_program(Shape const& shape);

//! Rank-one terms of the kernel for the shape, with lambda = 1.
TensorDecomposition extract_decomposition(Shape const& shape);
//! Rank-one terms of a probed program, with lambda = 1.
TensorDecomposition to_decomposition(BilinearProgram const& program);

}  // namespace bilinear
