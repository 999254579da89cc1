#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "bilinear/counted.hpp"
#include "bilinear/structures.hpp"

namespace bilinear {

using Dims3 = std::array<std::size_t, 3>;

//! Dense order-3 complex tensor; entry (i, j, k) lives at ((i d2) + j) d3 + k.
class Tensor3
{
  public:
    Tensor3() = default;
    explicit Tensor3(Dims3 dims);

    Dims3 const& dims() const { return dims_; }
    Complex& operator()(std::size_t i, std::size_t j, std::size_t k)
    {
        return entries_[(i * dims_[1] + j) * dims_[2] + k];
    }
    Complex const& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return entries_[(i * dims_[1] + j) * dims_[2] + k];
    }
    std::vector<Complex> const& entries() const { return entries_; }

  private:
    Dims3 dims_{0, 0, 0};
    std::vector<Complex> entries_;
};

//! lambda * u (x) v (x) w
struct RankOneTerm
{
    Complex lambda{1.0, 0.0};
    std::vector<Complex> u;
    std::vector<Complex> v;
    std::vector<Complex> w;
};

struct TensorDecomposition
{
    Dims3 dims{0, 0, 0};
    std::vector<RankOneTerm> terms;

    //! Throws DimensionMismatch when a factor length disagrees with dims.
    void validate() const;
    //! Sum of the terms as a dense tensor.
    Tensor3 assemble() const;
};

// Builders. Entry (i, j, k) is the k-th coordinate of beta(e_i, e_j).

//! Structured matvec: first mode over basis(shape), second over the input.
Tensor3 structure_tensor(Shape const& shape);
//! mu_{m,n,p}; matrices are indexed row-major.
Tensor3 matmul_tensor(std::size_t m, std::size_t n, std::size_t p);
//! Complex multiplication over the reals, basis (1, i).
Tensor3 complex_mul_tensor();
//! Levi-Civita symbol (i - j)(j - k)(k - i) / 2.
Tensor3 so3_tensor();
//! beta(s, t) = (s1 t2 + s2 t3, -s2 t1 + s3 t2, -s1 t1 - s3 t3).
Tensor3 commutator_beta_tensor();
//! "complex_mul", "so3", "commutator_beta", "matmul:m,n,p", or a kind name
//! with its order ("toeplitz:3"). Throws UnsupportedKind otherwise.
Tensor3 build_structure_tensor(std::string_view spec);

//! w[k] = sum_ij T(i, j, k) u[i] v[j]
std::vector<Complex> contract(Tensor3 const& t,
                              std::vector<Complex> const& u,
                              std::vector<Complex> const& v);

struct VerifyReport
{
    double max_abs_error = 0.0;
    std::size_t term_count = 0;
    bool pass = false;
};

VerifyReport verify_decomposition(Tensor3 const& t,
                                  TensorDecomposition const& d,
                                  double tol);

//! Numerical ranks of the three unfoldings (singular values > tol * sigma_max).
Dims3 flattening_ranks(Tensor3 const& t, double tol = 1e-9);

struct OttavianiReport
{
    bool nonsingular = false;
    double det_magnitude = 0.0;
};

/*!
 * Koszul-flattening test for 3x3x3 tensors.
 *
 * Builds [[0, X3, -X2], [-X3, 0, X1], [X2, -X1, 0]] from the mode-1 slices,
 * scales every row to unit norm and reports |det|. Nonsingular means border
 * rank at least 5. Throws DimensionMismatch for other shapes.
 */
OttavianiReport ottaviani_test(Tensor3 const& t);

//! Sum of |lambda| after normalizing each factor; throws on a zero factor.
double stability_measure(TensorDecomposition const& d);

// Decompositions of complex multiplication over the reals.
TensorDecomposition usual_complex_decomposition();
TensorDecomposition gauss_complex_decomposition();
//! Three symmetric cubes with weight 4/3, stated in the output basis (i, 1).
TensorDecomposition cube_complex_decomposition();
//! "usual", "gauss" or "cube"; throws UnsupportedKind otherwise.
TensorDecomposition named_decomposition(std::string_view name);

}  // namespace bilinear
