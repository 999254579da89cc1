#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bilinear/counted.hpp"
#include "bilinear/structures.hpp"

namespace bilinear {

//! Finite group given by its multiplication table.
class GroupTable
{
  public:
    /*!
     * Validates closure, identity and inverses; associativity is checked
     * exhaustively for order <= 64. Throws MalformedStructure on failure.
     */
    GroupTable(std::vector<std::vector<std::size_t>> product,
               std::vector<std::string> element_names);

    std::size_t order() const { return product_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return product_[a][b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::string const& name(std::size_t a) const { return names_[a]; }
    //! Throws UnsupportedKind for an unknown name.
    std::size_t index_of(std::string_view name) const;

  private:
    std::vector<std::vector<std::size_t>> product_;
    std::vector<std::string> names_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

//! C_n with elements g^0 ... g^(n-1).
GroupTable cyclic_group(std::size_t n);
//! D4 = <x, y | x^4 = y^2 = 1, yxy = x^-1>, order (1, x, x^2, x^3, y, xy, x^2y, x^3y).
GroupTable dihedral8();
//! Index of x^a y^b in dihedral8().
std::size_t d4_element(int a, int b);

struct GroupAlgebraElement
{
    TrackedVector coefficients;
};

//! Exhaustive check that s t u = s' t' u' forces s = s', t = t', u = u'.
bool tpp_check(GroupTable const& g,
               std::vector<std::size_t> const& s,
               std::vector<std::size_t> const& t,
               std::vector<std::size_t> const& u);

//! Convolution skipping Constant-zero coefficients.
GroupAlgebraElement group_algebra_mul(GroupTable const& g,
                                      GroupAlgebraElement const& a,
                                      GroupAlgebraElement const& b,
                                      CountContext& ctx);

/*!
 * Matrix product through C[G]: A -> sum a_ij s_i t_j^-1,
 * B -> sum b_jk t_j u_k^-1, and (AB)_ik is the coefficient of s_i u_k^-1.
 *
 * Throws TripleProductViolation when the sets fail the triple product
 * property or when the read-off is ambiguous, DimensionMismatch on sizes.
 */
TrackedMatrix cu_matmul(GroupTable const& g,
                        std::vector<std::size_t> const& s,
                        std::vector<std::size_t> const& t,
                        std::vector<std::size_t> const& u,
                        TrackedMatrix const& a,
                        TrackedMatrix const& b,
                        CountContext& ctx);

struct TppPreset
{
    std::string name;
    GroupTable group;
    std::vector<std::size_t> s;
    std::vector<std::size_t> t;
    std::vector<std::size_t> u;
};

//! "d4-222" or "cyclic-1n1" (C_n with n = cyclic_order); throws UnsupportedKind.
TppPreset tpp_preset(std::string_view name, std::size_t cyclic_order = 4);

/*!
 * Block-diagonal coordinates of an element of C[D4]: the four
 * one-dimensional characters and the 2x2 block (row-major).
 */
struct D4Coordinates
{
    std::array<TrackedScalar, 4> characters;
    std::array<TrackedScalar, 4> block;
};

D4Coordinates d4_transform(GroupAlgebraElement const& a, CountContext& ctx);
GroupAlgebraElement d4_inverse_transform(D4Coordinates const& c, CountContext& ctx);

struct SimultaneousProduct
{
    TrackedMatrix product;
    TrackedMatrix variant_product;
};

enum class Variant
{
    F,  //!< rows of B swapped
    G,  //!< rows swapped, then the first-row entries swapped
};

TrackedMatrix swap_rows(TrackedMatrix const& b);
TrackedMatrix g_transform(TrackedMatrix const& b);

//! (AB, AB^f) for 2x2 matrices with eight products through C[D4].
SimultaneousProduct d4_simultaneous(TrackedMatrix const& a, TrackedMatrix const& b, CountContext& ctx);
//! (AB, AB^g) for 2x2 matrices with eight products through C[x]/(x^8 - 1).
SimultaneousProduct x8_simultaneous(TrackedMatrix const& a, TrackedMatrix const& b, CountContext& ctx);

/*!
 * Coefficient positions of AB^g in the x8 product, row-major, identified by
 * matching bilinear forms against the dense product once.
 */
std::array<std::size_t, 4> const& x8_variant_positions();

/*!
 * A is 2x2 and B is 2x2n. Variant F swaps the rows of B. Variant G also
 * swaps the entries of the first row within column pairs 1 ... floor(n/2);
 * the remaining pairs only have their rows swapped. Eight products per pair.
 */
SimultaneousProduct blocked_simultaneous(TrackedMatrix const& a,
                                         TrackedMatrix const& b,
                                         Variant variant,
                                         CountContext& ctx);

//! B^variant for a 2x2n matrix under the blocked rule above.
TrackedMatrix blocked_variant(TrackedMatrix const& b, Variant variant);

}  // namespace bilinear
