#pragma once

#include <cstddef>
#include <vector>

#include "bilinear/counted.hpp"

namespace bilinear {

//! Powers of omega = exp(2 pi i / n).
class RootTable
{
  public:
    explicit RootTable(std::size_t n);

    std::size_t size() const { return powers_.size(); }
    //! omega^k for any integer k (reduced mod n).
    Complex power(long long k) const;

  private:
    std::vector<Complex> powers_;
};

//! |f|^(1/n) exp(i arg(f) / n) with arg in (-pi, pi].
Complex principal_root(Complex f, std::size_t n);

/*!
 * Discrete Fourier transform with constant twiddles.
 *
 * out[k] = sum_j v[j] omega^(jk). Only Constant x Variable products occur, so
 * the bilinear count is unchanged.
 */
TrackedVector dft(TrackedSpan v, CountContext& ctx);

//! out[j] = (1/n) sum_k v[k] omega^(-jk).
TrackedVector idft(TrackedSpan v, CountContext& ctx);

/*!
 * Evaluation at the n roots of x^n = f.
 *
 * out[k] = sum_j v[j] (rho omega^k)^j with rho = principal_root(f, n). With
 * f = 1 this is dft. Throws std::invalid_argument when f = 0.
 */
TrackedVector scaled_dft(TrackedSpan v, Complex f, CountContext& ctx);

//! Inverse of scaled_dft: interpolation from the n roots of x^n = f.
TrackedVector scaled_idft(TrackedSpan v, Complex f, CountContext& ctx);

}  // namespace bilinear
