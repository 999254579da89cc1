#include "bilinear/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bilinear {

RootTable::RootTable(std::size_t n)
{
    if (n == 0)
    {
        throw std::invalid_argument("RootTable needs n >= 1");
    }
    powers_.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        double const angle = 2 * std::numbers::pi * static_cast<double>(k)
                             / static_cast<double>(n);
        powers_.push_back(std::polar(1.0, angle));
    }
}

Complex RootTable::power(long long k) const
{
    auto const n = static_cast<long long>(powers_.size());
    long long r = k % n;
    if (r < 0)
    {
        r += n;
    }
    return powers_[static_cast<std::size_t>(r)];
}

Complex principal_root(Complex f, std::size_t n)
{
    if (f == Complex{})
    {
        throw std::invalid_argument("principal_root of zero");
    }
    double const nn = static_cast<double>(n);
    // std::arg returns a value in [-pi, pi]; -pi only arises for a negative
    // real with a negative-zero imaginary part, which we fold onto +pi.
    double arg = std::arg(f);
    if (arg == -std::numbers::pi)
    {
        arg = std::numbers::pi;
    }
    return std::polar(std::pow(std::abs(f), 1.0 / nn), arg / nn);
}

namespace {

TrackedScalar weighted_sum(TrackedSpan v,
                           std::vector<Complex> const& weights,
                           CountContext& ctx)
{
    TrackedScalar acc = scale(weights[0], v[0], ctx);
    for (std::size_t j = 1; j < v.size(); ++j)
    {
        acc = add(acc, scale(weights[j], v[j], ctx), ctx);
    }
    return acc;
}

void require_nonempty(TrackedSpan v)
{
    if (v.empty())
    {
        throw std::invalid_argument("transform of an empty vector");
    }
}

}  // namespace

TrackedVector dft(TrackedSpan v, CountContext& ctx)
{
    return scaled_dft(v, Complex{1.0, 0.0}, ctx);
}

TrackedVector idft(TrackedSpan v, CountContext& ctx)
{
    return scaled_idft(v, Complex{1.0, 0.0}, ctx);
}

TrackedVector scaled_dft(TrackedSpan v, Complex f, CountContext& ctx)
{
    require_nonempty(v);
    if (f == Complex{})
    {
        throw std::invalid_argument("scaled_dft requires f != 0");
    }
    std::size_t const n = v.size();
    RootTable const roots(n);
    Complex const rho = (f == Complex{1.0, 0.0}) ? Complex{1.0, 0.0}
                                                  : principal_root(f, n);
    std::vector<Complex> rho_pow(n);
    rho_pow[0] = 1.0;
    for (std::size_t j = 1; j < n; ++j)
    {
        rho_pow[j] = rho_pow[j - 1] * rho;
    }

    TrackedVector out;
    out.reserve(n);
    std::vector<Complex> weights(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        for (std::size_t j = 0; j < n; ++j)
        {
            weights[j] = rho_pow[j] * roots.power(static_cast<long long>(j * k));
        }
        out.push_back(weighted_sum(v, weights, ctx));
    }
    return out;
}

TrackedVector scaled_idft(TrackedSpan v, Complex f, CountContext& ctx)
{
    require_nonempty(v);
    if (f == Complex{})
    {
        throw std::invalid_argument("scaled_idft requires f != 0");
    }
    std::size_t const n = v.size();
    RootTable const roots(n);
    Complex const rho = (f == Complex{1.0, 0.0}) ? Complex{1.0, 0.0}
                                                  : principal_root(f, n);
    double const inv_n = 1.0 / static_cast<double>(n);

    TrackedVector out;
    out.reserve(n);
    std::vector<Complex> weights(n);
    Complex inv_rho_pow{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j)
    {
        for (std::size_t k = 0; k < n; ++k)
        {
            weights[k] = inv_n * inv_rho_pow
                         * roots.power(-static_cast<long long>(j * k));
        }
        out.push_back(weighted_sum(v, weights, ctx));
        inv_rho_pow /= rho;
    }
    return out;
}

}  // namespace bilinear
