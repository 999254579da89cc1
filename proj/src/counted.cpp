#include "bilinear/counted.hpp"

#include <cmath>

#include "bilinear/errors.hpp"

namespace bilinear {

OperationCounts operator-(OperationCounts const& later, OperationCounts const& earlier)
{
    return {later.bilinear_mults - earlier.bilinear_mults,
            later.divisions - earlier.divisions,
            later.scalar_mults - earlier.scalar_mults,
            later.additions - earlier.additions};
}

Complex CountContext::record_bilinear(Complex lhs, Complex rhs)
{
    std::size_t const index = counts_.bilinear_mults++;
    if (observer_)
    {
        return observer_->on_product(index, lhs, rhs);
    }
    return lhs * rhs;
}

namespace {

ScalarKind join(TrackedScalar a, TrackedScalar b)
{
    return (a.is_variable() || b.is_variable()) ? ScalarKind::Variable
                                                : ScalarKind::Constant;
}

}  // namespace

TrackedScalar mul(TrackedScalar a, TrackedScalar b, CountContext& ctx)
{
    if (a.is_variable() && b.is_variable())
    {
        return TrackedScalar::variable(ctx.record_bilinear(a.value(), b.value()));
    }
    ctx.record_scalar_mult();
    return {a.value() * b.value(), join(a, b)};
}

TrackedScalar add(TrackedScalar a, TrackedScalar b, CountContext& ctx)
{
    ctx.record_addition();
    return {a.value() + b.value(), join(a, b)};
}

TrackedScalar sub(TrackedScalar a, TrackedScalar b, CountContext& ctx)
{
    ctx.record_addition();
    return {a.value() - b.value(), join(a, b)};
}

TrackedScalar neg(TrackedScalar a)
{
    return {-a.value(), a.kind()};
}

TrackedScalar div(TrackedScalar a, TrackedScalar b, CountContext& ctx)
{
    if (std::abs(b.value()) <= ctx.zero_threshold())
    {
        throw DivisionByZero("division by a value with magnitude at or below "
                             "the zero threshold");
    }
    if (b.is_variable())
    {
        ctx.record_division();
    }
    else
    {
        ctx.record_scalar_mult();
    }
    return {a.value() / b.value(), join(a, b)};
}

TrackedVector variables(std::span<Complex const> values)
{
    TrackedVector out;
    out.reserve(values.size());
    for (Complex v : values)
    {
        out.push_back(TrackedScalar::variable(v));
    }
    return out;
}

TrackedVector constants(std::span<Complex const> values)
{
    TrackedVector out;
    out.reserve(values.size());
    for (Complex v : values)
    {
        out.push_back(TrackedScalar::constant(v));
    }
    return out;
}

std::vector<Complex> values_of(TrackedSpan v)
{
    std::vector<Complex> out;
    out.reserve(v.size());
    for (auto const& s : v)
    {
        out.push_back(s.value());
    }
    return out;
}

}  // namespace bilinear
