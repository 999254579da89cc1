#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bilinear {

using Complex = std::complex<double>;

enum class ScalarKind : std::uint8_t
{
    Constant,
    Variable,
};

/*!
 * A complex value tagged as a constant or an indeterminate.
 *
 * Only products of two Variables are bilinear multiplications. Products that
 * involve a Constant are scalar multiplications, and additions are free. The
 * tag never influences the numeric value.
 */
class TrackedScalar
{
  public:
    constexpr TrackedScalar() = default;
    constexpr TrackedScalar(Complex value, ScalarKind kind)
        : value_(value), kind_(kind)
    {
    }

    static constexpr TrackedScalar constant(Complex value)
    {
        return {value, ScalarKind::Constant};
    }
    static constexpr TrackedScalar variable(Complex value)
    {
        return {value, ScalarKind::Variable};
    }

    constexpr Complex value() const { return value_; }
    constexpr ScalarKind kind() const { return kind_; }
    constexpr bool is_variable() const { return kind_ == ScalarKind::Variable; }

    //! True for a Constant zero, i.e. an entry an algorithm may skip.
    constexpr bool is_structural_zero() const
    {
        return kind_ == ScalarKind::Constant && value_ == Complex{};
    }

    friend constexpr bool
    operator==(TrackedScalar const&, TrackedScalar const&) = default;

  private:
    Complex value_{};
    ScalarKind kind_ = ScalarKind::Constant;
};

using TrackedVector = std::vector<TrackedScalar>;
using TrackedSpan = std::span<TrackedScalar const>;

struct OperationCounts
{
    std::uint64_t bilinear_mults = 0;
    std::uint64_t divisions = 0;
    std::uint64_t scalar_mults = 0;
    std::uint64_t additions = 0;

    friend bool operator==(OperationCounts const&, OperationCounts const&) = default;
};

OperationCounts operator-(OperationCounts const& later, OperationCounts const& earlier);

/*!
 * Observer of bilinear products.
 *
 * on_product is called for every Variable x Variable product, in execution
 * order, with the operand values; its return value becomes the value of the
 * product. Returning lhs * rhs leaves the computation unchanged.
 */
class ProductObserver
{
  public:
    virtual ~ProductObserver() = default;
    virtual Complex on_product(std::size_t index, Complex lhs, Complex rhs) = 0;
};

/*!
 * Tally of one computation's arithmetic.
 *
 * A context is threaded explicitly through every counted operation. It must
 * not be shared by concurrent computations.
 */
class CountContext
{
  public:
    static constexpr double default_zero_threshold = 1e-300;

    CountContext() = default;
    explicit CountContext(double zero_threshold) : zero_threshold_(zero_threshold)
    {
    }

    OperationCounts const& counts() const { return counts_; }
    std::uint64_t bilinear_mults() const { return counts_.bilinear_mults; }
    std::uint64_t divisions() const { return counts_.divisions; }
    double zero_threshold() const { return zero_threshold_; }

    void set_observer(ProductObserver* observer) { observer_ = observer; }

    // Recording hooks used by the arithmetic functions below.
    Complex record_bilinear(Complex lhs, Complex rhs);
    void record_division() { ++counts_.divisions; }
    void record_scalar_mult() { ++counts_.scalar_mults; }
    void record_addition() { ++counts_.additions; }

  private:
    OperationCounts counts_;
    double zero_threshold_ = default_zero_threshold;
    ProductObserver* observer_ = nullptr;
};

TrackedScalar mul(TrackedScalar a, TrackedScalar b, CountContext& ctx);
TrackedScalar add(TrackedScalar a, TrackedScalar b, CountContext& ctx);
TrackedScalar sub(TrackedScalar a, TrackedScalar b, CountContext& ctx);
TrackedScalar neg(TrackedScalar a);
//! Throws DivisionByZero when |b| is at or below the context's zero threshold.
TrackedScalar div(TrackedScalar a, TrackedScalar b, CountContext& ctx);

//! c * a for a constant c; a scalar multiplication.
inline TrackedScalar scale(Complex c, TrackedScalar a, CountContext& ctx)
{
    return mul(TrackedScalar::constant(c), a, ctx);
}

TrackedVector variables(std::span<Complex const> values);
TrackedVector constants(std::span<Complex const> values);
std::vector<Complex> values_of(TrackedSpan v);

}  // namespace bilinear
