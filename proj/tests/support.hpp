#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "bilinear/counted.hpp"
#include "bilinear/structures.hpp"

namespace bilinear::testing {

inline TrackedVector vars(std::initializer_list<Complex> values)
{
    return variables(std::vector<Complex>(values));
}

inline double relative_error(std::vector<Complex> const& fast, std::vector<Complex> const& ref)
{
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i)
    {
        diff = std::max(diff, std::abs(fast[i] - ref[i]));
        scale = std::max(scale, std::abs(ref[i]));
    }
    return diff / std::max(scale, 1e-300);
}

inline double relative_error(TrackedSpan fast, TrackedSpan ref)
{
    return relative_error(values_of(fast), values_of(ref));
}

inline void expect_values(TrackedSpan got, std::vector<Complex> const& want, double tol = 1e-12)
{
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
    {
        EXPECT_NEAR(got[i].value().real(), want[i].real(), tol) << "entry " << i;
        EXPECT_NEAR(got[i].value().imag(), want[i].imag(), tol) << "entry " << i;
    }
}

inline void expect_matrix(TrackedMatrix const& got,
                          std::vector<Complex> const& row_major,
                          double tol = 1e-12)
{
    expect_values(got.entries(), row_major, tol);
}

}  // namespace bilinear::testing
