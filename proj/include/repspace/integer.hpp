#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace repspace
{

/// Arbitrary-precision integer used for every exact computation.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
/// Exact rational, used by the closed-form counts.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

struct OverflowError
{
};

/**
 * 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
 *
 * The elimination kernels run on this type first and are restarted on
 * Integer when an intermediate value leaves the int64 range.
 */
class CheckedInt64
{
public:
    constexpr CheckedInt64() = default;
    constexpr CheckedInt64(std::int64_t v) : value_(v) {}

    explicit CheckedInt64(const Integer& v)
    {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw OverflowError{};
        value_ = v.convert_to<std::int64_t>();
    }

    constexpr std::int64_t value() const { return value_; }

    friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.value_, b.value_, &r))
            throw OverflowError{};
        return r;
    }
    friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.value_, b.value_, &r))
            throw OverflowError{};
        return r;
    }
    friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.value_, b.value_, &r))
            throw OverflowError{};
        return r;
    }
    // Truncating division, like the builtin.
    friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b)
    {
        if (a.value_ == std::numeric_limits<std::int64_t>::min() && b.value_ == -1)
            throw OverflowError{};
        return a.value_ / b.value_;
    }
    friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b)
    {
        if (b.value_ == -1)
            return 0;
        return a.value_ % b.value_;
    }
    CheckedInt64 operator-() const
    {
        if (value_ == std::numeric_limits<std::int64_t>::min())
            throw OverflowError{};
        return -value_;
    }
    CheckedInt64& operator+=(CheckedInt64 b) { return *this = *this + b; }
    CheckedInt64& operator-=(CheckedInt64 b) { return *this = *this - b; }
    CheckedInt64& operator*=(CheckedInt64 b) { return *this = *this * b; }

    friend constexpr bool operator==(CheckedInt64 a, CheckedInt64 b) = default;
    friend constexpr auto operator<=>(CheckedInt64 a, CheckedInt64 b) = default;

private:
    std::int64_t value_ = 0;
};

inline CheckedInt64 abs(CheckedInt64 a) { return a.value() < 0 ? -a : a; }
inline Integer to_integer(CheckedInt64 a) { return Integer(a.value()); }
inline const Integer& to_integer(const Integer& a) { return a; }

inline Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline Integer ipow(const Integer& base, unsigned exp)
{
    Integer r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r *= base;
    return r;
}

} // namespace repspace
