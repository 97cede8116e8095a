#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hv/error.hpp"

namespace hv {

// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
// Magnitudes in the library stay small (tens of digits); everything here is
// schoolbook. No silent narrowing: to_int64 throws when out of range.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: q rounds toward zero, remainder carries a's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
    static BigInt lcm(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long long e);

    bool operator==(const BigInt& o) const { return negative_ == o.negative_ && limbs_ == o.limbs_; }
    std::strong_ordering operator<=>(const BigInt& o) const;

    std::string to_string() const;
    long long to_int64() const;  // throws error when out of range
    bool fits_int64() const;

    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

private:
    bool negative_ = false;            // false when zero
    std::vector<uint32_t> limbs_;      // little-endian, normalized

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace hv
