#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "hv/bigint.hpp"

namespace hv {

// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    static Rational from_string(std::string_view s);  // "p" or "p/q"

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }
    Rational inverse() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;  // "p" or "p/q"

private:
    BigInt num_, den_;
    void reduce();
};

// Exact field element: rat + irr*sqrt(d). Invariant: irr == 0 implies d == 0,
// so structural equality is field equality and rational-mode values mix freely
// with quadratic-mode ones over the same d. d is validated squarefree >= 2.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : rat_(v) {}
    Scalar(Rational r) : rat_(std::move(r)) {}
    Scalar(Rational rat, Rational irr, long long d);

    static Scalar sqrt_of(long long d) { return Scalar(Rational(0), Rational(1), d); }
    static void validate_sqrt_d(long long d);  // throws unless squarefree and >= 2

    const Rational& rational_part() const { return rat_; }
    const Rational& sqrt_part() const { return irr_; }
    long long sqrt_d() const { return d_; }
    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
    bool is_one() const { return rat_.is_one() && irr_.is_zero(); }
    bool is_rational() const { return irr_.is_zero(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const = default;

    // Canonical text: "p/q" in rational mode, "p/q+r/s*sqrt(d)" (or "-") with
    // the rational part always present and the sqrt coefficient explicit.
    std::string to_string() const;
    static Scalar from_string(std::string_view s);

private:
    Rational rat_;
    Rational irr_;
    long long d_ = 0;
    void normalize();
    static long long merge_d(const Scalar& a, const Scalar& b);
};

}  // namespace hv
