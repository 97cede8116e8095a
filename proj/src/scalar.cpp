#include "hv/scalar.hpp"

namespace hv {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    return Rational(den_, num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

void Scalar::validate_sqrt_d(long long d) {
    if (d < 2) throw error("sqrt extension requires d >= 2, got " + std::to_string(d));
    for (long long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) throw error("sqrt extension requires squarefree d, got " + std::to_string(d));
    }
}

Scalar::Scalar(Rational rat, Rational irr, long long d) : rat_(std::move(rat)), irr_(std::move(irr)), d_(d) {
    if (!irr_.is_zero()) validate_sqrt_d(d_);
    normalize();
}

void Scalar::normalize() {
    if (irr_.is_zero()) d_ = 0;
}

long long Scalar::merge_d(const Scalar& a, const Scalar& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    throw error("mixed quadratic extensions sqrt(" + std::to_string(a.d_) + ") and sqrt(" + std::to_string(b.d_) + ")");
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.rat_ = -out.rat_;
    out.irr_ = -out.irr_;
    return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    long long d = Scalar::merge_d(a, b);
    Scalar out;
    out.rat_ = a.rat_ + b.rat_;
    out.irr_ = a.irr_ + b.irr_;
    out.d_ = d;
    out.normalize();
    return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    long long d = Scalar::merge_d(a, b);
    Scalar out;
    out.rat_ = a.rat_ * b.rat_ + a.irr_ * b.irr_ * Rational(d);
    out.irr_ = a.rat_ * b.irr_ + a.irr_ * b.rat_;
    out.d_ = d;
    out.normalize();
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    if (irr_.is_zero()) return Scalar(rat_.inverse());
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // because sqrt(d) is irrational for squarefree d >= 2.
    Rational norm = rat_ * rat_ - irr_ * irr_ * Rational(d_);
    return Scalar(rat_ / norm, -(irr_ / norm), d_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar out(1), x = *this;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1) out *= x;
        x *= x;
        k >>= 1;
    }
    return out;
}

std::string Scalar::to_string() const {
    if (irr_.is_zero()) return rat_.to_string();
    Rational abs_irr = irr_.sign() < 0 ? -irr_ : irr_;
    std::string out = rat_.to_string();
    out += irr_.sign() < 0 ? "-" : "+";
    out += abs_irr.to_string() + "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

Scalar Scalar::from_string(std::string_view s) {
    // Accepts "p/q", "p/q+r/s*sqrt(d)", "p/q-r/s*sqrt(d)", "r/s*sqrt(d)", "sqrt(d)".
    auto fail = [&] { throw error("invalid scalar literal '" + std::string(s) + "'"); };
    size_t star = s.find("*sqrt(");
    size_t bare = s.find("sqrt(");
    if (star == std::string_view::npos && bare == std::string_view::npos)
        return Scalar(Rational::from_string(s));

    std::string_view head;   // leading rational (may be empty)
    std::string_view coeff;  // sqrt coefficient (may be empty -> 1)
    std::string_view dpart;
    if (star != std::string_view::npos) {
        size_t close = s.find(')', star);
        if (close == std::string_view::npos || close + 1 != s.size()) fail();
        dpart = s.substr(star + 6, close - star - 6);
        std::string_view lhs = s.substr(0, star);
        // split lhs at the last +/- that is not the leading sign
        size_t split = std::string_view::npos;
        for (size_t i = lhs.size(); i-- > 1;) {
            if ((lhs[i] == '+' || lhs[i] == '-') && lhs[i - 1] != '/') {
                split = i;
                break;
            }
        }
        if (split == std::string_view::npos) {
            coeff = lhs;
        } else {
            head = lhs.substr(0, split);
            coeff = lhs.substr(split);  // keeps the sign; "+r/s" parses fine
        }
    } else {
        size_t close = s.find(')', bare);
        if (close == std::string_view::npos || close + 1 != s.size()) fail();
        dpart = s.substr(bare + 5, close - bare - 5);
        std::string_view lhs = s.substr(0, bare);
        if (lhs.empty() || lhs == "+") {
            coeff = "1";
        } else if (lhs == "-") {
            coeff = "-1";
        } else {
            fail();
        }
    }
    long long d = BigInt::from_string(dpart).to_int64();
    Rational rat = head.empty() ? Rational(0) : Rational::from_string(head);
    Rational irr = coeff.empty() ? Rational(1) : Rational::from_string(coeff);
    return Scalar(std::move(rat), std::move(irr), d);
}

}  // namespace hv
