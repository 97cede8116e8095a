#include "hv/bigint.hpp"

#include <algorithm>

namespace hv {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    negative_ = v < 0;
    // careful with LLONG_MIN
    uint64_t mag = negative_ ? (~static_cast<uint64_t>(v) + 1) : static_cast<uint64_t>(v);
    limbs_.push_back(static_cast<uint32_t>(mag & 0xFFFFFFFFu));
    if (mag >> 32) limbs_.push_back(static_cast<uint32_t>(mag >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<uint32_t> out;
    out.reserve(hi.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out.push_back(static_cast<uint32_t>(s & 0xFFFFFFFFu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xFFFFFFFFu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xFFFFFFFFu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Binary long division on magnitudes; adequate at this library's operand sizes.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.empty() ? 0 : a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        q.clear();
        return;
    }
    size_t bits = a.size() * 32;
    for (size_t i = bits; i-- > 0;) {
        // r = (r << 1) | bit_i(a)
        uint32_t carry = (a[i / 32] >> (i % 32)) & 1u;
        for (size_t j = 0; j < r.size(); ++j) {
            uint32_t next = r[j] >> 31;
            r[j] = (r[j] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[i / 32] |= (1u << (i % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.negative_ == b.negative_) {
        out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        out.negative_ = a.negative_;
    } else {
        int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return out;
        if (c > 0) {
            out.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
            out.negative_ = a.negative_;
        } else {
            out.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
            out.negative_ = b.negative_;
        }
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    out.negative_ = !out.limbs_.empty() && (a.negative_ != b.negative_);
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw error("division by zero");
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.limbs_ = std::move(rm);
    r.negative_ = !r.limbs_.empty() && a.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    return (a.abs() / gcd(a, b)) * b.abs();
}

BigInt BigInt::pow(const BigInt& base, unsigned long long e) {
    BigInt out(1), x = base;
    while (e) {
        if (e & 1) out *= x;
        x *= x;
        e >>= 1;
    }
    return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(limbs_, o.limbs_);
    if (negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::from_string(std::string_view s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw error("invalid integer literal '" + std::string(s) + "'");
    BigInt out;
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw error("invalid integer literal '" + std::string(s) + "'");
        out = out * ten + BigInt(s[i] - '0');
    }
    if (neg) out = -out;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt x = abs();
    BigInt chunk(1000000000);
    std::string digits;
    while (!x.is_zero()) {
        BigInt q, r;
        divmod(x, chunk, q, r);
        uint64_t part = r.limbs_.empty() ? 0 : r.limbs_[0];
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + part % 10));
            part /= 10;
        }
        x = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw error("integer out of 64-bit range: " + to_string());
    if (limbs_.empty()) return 0;
    uint64_t mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<long long>(mag - 1) - 1 : static_cast<long long>(mag);
}

}  // namespace hv
