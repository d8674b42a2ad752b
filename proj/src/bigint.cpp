#include "eulerchi/bigint.hpp"

#include "eulerchi/error.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace eulerchi {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v)
{
    negative_ = v < 0;
    // avoid overflow on LLONG_MIN
    uint64_t mag = negative_ ? (~static_cast<uint64_t>(v) + 1u) : static_cast<uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt::BigInt(std::string_view s) { *this = from_decimal(s); }

BigInt BigInt::from_decimal(std::string_view s)
{
    BigInt out;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) fail(errc::parse_error, "empty integer literal");
    const BigInt chunk_base(1000000000ll);
    // consume 9 decimal digits at a time
    while (i < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - i);
        uint64_t v = 0;
        for (size_t k = 0; k < take; ++k, ++i) {
            char ch = s[i];
            if (ch < '0' || ch > '9') fail(errc::parse_error, "bad digit in integer literal");
            v = v * 10 + static_cast<uint64_t>(ch - '0');
        }
        BigInt scale = take == 9 ? chunk_base : BigInt(static_cast<long long>(std::llround(std::pow(10.0, double(take)))));
        out = out * scale + BigInt(static_cast<long long>(v));
    }
    out.negative_ = neg && !out.limbs_.empty();
    return out;
}

std::string BigInt::to_decimal() const
{
    if (is_zero()) return "0";
    std::vector<uint32_t> mag = limbs_;
    std::string digits;
    const uint64_t chunk = 1000000000ull;
    while (!mag.empty()) {
        // divide magnitude by 1e9 in place, collect remainder
        uint64_t rem = 0;
        for (size_t i = mag.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<uint32_t>(cur / chunk);
            rem = cur % chunk;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const
{
    double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + double(limbs_[i]);
    return negative_ ? -v : v;
}

void BigInt::trim()
{
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b)
{
    if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
    int m = cmp_mag(a.limbs_, b.limbs_);
    return a.negative_ ? -m : m;
}

bool operator==(const BigInt& a, const BigInt& b)
{
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> out(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    out[big.size()] = static_cast<uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (s < 0) {
            s += int64_t(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(s);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + uint64_t(a[i]) * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r)
{
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // normalize so the top divisor limb has its high bit set
    int shift = 0;
    for (uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= shift ? (v[i] << shift) : v[i];
            if (shift) out[i + 1] |= static_cast<uint32_t>(uint64_t(v[i]) >> (32 - shift));
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a), v = shl(b);
    size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);

    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qh = num / v[n - 1];
        uint64_t rh = num % v[n - 1];
        while (qh >= kBase || (n >= 2 && qh * v[n - 2] > ((rh << 32) | u[j + n - 2]))) {
            --qh;
            rh += v[n - 1];
            if (rh >= kBase) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qh * v[i] + carry;
            carry = p >> 32;
            int64_t t = int64_t(u[i + j]) - int64_t(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += int64_t(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = int64_t(u[j + n]) - int64_t(carry) - borrow;
        if (t < 0) {
            // qh was one too large; add back
            t += int64_t(kBase);
            --qh;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = uint64_t(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            t += int64_t(c2);
            t &= int64_t(kBase - 1);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qh);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    // denormalize remainder
    if (shift) {
        for (size_t i = 0; i < u.size(); ++i) {
            u[i] >>= shift;
            if (i + 1 < u.size()) u[i] |= u[i + 1] << (32 - shift);
        }
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    r = std::move(u);
}

BigInt BigInt::operator-() const
{
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const
{
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b)
{
    BigInt out;
    if (a.negative_ == b.negative_) {
        out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        out.negative_ = a.negative_;
    } else {
        int m = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (m == 0) return out;
        const BigInt& big = m > 0 ? a : b;
        const BigInt& small = m > 0 ? b : a;
        out.limbs_ = BigInt::sub_mag(big.limbs_, small.limbs_);
        out.negative_ = big.negative_;
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b)
{
    BigInt out;
    out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    out.negative_ = !out.limbs_.empty() && (a.negative_ != b.negative_);
    return out;
}

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
{
    if (b.is_zero()) fail(errc::zero_denominator, "integer division by zero");
    divrem_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.negative_ = !r.limbs_.empty() && a.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b)
{
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b)
{
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b)
{
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b)
{
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    return (a * b).abs() / gcd(a, b);
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp)
{
    BigInt out(1), acc = base;
    while (exp) {
        if (exp & 1ul) out *= acc;
        exp >>= 1;
        if (exp) acc *= acc;
    }
    return out;
}

bool BigInt::fits_longlong() const
{
    if (limbs_.size() > 2) return false;
    uint64_t mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_longlong() const
{
    uint64_t mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

bool BigInt::sqrt_exact(BigInt& root) const
{
    if (negative_) return false;
    if (is_zero()) {
        root = BigInt(0);
        return true;
    }
    // Newton iteration from a double seed, then settle.
    double d = std::sqrt(to_double());
    BigInt x = d > 9e15 ? BigInt(0) : BigInt(static_cast<long long>(d));
    if (x.is_zero()) {
        // seed by halving the bit length
        x = *this;
        while (x * x > *this) x = (x + *this / x) / BigInt(2);
    }
    for (int iter = 0; iter < 200; ++iter) {
        if (x.is_zero()) break;
        BigInt nx = (x + *this / x) / BigInt(2);
        if (nx == x) break;
        x = nx;
    }
    while (x * x > *this) x -= BigInt(1);
    while ((x + BigInt(1)) * (x + BigInt(1)) <= *this) x += BigInt(1);
    if (x * x == *this) {
        root = x;
        return true;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_decimal(); }

} // namespace eulerchi
