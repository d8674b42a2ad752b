#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace eulerchi {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// Small and predictable rather than fast: the polynomials this library
// manipulates stay below a few hundred digits per coefficient.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(std::string_view decimal);

    static BigInt from_decimal(std::string_view s);
    std::string to_decimal() const;
    double to_double() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    // -1, 0, +1
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated division: quotient rounds toward zero, remainder carries
    // the sign of the dividend, |r| < |b|. b must be nonzero.
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b); // nonnegative
    static BigInt lcm(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long exp);

    bool fits_longlong() const;
    long long to_longlong() const; // caller checks fits_longlong()

    // Exact integer square root if the value is a perfect square.
    bool sqrt_exact(BigInt& root) const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    // invariant: no leading zero limb; zero has empty limbs_ and negative_ == false
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace eulerchi
