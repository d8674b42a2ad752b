#pragma once

#include "eulerchi/rational.hpp"
#include "eulerchi/ring.hpp"

#include <cstdint>
#include <vector>

namespace testsupport {

// Deterministic generator so test runs are reproducible bit for bit.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next()
    {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long long range(long long lo, long long hi)
    {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    eulerchi::Rational rational(long long max_num = 9, long long max_den = 9)
    {
        long long num = range(-max_num, max_num);
        long long den = range(1, max_den);
        return eulerchi::Rational(num, den);
    }

    eulerchi::Rational nonzero_rational(long long max_num = 9, long long max_den = 9)
    {
        for (;;) {
            eulerchi::Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

private:
    uint64_t state_;
};

// Elementary symmetric polynomials from power sums via Newton's
// identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i. Independent
// of the product-expansion path in the library.
template <class R>
std::vector<R> newton_symmetric(const std::vector<R>& values)
{
    using eulerchi::ring_from_int;
    size_t n = values.size();
    std::vector<R> power(n + 1, ring_from_int<R>(0));
    for (size_t k = 1; k <= n; ++k) {
        R acc = ring_from_int<R>(0);
        for (const R& v : values) {
            R term = v;
            for (size_t rep = 1; rep < k; ++rep) term = term * v;
            acc = acc + term;
        }
        power[k] = acc;
    }
    std::vector<R> e(n + 1, ring_from_int<R>(0));
    e[0] = ring_from_int<R>(1);
    for (size_t k = 1; k <= n; ++k) {
        R acc = ring_from_int<R>(0);
        for (size_t i = 1; i <= k; ++i) {
            R term = e[k - i] * power[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[k] = acc / ring_from_int<R>(static_cast<long long>(k));
    }
    return e;
}

} // namespace testsupport
