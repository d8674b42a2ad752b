#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerchi/bigint.hpp"
#include "eulerchi/pigraded.hpp"
#include "eulerchi/quadext.hpp"
#include "eulerchi/ratfunc.hpp"
#include "eulerchi/rational.hpp"
#include "support/test_support.hpp"

#include <cmath>

using namespace eulerchi;
using testsupport::Rng;

TEST_CASE("bigint decimal round trip and arithmetic vs native")
{
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        long long a = rng.range(-1000000, 1000000);
        long long b = rng.range(-1000000, 1000000);
        BigInt ba(a), bb(b);
        CHECK(BigInt(a + b) == ba + bb);
        CHECK(BigInt(a - b) == ba - bb);
        CHECK(BigInt(a * b) == ba * bb);
        CHECK(BigInt::from_decimal(ba.to_decimal()) == ba);
        if (b != 0) {
            CHECK(BigInt(a / b) == ba / bb);
            CHECK(BigInt(a % b) == ba % bb);
        }
    }
}

TEST_CASE("bigint division reconstructs the dividend on wide operands")
{
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt a(1), b(1);
        int la = static_cast<int>(rng.range(1, 5)), lb = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < la; ++i) a *= BigInt(rng.range(-1000000000, 1000000000));
        for (int i = 0; i < lb; ++i) b *= BigInt(rng.range(1, 1000000000));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divrem(a, b, q, r);
        CHECK(a == q * b + r);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint division stress on boundary limb patterns")
{
    BigInt base = BigInt::pow(BigInt(2), 32);
    auto all_ones = [&](int k) { return BigInt::pow(base, static_cast<unsigned long>(k)) - BigInt(1); };

    std::vector<BigInt> quotients{BigInt(0),     BigInt(1),          all_ones(1), all_ones(2),
                                  all_ones(3),   BigInt::pow(base, 2), BigInt::pow(base, 3) - base};
    std::vector<BigInt> divisors{base,
                                 all_ones(1),
                                 all_ones(2),
                                 all_ones(3),
                                 BigInt::pow(base, 2) / BigInt(2), // high bit set in the top limb
                                 BigInt::pow(base, 3) - BigInt::pow(base, 2),
                                 BigInt::pow(base, 2) + BigInt(1)};

    for (const BigInt& q : quotients) {
        for (const BigInt& b : divisors) {
            for (const BigInt& r : {BigInt(0), BigInt(1), b - BigInt(1), b / BigInt(2)}) {
                BigInt a = q * b + r;
                BigInt qq, rr;
                BigInt::divrem(a, b, qq, rr);
                CHECK(qq == q);
                CHECK(rr == r);

                // truncated-division sign conventions
                BigInt nq, nr;
                BigInt::divrem(-a, b, nq, nr);
                CHECK(nq == -q);
                CHECK(nr == -r);
                BigInt::divrem(a, -b, nq, nr);
                CHECK(nq == -q);
                CHECK(nr == r);
            }
        }
    }
}

TEST_CASE("bigint perfect squares")
{
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        BigInt x(rng.range(0, 1000000000));
        BigInt sq = x * x;
        BigInt root;
        REQUIRE(sq.sqrt_exact(root));
        CHECK(root == x.abs());
        BigInt off = sq + BigInt(1);
        BigInt dummy;
        if (!x.is_zero()) CHECK_FALSE((sq + BigInt(1)).sqrt_exact(dummy));
        (void)off;
    }
}

TEST_CASE("rational field axioms on random samples")
{
    Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("rational function normalization")
{
    using Poly = UniPoly<Rational>;
    Poly x = Poly::variable();

    SUBCASE("common factor cancels")
    {
        RatFunc f(x * x - Poly(1), x - Poly(1));
        CHECK(f == RatFunc(x + Poly(1)));
        CHECK(f.is_polynomial());
    }
    SUBCASE("zero numerator collapses to 0/1")
    {
        RatFunc f(Poly(), x.pow(3) + Poly(2));
        CHECK(f.is_zero());
        CHECK(f.den() == Poly(1));
    }
    SUBCASE("sign and content normalization of the denominator")
    {
        // 8x / (1 - 3x^2): canonical denominator has positive leading coefficient
        RatFunc f(Poly(Rational(8)) * x, Poly(1) - Poly(3) * x * x);
        CHECK(f.den() == Poly(3) * x * x - Poly(1));
        CHECK(f.num() == Poly(Rational(-8)) * x);
        // and the value is unchanged
        CHECK(f.eval(Rational(2)) == Rational(16, -11));
    }
}

TEST_CASE("rational function normalization is idempotent and value preserving")
{
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> nc, dc, gc;
        for (int i = 0; i <= static_cast<int>(rng.range(0, 4)); ++i) nc.push_back(rng.rational());
        for (int i = 0; i <= static_cast<int>(rng.range(0, 4)); ++i) dc.push_back(rng.rational());
        for (int i = 0; i <= static_cast<int>(rng.range(0, 2)); ++i) gc.push_back(rng.rational());
        UniPoly<Rational> num(nc), den(dc), g(gc);
        if (den.is_zero()) continue;
        if (g.is_zero()) g = UniPoly<Rational>(1);

        RatFunc f(num * g, den * g);
        RatFunc reduced(f.num(), f.den());
        CHECK(f == reduced); // idempotent

        RatFunc plain(num, den);
        CHECK(f == plain); // the common factor never mattered

        int checked = 0;
        for (long long p = -60; p <= 60 && checked < 100; ++p) {
            Rational x(p, 7);
            if (f.is_pole(x) || plain.is_pole(x)) continue;
            CHECK(f.eval(x) == plain.eval(x));
            ++checked;
        }
    }
}

TEST_CASE("rational function field axioms")
{
    Rng rng(32);
    auto random_rf = [&]() {
        std::vector<Rational> nc{rng.rational(), rng.rational()};
        std::vector<Rational> dc{rng.rational(), rng.rational(), Rational(1)};
        return RatFunc(UniPoly<Rational>(nc), UniPoly<Rational>(dc));
    };
    for (int trial = 0; trial < 25; ++trial) {
        RatFunc a = random_rf(), b = random_rf(), c = random_rf();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    }
}

TEST_CASE("quadratic extension inverses")
{
    using Q = QuadExt<Rational>;
    SUBCASE("identity") { CHECK(Q(1).inverse() == Q(1)); }
    SUBCASE("sqrt(3) inverts to sqrt(3)/3")
    {
        Q root3 = Q::sqrt3();
        CHECK(root3.inverse() == Q(Rational(0), Rational(1, 3)));
    }
    SUBCASE("unit of norm one")
    {
        Q x(Rational(2), Rational(1));
        CHECK(x.norm() == Rational(1));
        Q inv = x.inverse();
        CHECK(inv == Q(Rational(2), Rational(-1)));
        CHECK(x * inv == Q(1));
    }
    SUBCASE("zero norm is rejected")
    {
        CHECK_THROWS_AS(Q(Rational(0), Rational(0)).inverse(), error);
    }
}

TEST_CASE("quadratic extension field axioms and float agreement")
{
    using Q = QuadExt<Rational>;
    Rng rng(41);
    const double s3 = std::sqrt(3.0);
    for (int trial = 0; trial < 200; ++trial) {
        Q a(rng.rational(), rng.rational());
        Q b(rng.rational(), rng.rational());
        Q c(rng.rational(), rng.rational());
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.norm().is_zero()) CHECK(a * a.inverse() == Q(1));

        auto dbl = [&](const Q& v) { return v.rational_part().to_double() + s3 * v.radical_part().to_double(); };
        double prod = dbl(a) * dbl(b);
        double got = dbl(a * b);
        CHECK(std::abs(got - prod) <= 1e-12 * std::max(1.0, std::abs(prod)));
    }
}

TEST_CASE("pi graded multiplication")
{
    CHECK(PiRational(Rational(4), 1) * PiRational(Rational(1, 2), -1) == PiRational(Rational(2), 0));
    CHECK(PiRational(Rational(2), 2) * PiRational(Rational(3), 3) == PiRational(Rational(6), 5));
    // w_2 = 4 pi squares to 16 pi^2
    PiRational w2(Rational(4), 1);
    CHECK(w2 * w2 == PiRational(Rational(16), 2));
}

TEST_CASE("pi graded sums demand a common grade")
{
    PiRational a(Rational(1), 1), b(Rational(1), 2);
    CHECK_THROWS_AS((void)(a + b), error);
    CHECK(a + PiRational() == a); // zero is grade neutral
    CHECK(PiRational(Rational(3), 2) - PiRational(Rational(3), 2) == PiRational());
}
