// Seeded randomized property checks.
#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "pie/arith.hpp"
#include "pie/identities.hpp"
#include "pie/involution.hpp"
#include "pie/series.hpp"

using namespace pie;

namespace {

CPolynomial random_poly()
{
    CPolynomial p;
    const int terms = oracle::uniform(0, 5);
    for (int i = 0; i < terms; ++i)
        p.add_term(static_cast<unsigned>(oracle::uniform(0, 8)), oracle::rational(oracle::uniform(-5, 5), oracle::uniform(1, 4)));
    return p;
}

// Random partition of n into distinct parts: random subset sums by rejection.
Partition random_distinct(int n)
{
    std::vector<Partition> all;
    for (const auto& p : enumerate_distinct(n))
        all.push_back(p);
    return all[static_cast<std::size_t>(oracle::uniform(0, static_cast<int>(all.size()) - 1))];
}

}  // namespace

TEST(Properties, PolynomialRingAxioms)
{
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, CPolynomial());
        const mpq_class x = oracle::rational(oracle::uniform(-7, 7), oracle::uniform(1, 5));
        EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
        EXPECT_EQ((a + b).theta(2), a.theta(2) + b.theta(2));
    }
}

TEST(Properties, SeriesRingAxioms)
{
    for (int trial = 0; trial < 40; ++trial) {
        const int order = oracle::uniform(1, 14);
        auto make = [&] {
            TruncatedSeries<mpq_class> s(order);
            for (int i = 0; i <= order; ++i)
                s[i] = oracle::uniform(-4, 4);
            return s;
        };
        auto a = make(), b = make(), c = make();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        a[0] = oracle::uniform(1, 3);
        EXPECT_EQ(a * series_inverse(a), TruncatedSeries<mpq_class>::one(order));
    }
}

TEST(Properties, SigmaIsMultiplicative)
{
    for (int trial = 0; trial < 200; ++trial) {
        const int m = oracle::uniform(1, 300), n = oracle::uniform(1, 300);
        if (std::gcd(m, n) != 1)
            continue;
        for (unsigned z = 0; z <= 3; ++z)
            EXPECT_EQ(sigma_int(z, static_cast<std::uint64_t>(m) * n),
                      sigma_int(z, static_cast<std::uint64_t>(m)) * sigma_int(z, static_cast<std::uint64_t>(n)));
    }
}

TEST(Properties, InvolutionOnRandomInputsBeyondForty)
{
    for (int trial = 0; trial < 400; ++trial) {
        const int n = oracle::uniform(41, 60);
        const auto p = random_distinct(n);
        const auto s = stats(p);
        const int modulus = oracle::uniform(s.largest - s.smallest + 1, s.largest);
        ASSERT_TRUE(in_class(p, modulus));
        auto t = pair(p, modulus);
        if (!t.output) {
            EXPECT_EQ(p.size(), 1u);
            EXPECT_EQ(n % modulus, 0);
            continue;
        }
        EXPECT_TRUE(in_class(*t.output, modulus));
        EXPECT_EQ(t.output->n(), n);
        EXPECT_EQ(pair(*t.output, modulus).output, p);
    }
}

TEST(Properties, NumericIdentitiesAtRandomGridPoints)
{
    for (int trial = 0; trial < 60; ++trial) {
        const Complex z(oracle::uniform(-20, 20) / 10.0, oracle::uniform(-10, 10) / 10.0);
        const double r = oracle::uniform(1, 8) / 10.0, theta = oracle::uniform(0, 628) / 100.0;
        const Complex c = std::polar(r, theta);
        const int n = oracle::uniform(1, 25);
        for (auto s : {lhs_rhs_thm21(n, NumericWeight{z, c}), lhs_rhs_thm23(n, NumericWeight{z, c}),
                       lhs_rhs_thm26(n, NumericWeight{z, c})})
            EXPECT_LE(std::abs(s.lhs - s.rhs), 1e-9 * std::max(1.0, std::abs(s.rhs)))
                << "z=" << z << " c=" << c << " n=" << n;
    }
}

TEST(Properties, ExactAgreesWithNumericAtIntegerZ)
{
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned z = static_cast<unsigned>(oracle::uniform(0, 4));
        const int n = oracle::uniform(1, 20);
        const Complex c(oracle::uniform(-8, 8) / 10.0, oracle::uniform(-5, 5) / 10.0);
        auto exact = lhs_rhs_thm23(n, ExactWeight{z});
        auto numeric = lhs_rhs_thm23(n, NumericWeight{Complex(z), c});
        EXPECT_LE(std::abs(exact.lhs.evaluate(c) - numeric.lhs), 1e-9 * std::max(1.0, numeric.magnitude));
    }
}
