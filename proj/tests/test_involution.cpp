#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pie/errors.hpp"
#include "pie/involution.hpp"

using namespace pie;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

// Number of j in 1..ceil(n/N) whose working multiset satisfies the strict
// window l - N < jN < s + N, continuing past the first hit while all parts
// stay positive.
int window_hits(const oracle::Parts& parts, int modulus)
{
    std::vector<int> w(parts);
    int n = 0;
    for (int x : w)
        n += x;
    int hits = 0;
    for (int j = 1; j <= (n + modulus - 1) / modulus; ++j) {
        std::sort(w.begin(), w.end(), std::greater<>());
        w.front() -= modulus;
        if (w.front() <= 0)
            break;
        std::sort(w.begin(), w.end(), std::greater<>());
        const int total = j * modulus;
        if (w.front() - modulus < total && total < w.back() + modulus)
            ++hits;
    }
    return hits;
}

}  // namespace

TEST(InClass, Examples)
{
    EXPECT_TRUE(in_class(P({6}), 4));
    EXPECT_FALSE(in_class(P({5, 1}), 3));
    EXPECT_TRUE(in_class(P({4, 2}), 4));
    EXPECT_FALSE(in_class(P({4, 2}), 5));
    EXPECT_FALSE(in_class(P({4, 2}), 2));
    EXPECT_THROW(in_class(P({2, 2}), 2), std::invalid_argument);
}

TEST(MembershipCount, Examples)
{
    EXPECT_EQ(membership_count(P({3, 2, 1})), 1);
    EXPECT_EQ(membership_count(P({7})), 7);
    EXPECT_EQ(membership_count(P({4, 2})), 2);
}

TEST(MembershipCount, EqualsSmallestPart)
{
    for (int n = 1; n <= 40; ++n)
        for (const auto& p : enumerate_distinct(n))
            EXPECT_EQ(membership_count(p), stats(p).smallest) << p.to_string();
}

TEST(Pair, HandTraces)
{
    auto a = pair(P({4, 2}), 4);
    EXPECT_EQ(a.pairing_case, PairingCase::Case1);
    EXPECT_EQ(a.moved_part, 4);
    EXPECT_EQ(a.output, P({6}));
    EXPECT_EQ(a.serialize(), "input 4+2 N=4 case=Case1\nstep 1: remove 4 | 2\nstep 2: add 4 to 2 | 6\noutput 6\n");

    auto b = pair(P({6}), 4);
    EXPECT_EQ(b.pairing_case, PairingCase::Case2);
    EXPECT_EQ(b.moved_part, 4);
    EXPECT_EQ(b.output, P({4, 2}));
    ASSERT_EQ(b.steps.size(), 2u);
    EXPECT_EQ(b.steps[0].working, (std::vector<Part>{2}));

    auto c = pair(P({4, 2}), 3);
    EXPECT_EQ(c.pairing_case, PairingCase::Case2);
    EXPECT_EQ(c.output, P({3, 2, 1}));
    EXPECT_EQ(c.steps[0].working, (std::vector<Part>{2, 1}));
    auto d = pair(P({3, 2, 1}), 3);
    EXPECT_EQ(d.pairing_case, PairingCase::Case1);
    EXPECT_EQ(d.output, P({4, 2}));

    auto e = pair(P({6}), 2);
    EXPECT_EQ(e.pairing_case, PairingCase::Fixed);
    EXPECT_FALSE(e.output);
    EXPECT_EQ(e.serialize(), "input 6 N=2 case=Fixed\noutput fixed\n");
}

TEST(Pair, Preconditions)
{
    EXPECT_THROW(pair(P({5, 1}), 3), std::invalid_argument);
    EXPECT_THROW(pair(P({3, 3}), 3), std::invalid_argument);
    EXPECT_THROW(pair(P({6}), 0), std::invalid_argument);
}

TEST(Pair, InvolutionProperties)
{
    for (int n = 1; n <= 40; ++n)
        for (int modulus = 1; modulus <= n; ++modulus) {
            int fixed = 0;
            for (const auto& p : enumerate_distinct(n)) {
                if (!in_class(p, modulus))
                    continue;
                auto t = pair(p, modulus);
                if (!t.output) {
                    ++fixed;
                    EXPECT_EQ(p, P({n}));
                    EXPECT_EQ(n % modulus, 0);
                    continue;
                }
                const auto& q = *t.output;
                EXPECT_EQ(q.n(), n);
                EXPECT_TRUE(q.has_distinct_parts());
                EXPECT_TRUE(in_class(q, modulus));
                EXPECT_EQ(std::abs(static_cast<int>(q.size()) - static_cast<int>(p.size())), 1);
                const int expected_delta = t.pairing_case == PairingCase::Case1 ? -1 : 1;
                EXPECT_EQ(static_cast<int>(q.size()) - static_cast<int>(p.size()), expected_delta);
                EXPECT_EQ(pair(q, modulus).output, p) << p.to_string() << " N=" << modulus;
            }
            EXPECT_EQ(fixed, n % modulus == 0 ? 1 : 0) << "n=" << n << " N=" << modulus;
        }
}

TEST(Pair, AtMostOneDivisiblePartInClass)
{
    for (int n = 1; n <= 40; ++n)
        for (int modulus = 1; modulus <= n; ++modulus)
            for (const auto& p : enumerate_distinct(n)) {
                if (!in_class(p, modulus))
                    continue;
                int divisible = 0;
                for (int x : p.parts())
                    divisible += x % modulus == 0;
                EXPECT_LE(divisible, 1);
            }
}

TEST(Pair, CaseOneMatchesClosedForms)
{
    int compared = 0;
    for (int n = 1; n <= 30; ++n)
        for (int modulus = 1; modulus <= n; ++modulus)
            for (const auto& p : enumerate_distinct(n)) {
                if (!in_class(p, modulus) || p.size() < 2)
                    continue;
                oracle::Parts parts(p.parts().begin(), p.parts().end());
                auto closed = oracle::case1_closed_form(parts, modulus);
                if (closed.empty())
                    continue;
                auto t = pair(p, modulus);
                ASSERT_EQ(t.pairing_case, PairingCase::Case1);
                EXPECT_EQ(t.output, Partition(closed)) << p.to_string() << " N=" << modulus;
                ++compared;
            }
    EXPECT_GT(compared, 100);
}

TEST(Pair, CaseTwoInvertsClosedForms)
{
    // A Case 2 output has one part divisible by N; when that part falls in the
    // closed-form range, the closed form must send it back to the input.
    int compared = 0;
    for (int n = 1; n <= 30; ++n)
        for (int modulus = 1; modulus <= n; ++modulus)
            for (const auto& p : enumerate_distinct(n)) {
                if (!in_class(p, modulus))
                    continue;
                auto t = pair(p, modulus);
                if (t.pairing_case != PairingCase::Case2)
                    continue;
                const auto& q = *t.output;
                auto closed = oracle::case1_closed_form(oracle::Parts(q.parts().begin(), q.parts().end()), modulus);
                if (closed.empty())
                    continue;
                EXPECT_EQ(Partition(closed), p);
                ++compared;
            }
    EXPECT_GT(compared, 100);
}

TEST(Pair, StrictWindowHasExactlyOneStop)
{
    for (int n = 1; n <= 60; ++n)
        for (int modulus = 1; modulus <= n; ++modulus)
            for (const auto& p : enumerate_distinct(n)) {
                if (!in_class(p, modulus))
                    continue;
                const bool case2 = std::none_of(p.parts().begin(), p.parts().end(),
                                                [modulus](int x) { return x % modulus == 0; });
                if (!case2)
                    continue;
                EXPECT_EQ(window_hits(oracle::Parts(p.parts().begin(), p.parts().end()), modulus), 1)
                    << p.to_string() << " N=" << modulus;
            }
}

TEST(Pair, NoFaultUpToSixty)
{
    for (int n = 1; n <= 60; ++n)
        for (int modulus = 1; modulus <= n; ++modulus) {
            auto audit = audit_pairing(n, modulus);
            EXPECT_TRUE(audit.ok()) << *audit.problem;
        }
}

TEST(ClassSum, Examples)
{
    EXPECT_EQ(class_sum(6, 2), 1);
    EXPECT_EQ(class_sum(6, 4), 0);
    EXPECT_EQ(class_sum(6, 5), 0);
    EXPECT_THROW(class_sum(6, 7), std::invalid_argument);
    EXPECT_THROW(class_sum(6, 0), std::invalid_argument);
}

TEST(ClassSum, DivisorIndicatorByBruteForce)
{
    for (int n = 1; n <= 30; ++n)
        for (int modulus = 1; modulus <= n; ++modulus) {
            int brute = 0;
            for (const auto& p : oracle::distinct_partitions(n))
                if (p.front() >= modulus && modulus > p.front() - p.back())
                    brute += p.size() % 2 ? 1 : -1;
            EXPECT_EQ(class_sum(n, modulus), brute);
            EXPECT_EQ(brute, n % modulus == 0 ? 1 : 0);
        }
}
