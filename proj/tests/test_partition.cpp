#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pie/partition.hpp"

using namespace pie;

namespace {

std::vector<std::string> render_all(PartitionStream stream)
{
    std::vector<std::string> out;
    for (const auto& p : stream)
        out.push_back(p.to_string());
    return out;
}

std::vector<oracle::Parts> collect(PartitionStream stream)
{
    std::vector<oracle::Parts> out;
    for (const auto& p : stream)
        out.emplace_back(p.parts().begin(), p.parts().end());
    return out;
}

}  // namespace

TEST(Partition, RejectsBadParts)
{
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_THROW(Partition({3, -1}), std::invalid_argument);
    EXPECT_NO_THROW(Partition({3, 3, 1}));
}

TEST(Partition, FromUnsortedSorts)
{
    auto p = Partition::from_unsorted({1, 4, 2});
    EXPECT_EQ(p.to_string(), "4+2+1");
    EXPECT_EQ(p.n(), 7);
}

TEST(Partition, EmptyRendersAsZero)
{
    Partition p;
    EXPECT_EQ(p.to_string(), "0");
    EXPECT_EQ(p.n(), 0);
    EXPECT_THROW(stats(p), std::domain_error);
}

TEST(Stats, ReadOffParts)
{
    EXPECT_EQ(stats(Partition({3, 2, 1})), (PartitionStats{1, 3, 3, 3}));
    EXPECT_EQ(stats(Partition({2, 2, 1, 1})), (PartitionStats{1, 2, 4, 2}));
    EXPECT_EQ(stats(Partition({3, 3, 3, 3})), (PartitionStats{3, 3, 4, 1}));
}

TEST(Enumerate, SmallCases)
{
    EXPECT_EQ(render_all(enumerate_partitions(1)), (std::vector<std::string>{"1"}));
    EXPECT_EQ(render_all(enumerate_partitions(3)), (std::vector<std::string>{"3", "2+1", "1+1+1"}));
    EXPECT_EQ(render_all(enumerate_distinct(3)), (std::vector<std::string>{"3", "2+1"}));
    EXPECT_EQ(render_all(enumerate_distinct(6)), (std::vector<std::string>{"6", "5+1", "4+2", "3+2+1"}));
    EXPECT_EQ(render_all(enumerate_distinct(1)), (std::vector<std::string>{"1"}));
}

TEST(Enumerate, ZeroYieldsEmptyPartition)
{
    EXPECT_EQ(render_all(enumerate_partitions(0)), (std::vector<std::string>{"0"}));
    EXPECT_EQ(render_all(enumerate_distinct(0)), (std::vector<std::string>{"0"}));
}

TEST(Enumerate, Guards)
{
    EXPECT_THROW(enumerate_partitions(-1), std::out_of_range);
    EXPECT_THROW(enumerate_partitions(201), std::out_of_range);
    EXPECT_THROW(enumerate_distinct(11, EnumerationLimits{10}), std::out_of_range);
    EXPECT_NO_THROW(enumerate_partitions(200));
}

TEST(Enumerate, MatchesRecursiveOracleInOrder)
{
    for (int n = 0; n <= 25; ++n) {
        EXPECT_EQ(collect(enumerate_partitions(n)), oracle::partitions(n)) << n;
        EXPECT_EQ(collect(enumerate_distinct(n)), oracle::distinct_partitions(n)) << n;
    }
}

TEST(Enumerate, CountIsPartitionNumber)
{
    const auto p = oracle::partition_numbers(60);
    for (int n : {0, 1, 2, 10, 40, 60}) {
        std::uint64_t count = 0;
        for ([[maybe_unused]] const auto& x : enumerate_partitions(n))
            ++count;
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(count)), p[n]) << n;
        EXPECT_EQ(partition_count(n), p[n]);
    }
}

TEST(Enumerate, DistinctIsFilterOfAll)
{
    for (int n = 1; n <= 40; ++n) {
        std::vector<Partition> filtered;
        for (const auto& p : enumerate_partitions(n)) {
            auto s = stats(p);
            if (s.num_parts == s.num_distinct)
                filtered.push_back(p);
        }
        std::vector<Partition> distinct;
        for (const auto& p : enumerate_distinct(n))
            distinct.push_back(p);
        EXPECT_EQ(filtered, distinct) << n;
    }
}

TEST(PartitionCount, KnownValues)
{
    EXPECT_EQ(partition_count(0), 1);
    EXPECT_EQ(partition_count(5), 7);
    EXPECT_EQ(partition_count(100), mpz_class("190569292"));
    EXPECT_EQ(partition_count(200), mpz_class("3972999029388"));
    EXPECT_EQ(partition_count(-1), 0);
    const auto p = oracle::partition_numbers(150);
    for (int n = 0; n <= 150; ++n)
        EXPECT_EQ(partition_count(n), p[n]);
}

TEST(ExactPartSizes, SpotValues)
{
    EXPECT_EQ(count_exact_part_sizes(6, 1), 4);
    EXPECT_EQ(count_exact_part_sizes(6, 2), 6);
    EXPECT_EQ(count_exact_part_sizes(6, 3), 1);  // 3+2+1
    EXPECT_EQ(count_exact_part_sizes(5, 3), 0);
    EXPECT_EQ(count_exact_part_sizes(0, 0), 1);
}

TEST(ExactPartSizes, MatchesEnumeration)
{
    for (int n = 1; n <= 30; ++n) {
        std::map<int, mpz_class> brute;
        for (const auto& p : oracle::partitions(n))
            brute[oracle::count_sizes(p)] += 1;
        auto counts = exact_part_size_counts(n);
        mpz_class total = 0;
        for (std::size_t t = 0; t < counts.size(); ++t) {
            EXPECT_EQ(counts[t], brute[static_cast<int>(t)]) << "n=" << n << " t=" << t;
            total += counts[t];
            if (t * (t + 1) / 2 > static_cast<std::size_t>(n)) {
                EXPECT_EQ(counts[t], 0);
            }
        }
        EXPECT_EQ(total, partition_count(n));
    }
}

TEST(ExactPartSizes, TableAgreesWithSingleCalls)
{
    auto table = exact_part_size_table(40);
    for (int n = 0; n <= 40; n += 7)
        for (int t = 0; t < static_cast<int>(table.size()); ++t)
            EXPECT_EQ(table[t][n], count_exact_part_sizes(n, t));
}
