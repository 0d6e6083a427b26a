#include "pie/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pie {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts))
{
    long long total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
        total += parts_[i];
    }
    n_ = static_cast<int>(total);
}

Partition Partition::from_unsorted(std::vector<Part> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool Partition::has_distinct_parts() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::to_string() const
{
    if (parts_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

PartitionStats stats(const Partition& p)
{
    if (p.empty())
        throw std::domain_error("statistics are undefined on the empty partition");
    auto parts = p.parts();
    PartitionStats s;
    s.largest = parts.front();
    s.smallest = parts.back();
    s.num_parts = static_cast<int>(parts.size());
    s.num_distinct = 1;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != parts[i - 1])
            ++s.num_distinct;
    return s;
}

PartitionStream::iterator::iterator(int n, bool distinct) : distinct_(distinct), done_(false)
{
    if (n > 0)
        work_.push_back(n);
    current_ = Partition(work_);
}

PartitionStream::iterator& PartitionStream::iterator::operator++()
{
    if (done_)
        return *this;
    if (distinct_)
        advance_distinct();
    else
        advance_all();
    if (!done_)
        current_ = Partition(work_);
    return *this;
}

void PartitionStream::iterator::advance_all()
{
    // Rightmost part larger than one; everything after it is a run of ones.
    auto it = std::find_if(work_.rbegin(), work_.rend(), [](Part x) { return x > 1; });
    if (it == work_.rend()) {
        done_ = true;
        return;
    }
    std::size_t i = static_cast<std::size_t>(std::distance(it, work_.rend())) - 1;
    int rem = static_cast<int>(work_.size() - i - 1) + 1;
    Part v = work_[i] - 1;
    work_[i] = v;
    work_.resize(i + 1);
    while (rem > 0) {
        Part x = std::min(v, rem);
        work_.push_back(x);
        rem -= x;
    }
}

void PartitionStream::iterator::advance_distinct()
{
    // Decrease the rightmost part whose decrement still leaves room to write
    // the remainder as distinct parts below it, then refill greedily.
    long long tail = 0;
    for (std::size_t k = work_.size(); k-- > 0;) {
        Part v = work_[k] - 1;
        long long r = tail + 1;
        if (v >= 1 && r <= static_cast<long long>(v - 1) * v / 2) {
            work_[k] = v;
            work_.resize(k + 1);
            Part bound = v - 1;
            while (r > 0) {
                Part x = static_cast<Part>(std::min<long long>(bound, r));
                work_.push_back(x);
                r -= x;
                bound = x - 1;
            }
            return;
        }
        tail += work_[k];
    }
    done_ = true;
}

namespace {

void check_guard(int n, const EnumerationLimits& limits)
{
    if (n < 0)
        throw std::out_of_range("cannot enumerate partitions of a negative integer");
    if (n > limits.max_n)
        throw std::out_of_range("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                                std::to_string(limits.max_n));
}

}  // namespace

PartitionStream enumerate_partitions(int n, EnumerationLimits limits)
{
    check_guard(n, limits);
    return PartitionStream(n, false);
}

PartitionStream enumerate_distinct(int n, EnumerationLimits limits)
{
    check_guard(n, limits);
    return PartitionStream(n, true);
}

mpz_class partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            int g2 = k * (3 * k + 1) / 2;
            mpz_class term = p[m - g1];
            if (g2 <= m)
                term += p[m - g2];
            if (k % 2)
                acc += term;
            else
                acc -= term;
        }
        p[m] = acc;
    }
    return p[n];
}

std::vector<std::vector<mpz_class>> exact_part_size_table(int n_max)
{
    if (n_max < 0)
        throw std::out_of_range("n must be nonnegative");
    int tmax = 0;
    while ((tmax + 1) * (tmax + 2) / 2 <= n_max)
        ++tmax;
    // dp[t][m]: partitions of m with exactly t distinct sizes drawn from the
    // sizes processed so far. Adding size k with multiplicity >= 1 contributes
    // sum_{j>=1} dp[t-1][m-jk], kept as a running sum along the residue class.
    std::vector<std::vector<mpz_class>> dp(tmax + 1, std::vector<mpz_class>(n_max + 1, 0));
    dp[0][0] = 1;
    std::vector<mpz_class> run(n_max + 1);
    for (int k = 1; k <= n_max; ++k) {
        for (int t = tmax; t >= 1; --t) {
            const auto& prev = dp[t - 1];
            for (int m = 0; m <= n_max; ++m)
                run[m] = m >= k ? prev[m - k] + run[m - k] : mpz_class(0);
            for (int m = k; m <= n_max; ++m)
                dp[t][m] += run[m];
        }
    }
    return dp;
}

std::vector<mpz_class> exact_part_size_counts(int n)
{
    auto table = exact_part_size_table(n);
    std::vector<mpz_class> out;
    out.reserve(table.size());
    for (auto& row : table)
        out.push_back(row[n]);
    return out;
}

mpz_class count_exact_part_sizes(int n, int t)
{
    if (t < 0 || n < 0)
        return 0;
    auto counts = exact_part_size_counts(n);
    return static_cast<std::size_t>(t) < counts.size() ? counts[t] : mpz_class(0);
}

}  // namespace pie
