#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pie {

using Part = int;

struct PartitionStats {
    Part smallest = 0;      // s(pi)
    Part largest = 0;       // l(pi)
    int num_parts = 0;      // #(pi)
    int num_distinct = 0;   // nu_d(pi)

    friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

/// A partition of n stored as a nonincreasing sequence of positive parts.
/// The empty partition (n = 0) is representable but has no statistics.
class Partition {
public:
    Partition() = default;

    /// Parts must already be nonincreasing and positive; throws
    /// std::invalid_argument otherwise.
    explicit Partition(std::vector<Part> parts);

    /// Accepts parts in any order.
    static Partition from_unsorted(std::vector<Part> parts);

    [[nodiscard]] std::span<const Part> parts() const noexcept { return parts_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] bool has_distinct_parts() const noexcept;

    /// "4+2+1"; the empty partition renders as "0".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<Part> parts_;
    int n_ = 0;
};

/// Throws std::domain_error for the empty partition.
PartitionStats stats(const Partition& p);

struct EnumerationLimits {
    int max_n = 200;
};

/// Lazy, single-pass stream over the partitions of n in lexicographically
/// descending order. With `distinct` set only partitions into pairwise
/// distinct parts are produced.
class PartitionStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using iterator_concept = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using reference = const Partition&;
        using pointer = const Partition*;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class PartitionStream;
        iterator(int n, bool distinct);

        void advance_all();
        void advance_distinct();

        Partition current_;
        std::vector<Part> work_;
        bool distinct_ = false;
        bool done_ = true;
    };

    PartitionStream(int n, bool distinct) : n_(n), distinct_(distinct) {}

    [[nodiscard]] iterator begin() const { return iterator(n_, distinct_); }
    [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }

private:
    int n_;
    bool distinct_;
};

/// P(n). n = 0 yields the single empty partition; n < 0 or n above the guard
/// throws std::out_of_range.
PartitionStream enumerate_partitions(int n, EnumerationLimits limits = {});

/// D(n), same error behaviour as enumerate_partitions.
PartitionStream enumerate_distinct(int n, EnumerationLimits limits = {});

/// p(n) via Euler's pentagonal recurrence.
mpz_class partition_count(int n);

/// Entry t holds p^(t)(n), the number of partitions of n with exactly t
/// distinct part sizes, for t = 0 .. max useful t. Computed by dynamic
/// programming over part sizes, no enumeration.
std::vector<mpz_class> exact_part_size_counts(int n);

/// table[t][m] = p^(t)(m) for all m <= n_max.
std::vector<std::vector<mpz_class>> exact_part_size_table(int n_max);

/// p^(t)(n).
mpz_class count_exact_part_sizes(int n, int t);

}  // namespace pie
