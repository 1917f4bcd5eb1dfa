#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cslab {

using Integer = mpz_class;
using Rational = mpq_class;

/// An integer partition: weakly decreasing positive parts with the size cached.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Sorts and drops zero parts; use for multisets that are not yet canonical.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    /// Part i, or 0 past the end.
    int part_or_zero(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int multiplicity(int value) const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Orders partitions of equal size reverse-lexicographically: (4) < (3,1) < (2,2) < ...
/// Partitions of different sizes are ordered by size first.
struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// A composition: ordered positive parts.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    Partition sorted() const { return Partition::from_unsorted(parts_); }
    bool operator==(const Composition& other) const { return parts_ == other.parts_; }
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// 1^{a_1} 2^{a_2} ... view of a partition.
struct MultiplicityForm {
    std::map<int, int> mult;

    static MultiplicityForm of(const Partition& p);
    Partition to_partition() const;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n (cached table, exact).
Integer partition_count(int n);

Partition conjugate(const Partition& p);

/// Dominance order: a >= b iff every prefix sum of a is at least that of b.
bool dominates(const Partition& a, const Partition& b);

/// Concatenation of two multisets of parts, resorted.
Partition merge(const Partition& a, const Partition& b);

struct PartitionFactorials {
    Integer part_factorial;          // prod_i lambda_i!
    Integer multiplicity_factorial;  // prod_v mult(v)!
};

PartitionFactorials factorials(const Partition& p);

Integer factorial(int n);
Integer binomial(int n, int k);

/// True iff n = x*k + y*(k+1) has a solution in nonnegative integers (k >= 2, n >= 1).
/// Evaluated as membership in {qk+r : 1<=q<=k-2, 0<=r<=q} ∪ {n : n >= k(k-1)}.
bool numerical_semigroup_gap(int k, int n);

/// Parses "4,2,1" (weakly decreasing). Empty string is the empty partition.
Partition parse_partition(std::string_view text);

/// Formats as "4,2,1".
std::string format_partition(const Partition& p);

}  // namespace cslab
