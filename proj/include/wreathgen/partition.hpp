#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wreathgen/numeric.hpp"

namespace wreathgen {

// Weakly decreasing sequence of positive parts; stored trailing-zero-free so
// the empty partition is the unique size-0 value and equality is structural.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                  // 0 for i >= length
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& other) const;  // other fits inside this diagram

    bool operator==(const Partition&) const = default;
    // Total order: by size, then lexicographically on the part vectors.
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string str() const;  // "3,1" ; "" for the empty partition

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// (n-k, 1^k); 0 <= k <= n-1, else invalid-hook.
Partition hook(int n, int k);

// (n-k, k); 0 <= k <= n/2, else invalid-two-row.
Partition two_row(int n, int k);

// Product of hook lengths and the standard-tableau count n!/prod(hooks).
Int hook_length_product(const Partition& p);
Int standard_tableau_count(const Partition& p);

std::vector<Partition> partitions_of(int n);

// A tuple of partitions indexed by the ambient group's irreducibles (unit
// object first).  Also used for stable labels, where total() is unconstrained.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {}
    static MultiPartition empty(int num_components) {
        return MultiPartition(std::vector<Partition>(static_cast<size_t>(num_components)));
    }

    const std::vector<Partition>& components() const { return comps_; }
    const Partition& at(int i) const { return comps_.at(static_cast<size_t>(i)); }
    Partition& at(int i) { return comps_.at(static_cast<size_t>(i)); }
    int num_components() const { return static_cast<int>(comps_.size()); }
    int total() const;  // sum of component sizes

    bool operator==(const MultiPartition&) const = default;
    // Graded lexicographic: by total size, then componentwise in declared order.
    std::strong_ordering operator<=>(const MultiPartition& o) const;

    std::string str() const;  // "[3,1|]" bracket-bar form

private:
    std::vector<Partition> comps_;
};

// Eq-(1)-style padding: prepend a first row of length n - total() to the unit
// component.  Returns nullopt (the zero object) when that row would be short.
std::optional<MultiPartition> pad(const MultiPartition& stable_label, int n);

// Inverse of pad on nonzero values: strip the unit component's first row.
MultiPartition strip_first_row(const MultiPartition& label);

// All multipartitions with the given number of components and total size n,
// sorted in the canonical order.
std::vector<MultiPartition> multipartitions_of(int n, int num_components);

// Parses "3,1" / "" (empty).  Throws Error("bad-partition", ...) on garbage.
Partition parse_partition(const std::string& s);
// Parses the bracket-bar form "[3,1|]"; component count must match.
MultiPartition parse_multipartition(const std::string& s, int num_components);

}  // namespace wreathgen
