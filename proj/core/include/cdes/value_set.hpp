#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdes {

/**
 * A finite set of positive integers, stored as a strictly increasing sequence.
 *
 * Used for circular descent sets, non-weak-excedance bottom sets and the
 * x-variable index sets of polynomial monomials. Ordering is by size first,
 * then lexicographic on the sorted elements, which is also the canonical
 * output order everywhere in the library.
 */
class ValueSet {
public:
    ValueSet() = default;
    ValueSet(std::initializer_list<int> elements);

    /// Throws InvalidArgument unless `elements` is strictly increasing and positive.
    static ValueSet from_sorted(std::vector<int> elements);
    /// Accepts any order; duplicates are rejected.
    static ValueSet from_unsorted(std::vector<int> elements);
    /// Bit i set <=> i in the set (i in [1, 63]).
    static ValueSet from_mask(std::uint64_t mask);

    /// Parses "3,5,7" (no whitespace requirement). Duplicate or descending
    /// entries are rejected rather than sorted. The empty string is the empty set.
    static ValueSet parse(std::string_view text);

    std::span<const int> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(int value) const;
    int min() const;
    int max() const;

    ValueSet with(int value) const;
    ValueSet without(int value) const;

    /// Requires every element <= 63.
    std::uint64_t mask() const;

    std::string to_string() const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const ValueSet&, const ValueSet&) = default;
    friend std::strong_ordering operator<=>(const ValueSet& a, const ValueSet& b);

private:
    explicit ValueSet(std::vector<int> sorted) : elements_(std::move(sorted)) {}

    std::vector<int> elements_;
};

std::ostream& operator<<(std::ostream& os, const ValueSet& set);

/// All subsets of [lo, hi], in ascending bitmask order.
std::vector<ValueSet> subsets_of_range(int lo, int hi);

struct ValueSetHash {
    std::size_t operator()(const ValueSet& set) const noexcept;
};

} // namespace cdes
