#pragma once

#include "cdes/bigint.hpp"
#include "cdes/value_set.hpp"

#include <map>
#include <span>
#include <vector>

namespace cdes {

/// A permutation of [n] in one-line notation p(1) ... p(n).
class Permutation {
public:
    /// Throws InvalidArgument unless `entries` is a bijection of [1, size].
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    /// 1-based access, p(i).
    int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> entries() const { return entries_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

/// Values p(i) with p(i) > p(i+1), i < n. No wraparound comparison.
ValueSet circular_descent_set(const Permutation& p);

/// Positions i with p(i) < i.
ValueSet nwexb_set(const Permutation& p);

/// Replaces each entry by its rank among the entries. Rejects repeats.
Permutation reduction(std::span<const int> sequence);

/// Counts keyed by descent (or bottom) set. Absent keys count zero.
class CountTable {
public:
    explicit CountTable(int n) : n_(n) {}

    int n() const { return n_; }
    BigInt at(const ValueSet& set) const;
    void set(const ValueSet& set, BigInt value);
    void add(const ValueSet& set, const BigInt& value);
    BigInt total() const;

    /// Nonzero entries in canonical ValueSet order.
    const std::map<ValueSet, BigInt>& entries() const { return counts_; }

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    int n_;
    std::map<ValueSet, BigInt> counts_;
};

inline constexpr int kDefaultBruteCap = 10;

struct BruteOptions {
    int cap = kDefaultBruteCap;
    /// Worker count; 0 means hardware concurrency. Results never depend on it.
    unsigned threads = 1;
};

/// |{p in S_n : CDES(p) = S}| by exhaustive enumeration.
BigInt brute_cdes_count(int n, const ValueSet& set, const BruteOptions& options = {});

/// One enumeration pass over S_n aggregating every attained CDES value.
CountTable brute_cdes_table(int n, const BruteOptions& options = {});

/// |{p in S_n : NWEXB(p) = S}| by exhaustive enumeration.
BigInt brute_nwexb_count(int n, const ValueSet& set, const BruteOptions& options = {});

CountTable brute_nwexb_table(int n, const BruteOptions& options = {});

} // namespace cdes
