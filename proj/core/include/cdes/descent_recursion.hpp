#pragma once

#include "cdes/bigint.hpp"
#include "cdes/perm_core.hpp"
#include "cdes/value_set.hpp"

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace cdes {

/// {s - 1 : s in S}. Rejects sets containing 1.
ValueSet delta(const ValueSet& set);

/**
 * Grow-only memo of cdes values keyed by S alone (n is normalized to max(S)).
 *
 * Safe for concurrent readers and writers. Two threads may compute the same
 * key; the first published value wins and later inserts are ignored.
 */
class MemoCache {
public:
    std::optional<BigInt> find(const ValueSet& key) const;
    void publish(const ValueSet& key, const BigInt& value);
    std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<ValueSet, BigInt, ValueSetHash> store_;
};

struct RecursionOptions {
    /// Apply cdes_n(S u {2}) = cdes_{n-1}(delta(S)) when min(S) = 2 instead of
    /// the general min-element step.
    bool min_two_shortcut = true;
};

/**
 * cdes_n(S) by the min-element recursion
 *
 *   cdes_n(S) = cdes_n(S u {i-1} \ {i}) + cdes_{n-1}(delta S) + cdes_{n-1}(delta S \ {i-1}),  i = min S
 *
 * with bases 1 in S -> 0, S empty -> 1, |S| = 1 -> 2^(max S - 1) - 1.
 * `cache` may be null for an unmemoized run.
 */
BigInt cdes_recursive(int n, const ValueSet& set, MemoCache* cache,
                      const RecursionOptions& options = {});

/// Convenience overload with a private cache.
BigInt cdes_recursive(int n, const ValueSet& set);

/**
 * Full table of cdes_n over subsets of [2, n], built bottom-up by inserting
 * the letter n:
 *
 *   cdes_n(S u {n}) = (n - 1 - |S|) cdes_{n-1}(S) + sum_{i in [2, n-1] \ S} cdes_{n-1}(S u {i})
 *
 * Sets without n carry over unchanged. Only nonzero entries are stored.
 */
CountTable cdes_insertion_table(int n);

} // namespace cdes
