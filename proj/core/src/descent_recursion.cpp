#include "cdes/descent_recursion.hpp"

#include "cdes/error.hpp"

#include <bit>
#include <cstdint>
#include <mutex>

namespace cdes {

ValueSet delta(const ValueSet& set) {
    if (set.contains(1)) throw InvalidArgument("delta is undefined for sets containing 1");
    std::vector<int> out;
    out.reserve(set.size());
    for (int s : set) out.push_back(s - 1);
    return ValueSet::from_sorted(std::move(out));
}

std::optional<BigInt> MemoCache::find(const ValueSet& key) const {
    std::shared_lock lock(mutex_);
    auto it = store_.find(key);
    if (it == store_.end()) return std::nullopt;
    return it->second;
}

void MemoCache::publish(const ValueSet& key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    store_.try_emplace(key, value);
}

std::size_t MemoCache::size() const {
    std::shared_lock lock(mutex_);
    return store_.size();
}

void MemoCache::clear() {
    std::unique_lock lock(mutex_);
    store_.clear();
}

namespace {

// n is implicitly max(S) at every node.
BigInt recurse(const ValueSet& set, MemoCache* cache, const RecursionOptions& options) {
    if (set.contains(1)) return 0;
    if (set.empty()) return 1;
    if (set.size() == 1) return ipow(2, static_cast<unsigned long>(set.max() - 1)) - 1;

    if (cache != nullptr) {
        if (auto hit = cache->find(set)) return *hit;
    }

    BigInt value;
    const int i = set.min();
    if (i == 2 && options.min_two_shortcut) {
        value = recurse(delta(set.without(2)), cache, options);
    } else {
        const ValueSet shrunk = delta(set);
        value = recurse(set.without(i).with(i - 1), cache, options) +
                recurse(shrunk, cache, options) +
                recurse(shrunk.without(i - 1), cache, options);
    }

    if (cache != nullptr) cache->publish(set, value);
    return value;
}

} // namespace

BigInt cdes_recursive(int n, const ValueSet& set, MemoCache* cache, const RecursionOptions& options) {
    if (n < 1) throw InvalidArgument("n must be positive");
    if (!set.empty() && set.max() > n) {
        throw InvalidArgument("n = " + std::to_string(n) + " is smaller than max(S) = " +
                              std::to_string(set.max()));
    }
    return recurse(set, cache, options);
}

BigInt cdes_recursive(int n, const ValueSet& set) {
    MemoCache cache;
    return cdes_recursive(n, set, &cache);
}

CountTable cdes_insertion_table(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    if (n > 24) throw CapExceeded("insertion tables are limited to n <= 24");

    // Indexed by bitmask, bit e for element e.
    std::vector<BigInt> table(4, BigInt(0));
    table[0] = 1;

    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(std::size_t{1} << (m + 1), BigInt(0));
        const std::uint64_t top = std::uint64_t{1} << m;
        for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
            if (mask & 0b11) continue;
            next[mask] = table[mask];

            const auto size = static_cast<long>(std::popcount(mask));
            BigInt grown = table[mask] * (m - 1 - size);
            for (int i = 2; i <= m - 1; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << i;
                if (!(mask & bit)) grown += table[mask | bit];
            }
            next[mask | top] = std::move(grown);
        }
        table = std::move(next);
    }

    CountTable out(n);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        if (table[mask] != 0) out.set(ValueSet::from_mask(mask), table[mask]);
    }
    return out;
}

} // namespace cdes
