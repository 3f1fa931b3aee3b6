#include "cdes/perm_core.hpp"

#include "cdes/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>

namespace cdes {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const auto n = entries_.size();
    std::vector<bool> seen(n + 1, false);
    for (int e : entries_) {
        if (e < 1 || static_cast<std::size_t>(e) > n || seen[static_cast<std::size_t>(e)]) {
            throw InvalidArgument("not a permutation of [1, " + std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(e)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    return Permutation(std::move(entries));
}

ValueSet circular_descent_set(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i < p.size(); ++i) {
        if (p(i) > p(i + 1)) out.push_back(p(i));
    }
    return ValueSet::from_unsorted(std::move(out));
}

ValueSet nwexb_set(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i) {
        if (p(i) < i) out.push_back(i);
    }
    return ValueSet::from_sorted(std::move(out));
}

Permutation reduction(std::span<const int> sequence) {
    std::vector<int> sorted(sequence.begin(), sequence.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("reduction requires distinct entries");
    }
    std::vector<int> ranks;
    ranks.reserve(sequence.size());
    for (int v : sequence) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(ranks));
}

BigInt CountTable::at(const ValueSet& set) const {
    auto it = counts_.find(set);
    return it == counts_.end() ? BigInt(0) : it->second;
}

void CountTable::set(const ValueSet& set, BigInt value) {
    if (value == 0) {
        counts_.erase(set);
    } else {
        counts_[set] = std::move(value);
    }
}

void CountTable::add(const ValueSet& set, const BigInt& value) {
    auto& slot = counts_[set];
    slot += value;
    if (slot == 0) counts_.erase(set);
}

BigInt CountTable::total() const {
    BigInt sum = 0;
    for (const auto& [set, count] : counts_) sum += count;
    return sum;
}

namespace {

// Enumerations past this size overflow the 64-bit histogram and are far
// beyond any feasible runtime anyway.
constexpr int kHardEnumerationLimit = 20;

void check_cap(int n, int cap) {
    if (n < 1) throw InvalidArgument("n must be positive");
    if (n > cap) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                          std::to_string(cap));
    }
    if (n > kHardEnumerationLimit) {
        throw CapExceeded("exhaustive enumeration is limited to n <= " +
                          std::to_string(kHardEnumerationLimit));
    }
}

unsigned resolve_threads(unsigned requested, int jobs) {
    unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return std::min<unsigned>(t, static_cast<unsigned>(jobs));
}

/**
 * Histogram of `statistic(entries)` (a bitmask over [1, n]) across S_n.
 * Work is split by the leading entry; each leading entry's block is walked in
 * lexicographic successor order.
 */
template <class Statistic>
std::vector<std::uint64_t> mask_histogram(int n, unsigned threads, Statistic statistic) {
    const std::size_t buckets = std::size_t{1} << (n + 1);
    const unsigned workers = resolve_threads(threads, n);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(buckets, 0));
    std::atomic<int> next_lead{1};

    auto work = [&](unsigned id) {
        auto& hist = partial[id];
        std::vector<int> entries(static_cast<std::size_t>(n));
        for (int lead = next_lead++; lead <= n; lead = next_lead++) {
            entries[0] = lead;
            std::size_t pos = 1;
            for (int v = 1; v <= n; ++v) {
                if (v != lead) entries[pos++] = v;
            }
            do {
                ++hist[statistic(entries)];
            } while (std::next_permutation(entries.begin() + 1, entries.end()));
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    }

    std::vector<std::uint64_t> total(buckets, 0);
    for (const auto& hist : partial) {
        for (std::size_t i = 0; i < buckets; ++i) total[i] += hist[i];
    }
    return total;
}

std::uint64_t cdes_mask(const std::vector<int>& p) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] > p[i + 1]) m |= std::uint64_t{1} << p[i];
    }
    return m;
}

std::uint64_t nwexb_mask(const std::vector<int>& p) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int position = static_cast<int>(i) + 1;
        if (p[i] < position) m |= std::uint64_t{1} << position;
    }
    return m;
}

CountTable table_from_histogram(int n, const std::vector<std::uint64_t>& hist) {
    CountTable table(n);
    for (std::size_t mask = 0; mask < hist.size(); ++mask) {
        if (hist[mask] != 0) {
            table.set(ValueSet::from_mask(mask), BigInt(static_cast<unsigned long>(hist[mask])));
        }
    }
    return table;
}

BigInt count_from_histogram(const std::vector<std::uint64_t>& hist, const ValueSet& set, int n) {
    if (!set.empty() && set.max() > n) {
        throw InvalidArgument("set " + set.to_string() + " is not a subset of [1, " + std::to_string(n) + "]");
    }
    return BigInt(static_cast<unsigned long>(hist[set.mask()]));
}

} // namespace

BigInt brute_cdes_count(int n, const ValueSet& set, const BruteOptions& options) {
    check_cap(n, options.cap);
    return count_from_histogram(mask_histogram(n, options.threads, cdes_mask), set, n);
}

CountTable brute_cdes_table(int n, const BruteOptions& options) {
    check_cap(n, options.cap);
    return table_from_histogram(n, mask_histogram(n, options.threads, cdes_mask));
}

BigInt brute_nwexb_count(int n, const ValueSet& set, const BruteOptions& options) {
    check_cap(n, options.cap);
    return count_from_histogram(mask_histogram(n, options.threads, nwexb_mask), set, n);
}

CountTable brute_nwexb_table(int n, const BruteOptions& options) {
    check_cap(n, options.cap);
    return table_from_histogram(n, mask_histogram(n, options.threads, nwexb_mask));
}

} // namespace cdes
