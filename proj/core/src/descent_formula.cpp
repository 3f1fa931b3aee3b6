#include "cdes/descent_formula.hpp"

#include "cdes/error.hpp"

#include <bit>
#include <cstdint>

namespace cdes {

GapVector gap_vector(const ValueSet& set) {
    GapVector out;
    if (set.empty()) return out;
    if (set.contains(1)) throw InvalidArgument("gap vector is undefined for sets containing 1");
    auto elems = set.elements();
    out.gaps.reserve(elems.size());
    for (std::size_t i = elems.size(); i-- > 1;) {
        out.gaps.push_back(static_cast<unsigned>(elems[i] - elems[i - 1]));
    }
    out.gaps.push_back(static_cast<unsigned>(elems.front() - 1));
    return out;
}

ValueSet set_from_gaps(const GapVector& gaps) {
    std::vector<int> elems(gaps.gaps.size());
    int value = 1;
    for (std::size_t i = gaps.gaps.size(); i-- > 0;) {
        if (gaps.gaps[i] == 0) throw InvalidArgument("gap entries must be positive");
        value += static_cast<int>(gaps.gaps[i]);
        elems[gaps.gaps.size() - 1 - i] = value;
    }
    return ValueSet::from_sorted(std::move(elems));
}

ValueSet RunType::to_set() const {
    std::vector<int> elems;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        for (int v = it->top - it->length + 1; v <= it->top; ++v) elems.push_back(v);
    }
    return ValueSet::from_sorted(std::move(elems));
}

RunType set_type(const ValueSet& set) {
    if (set.contains(1)) throw InvalidArgument("set type is undefined for sets containing 1");
    RunType out;
    auto elems = set.elements();
    for (std::size_t i = elems.size(); i-- > 0;) {
        const int v = elems[i];
        if (!out.runs.empty() && out.runs.back().top - out.runs.back().length == v) {
            ++out.runs.back().length;
        } else {
            out.runs.push_back({v, 1});
        }
    }
    return out;
}

namespace {

// Shared guards. Returns true and sets `result` when the answer is settled
// without evaluating the sum.
bool settled_by_guards(int n, const ValueSet& set, BigInt& result) {
    if (n < 1) throw InvalidArgument("n must be positive");
    if (!set.empty() && set.max() > n) {
        throw InvalidArgument("n = " + std::to_string(n) + " is smaller than max(S) = " +
                              std::to_string(set.max()));
    }
    if (set.contains(1)) {
        result = 0;
        return true;
    }
    if (set.empty()) {
        result = 1;
        return true;
    }
    if (set.size() > 62) throw CapExceeded("cube sums are limited to |S| <= 62");
    return false;
}

} // namespace

BigInt cdes_formula(int n, const ValueSet& set) {
    BigInt result;
    if (settled_by_guards(n, set, result)) return result;

    const auto d = gap_vector(set).gaps;
    const std::size_t k = d.size();

    // power[i][label] = label^d_i; at position i the label is at most i + 2.
    std::vector<std::vector<BigInt>> power(k);
    for (std::size_t i = 0; i < k; ++i) {
        power[i].resize(i + 3);
        for (std::size_t label = 1; label <= i + 2; ++label) power[i][label] = ipow(label, d[i]);
    }

    // prefix[t] = prod_{i < t} (label_i)^d_i; label[t] = 1 + x_1 + ... + x_t.
    std::vector<BigInt> prefix(k + 1, BigInt(1));
    std::vector<std::size_t> label(k + 1, 1);
    const auto rebuild = [&](std::size_t from, std::uint64_t counter) {
        for (std::size_t i = from; i < k; ++i) {
            const auto bit = (counter >> (k - 1 - i)) & 1u;
            label[i + 1] = label[i] + bit;
            prefix[i + 1] = prefix[i] * power[i][label[i + 1]];
        }
    };

    BigInt sum = 0;
    const std::uint64_t end = std::uint64_t{1} << k;
    rebuild(0, 0);
    for (std::uint64_t counter = 0;;) {
        if ((k - static_cast<std::size_t>(std::popcount(counter))) % 2 == 0) {
            sum += prefix[k];
        } else {
            sum -= prefix[k];
        }
        if (++counter == end) break;
        // x_1 is the high bit, so the highest flipped bit is the first position that changed.
        rebuild(k - 1 - static_cast<std::size_t>(std::countr_zero(counter)), counter);
    }
    return sum;
}

BigInt cdes_formula_typed(int n, const ValueSet& set) {
    BigInt result;
    if (settled_by_guards(n, set, result)) return result;

    const auto type = set_type(set);
    const std::size_t k = set.size();
    const std::size_t s = type.runs.size();

    // Cumulative run lengths M_i and the exponents r_i - r_{i+1} - m_i (r_{s+1} = 1).
    std::vector<std::size_t> cumulative(s);
    std::vector<unsigned long> exponent(s);
    std::size_t running = 0;
    for (std::size_t i = 0; i < s; ++i) {
        running += static_cast<std::size_t>(type.runs[i].length);
        cumulative[i] = running;
        const int next_top = i + 1 < s ? type.runs[i + 1].top : 1;
        exponent[i] = static_cast<unsigned long>(type.runs[i].top - next_top - type.runs[i].length);
    }

    BigInt sum = 0;
    std::vector<unsigned long> prefix(k + 1);
    for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << k); ++counter) {
        prefix[0] = 1;
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + ((counter >> (k - 1 - i)) & 1u);

        BigInt term = 1;
        for (std::size_t i = 1; i <= k; ++i) term *= prefix[i];
        for (std::size_t i = 0; i < s; ++i) term *= ipow(prefix[cumulative[i]], exponent[i]);

        if ((k - static_cast<std::size_t>(std::popcount(counter))) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

} // namespace cdes
