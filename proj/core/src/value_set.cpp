#include "cdes/value_set.hpp"

#include "cdes/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>

namespace cdes {

ValueSet::ValueSet(std::initializer_list<int> elements)
    : ValueSet(from_sorted(std::vector<int>(elements))) {}

ValueSet ValueSet::from_sorted(std::vector<int> elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 1) {
            throw InvalidArgument("set elements must be positive, got " + std::to_string(elements[i]));
        }
        if (i > 0 && elements[i] <= elements[i - 1]) {
            throw InvalidArgument("set elements must be strictly increasing");
        }
    }
    return ValueSet(std::move(elements));
}

ValueSet ValueSet::from_unsorted(std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        throw InvalidArgument("set elements must be distinct");
    }
    return from_sorted(std::move(elements));
}

ValueSet ValueSet::from_mask(std::uint64_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    if (!out.empty() && out.front() == 0) {
        throw InvalidArgument("bit 0 does not correspond to a positive element");
    }
    return ValueSet(std::move(out));
}

ValueSet ValueSet::parse(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) {
        return {};
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw InvalidArgument("malformed set element '" + std::string(field) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_sorted(std::move(out));
}

bool ValueSet::contains(int value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

int ValueSet::min() const {
    if (elements_.empty()) throw InvalidArgument("min of the empty set");
    return elements_.front();
}

int ValueSet::max() const {
    if (elements_.empty()) throw InvalidArgument("max of the empty set");
    return elements_.back();
}

ValueSet ValueSet::with(int value) const {
    if (value < 1) throw InvalidArgument("set elements must be positive");
    auto out = elements_;
    auto it = std::lower_bound(out.begin(), out.end(), value);
    if (it == out.end() || *it != value) out.insert(it, value);
    return ValueSet(std::move(out));
}

ValueSet ValueSet::without(int value) const {
    auto out = elements_;
    auto it = std::lower_bound(out.begin(), out.end(), value);
    if (it != out.end() && *it == value) out.erase(it);
    return ValueSet(std::move(out));
}

std::uint64_t ValueSet::mask() const {
    std::uint64_t m = 0;
    for (int e : elements_) {
        if (e > 63) throw InvalidArgument("bitmask form requires elements <= 63");
        m |= std::uint64_t{1} << e;
    }
    return m;
}

std::string ValueSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(elements_[i]);
    }
    out += '}';
    return out;
}

std::strong_ordering operator<=>(const ValueSet& a, const ValueSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::ostream& operator<<(std::ostream& os, const ValueSet& set) { return os << set.to_string(); }

std::vector<ValueSet> subsets_of_range(int lo, int hi) {
    std::vector<ValueSet> out;
    if (hi < lo) {
        out.emplace_back();
        return out;
    }
    const int width = hi - lo + 1;
    if (width > 30) throw CapExceeded("refusing to list 2^" + std::to_string(width) + " subsets");
    out.reserve(std::size_t{1} << width);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << width); ++bits) {
        std::vector<int> elems;
        for (int i = 0; i < width; ++i) {
            if (bits & (std::uint32_t{1} << i)) elems.push_back(lo + i);
        }
        out.push_back(ValueSet::from_sorted(std::move(elems)));
    }
    return out;
}

std::size_t ValueSetHash::operator()(const ValueSet& set) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int e : set) {
        h ^= static_cast<std::size_t>(e);
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace cdes
