#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdes/descent_formula.hpp"
#include "cdes/descent_recursion.hpp"
#include "cdes/error.hpp"

#include <thread>

using namespace cdes;

TEST_CASE("delta") {
    CHECK(delta({2, 4}) == ValueSet{1, 3});
    CHECK(delta({}) == ValueSet{});
    CHECK(delta({3, 5, 6}) == ValueSet{2, 4, 5});
    CHECK_THROWS_AS(delta({1, 2}), InvalidArgument);
}

TEST_CASE("cdes_recursive examples") {
    CHECK(cdes_recursive(3, {3}) == 3);
    CHECK(cdes_recursive(4, {3, 4}) == 7);
    CHECK(cdes_recursive(9, {2}) == 1);
    CHECK(cdes_recursive(5, {1, 4}) == 0);
    CHECK(cdes_recursive(5, {}) == 1);
    CHECK_THROWS_AS(cdes_recursive(3, {5}), InvalidArgument);
}

TEST_CASE("recursion agrees with the closed formula for n <= 12") {
    MemoCache cache;
    for (int n = 1; n <= 12; ++n) {
        for (const auto& s : subsets_of_range(2, n)) {
            CAPTURE(s.to_string());
            CHECK(cdes_recursive(n, s, &cache) == cdes_formula(n, s));
        }
    }
    CHECK(cache.size() > 0);
}

TEST_CASE("memoized, unmemoized and shortcut-free runs agree") {
    MemoCache cache;
    for (int n = 2; n <= 7; ++n) {
        for (const auto& s : subsets_of_range(2, n)) {
            if (!s.empty() && s.max() != n) continue;
            const BigInt memo = cdes_recursive(n, s, &cache);
            CHECK(cdes_recursive(n, s, nullptr) == memo);
            CHECK(cdes_recursive(n, s, nullptr, {.min_two_shortcut = false}) == memo);
        }
    }
}

TEST_CASE("min-two shortcut equals the general step") {
    // cdes_n(S u {2}) = cdes_{n-1}(delta S) for S subset [3, n]; the general
    // step's first two terms vanish because their sets contain 1.
    for (int n = 3; n <= 10; ++n) {
        for (const auto& s : subsets_of_range(3, n)) {
            const ValueSet with_two = s.with(2);
            CHECK(cdes_formula(n, with_two) == cdes_formula(n - 1, delta(s)));
            CHECK(cdes_formula(n, with_two.without(2).with(1)) == 0);
            CHECK(cdes_formula(n - 1, delta(with_two)) == 0);
        }
    }
}

TEST_CASE("cache values are normalized by max(S)") {
    MemoCache cache;
    const BigInt a = cdes_recursive(10, {3, 5}, &cache);
    const std::size_t size = cache.size();
    CHECK(cdes_recursive(7, {3, 5}, &cache) == a);
    CHECK(cdes_recursive(5, {3, 5}, &cache) == a);
    CHECK(cache.size() == size);
    CHECK(cache.find({3, 5}).value() == cdes_formula(5, {3, 5}));
}

TEST_CASE("shared cache under concurrent callers") {
    MemoCache cache;
    const auto sets = subsets_of_range(2, 13);
    std::vector<std::jthread> pool;
    std::vector<int> mismatches(4, 0);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < sets.size(); i += 3) {
                if (cdes_recursive(13, sets[i], &cache) != cdes_formula(13, sets[i])) {
                    ++mismatches[static_cast<std::size_t>(t)];
                }
            }
        });
    }
    pool.clear();
    for (int m : mismatches) CHECK(m == 0);
}

TEST_CASE("cdes_insertion_table examples") {
    const auto t3 = cdes_insertion_table(3);
    CHECK(t3.entries().size() == 4);
    CHECK(t3.at({}) == 1);
    CHECK(t3.at({2}) == 1);
    CHECK(t3.at({3}) == 3);
    CHECK(t3.at({2, 3}) == 1);

    const auto t4 = cdes_insertion_table(4);
    // (4 - 1 - 0) * cdes_3({}) + cdes_3({2}) + cdes_3({3}) = 3 + 1 + 3.
    CHECK(t4.at({4}) == 7);
    CHECK(t4.at({2, 3, 4}) == 1);
    CHECK(cdes_insertion_table(1).at({}) == 1);
}

TEST_CASE("insertion table matches the formula and sums to n!") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const auto table = cdes_insertion_table(n);
        for (const auto& s : subsets_of_range(2, n)) CHECK(table.at(s) == cdes_formula(n, s));
        CHECK(table.total() == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("the i = 1 insertion term is identically zero") {
    // The insertion sum over [n-1] \ S includes i = 1, whose set contains 1.
    for (int n = 3; n <= 9; ++n) {
        for (const auto& s : subsets_of_range(2, n - 1)) CHECK(cdes_formula(n - 1, s.with(1)) == 0);
    }
}
