#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdes/error.hpp"
#include "cdes/genocchi.hpp"

using namespace cdes;

namespace {
UniPolynomial poly(std::initializer_list<long> ascending) {
    std::vector<BigInt> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPolynomial(std::move(c));
}
} // namespace

TEST_CASE("univariate arithmetic") {
    CHECK(poly({1, 2, 1}).shifted() == poly({4, 4, 1}));
    CHECK(poly({0, 0, 0}).degree() == -1);
    CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
    CHECK(poly({1, 2, 3}).evaluate(2) == 17);
    CHECK(poly({1, -4, 6}).to_string() == "6*X^2 - 4*X + 1");
    CHECK(poly({-1, 2}).to_string() == "2*X - 1");
    CHECK(poly({}).to_string() == "0");
}

TEST_CASE("gandhi_poly") {
    CHECK(gandhi_poly(2, 0) == poly({1}));
    // X^2 - (X-1)^2.
    CHECK(gandhi_poly(2, 1) == poly({-1, 2}));
    // X^2 (2(X+1) - 1) - (X-1)^2 (2X - 1).
    CHECK(gandhi_poly(2, 2) == poly({1, -4, 6}));
    CHECK_THROWS_AS(gandhi_poly(0, 1), InvalidArgument);
    CHECK_THROWS_AS(gandhi_poly(2, -1), InvalidArgument);
}

TEST_CASE("gandhi_poly degree and shift identity") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 0; n <= 6; ++n) {
            const auto a = gandhi_poly(k, n);
            CHECK(a.degree() == k * n - n);
            CHECK(gandhi_poly(k, n + 1).evaluate(1) == a.evaluate(2));
        }
    }
}

TEST_CASE("genocchi_number") {
    CHECK(genocchi_number(2, 3) == 3);
    CHECK(genocchi_number(2, 4) == 17);
    for (int n = 1; n <= 8; ++n) CHECK(genocchi_number(1, n) == 1);
    const long classical[] = {1, 1, 3, 17, 155, 2073};
    for (int n = 1; n <= 6; ++n) CHECK(genocchi_number(2, n) == classical[n - 1]);
    CHECK_THROWS_AS(genocchi_number(2, 0), InvalidArgument);
}

TEST_CASE("brute_genocchi_perm_count") {
    CHECK(brute_genocchi_perm_count(2, 1) == 1);
    CHECK(brute_genocchi_perm_count(2, 2) == 3);
    CHECK(brute_genocchi_perm_count(1, 2) == 1);
    CHECK_THROWS_AS(brute_genocchi_perm_count(3, 3), CapExceeded);
    CHECK_THROWS_AS(brute_genocchi_perm_count(0, 3), InvalidArgument);
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; k * n <= 8; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(brute_genocchi_perm_count(k, n) == genocchi_number(k, n + 1));
        }
    }
}
