#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdes/descent_formula.hpp"
#include "cdes/error.hpp"
#include "cdes/tableaux.hpp"
#include "oracle.hpp"

#include <sstream>

using namespace cdes;

TEST_CASE("shape validation and parsing") {
    CHECK(PartitionShape::parse("3,3,1") == PartitionShape({3, 3, 1}));
    CHECK(PartitionShape::parse("2").semiperimeter() == 3);
    CHECK_THROWS_AS(PartitionShape::parse("1,2"), InvalidArgument);
    CHECK_THROWS_AS(PartitionShape::parse("2,0"), InvalidArgument);
    CHECK_THROWS_AS(PartitionShape::parse(""), InvalidArgument);
    CHECK_THROWS_AS(PartitionShape::parse("2,,1"), InvalidArgument);
    CHECK(PartitionShape({3, 3, 1}).boxes() == 7);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(5, 5).size() == 7);
    CHECK(partitions_of(5, 2).size() == 3);
    for (int n = 2; n <= 10; ++n) CHECK(shapes_with_semiperimeter(n).size() == (std::size_t{1} << (n - 2)));
}

TEST_CASE("partition_type") {
    CHECK(partition_type(PartitionShape({2, 1})) == PartitionType{{2, 1}, {1, 2}});
    CHECK(partition_type(PartitionShape({3, 3, 1})) == PartitionType{{3, 1}, {2, 3}});
    CHECK(partition_type(PartitionShape({2, 2})) == PartitionType{{2}, {2}});
}

TEST_CASE("shape_to_descent_set") {
    auto [n1, s1] = shape_to_descent_set(PartitionShape({2, 1}));
    CHECK(n1 == 4);
    CHECK(s1 == ValueSet{2, 4});
    auto [n2, s2] = shape_to_descent_set(PartitionShape({1, 1, 1}));
    CHECK(n2 == 4);
    CHECK(s2 == ValueSet{4});
    auto [n3, s3] = shape_to_descent_set(PartitionShape({3}));
    CHECK(n3 == 4);
    CHECK(s3 == ValueSet{2, 3, 4});
    auto [n4, s4] = shape_to_descent_set(PartitionShape({2, 2}));
    CHECK(n4 == 4);
    CHECK(s4 == ValueSet{3, 4});
}

TEST_CASE("border labels for every shape") {
    for (int n = 2; n <= 12; ++n) {
        std::set<ValueSet> seen;
        for (const auto& shape : shapes_with_semiperimeter(n)) {
            const auto [m, s] = shape_to_descent_set(shape);
            CHECK(m == n);
            CHECK_FALSE(s.contains(1));
            CHECK(s.max() == n);
            CHECK(static_cast<int>(s.size()) == shape.columns());
            CHECK(m - static_cast<int>(s.size()) == shape.rows());
            seen.insert(s);
        }
        // Shapes of semiperimeter n biject onto subsets of [2, n] containing n.
        CHECK(seen.size() == (std::size_t{1} << (n - 2)));
    }
}

TEST_CASE("count_tableaux_formula examples") {
    CHECK(oracle::tableaux_count({2, 1}) == 3);
    CHECK(count_tableaux_formula(PartitionShape({2, 1})) == 3);
    CHECK(count_tableaux_formula(PartitionShape({1, 1, 1})) == 7);
    CHECK(count_tableaux_formula(PartitionShape({3})) == 1);
    CHECK(count_tableaux_typed(PartitionShape({2, 1})) == 3);
    CHECK(count_tableaux_typed(PartitionShape({1, 1, 1})) == 7);
    CHECK(count_tableaux_typed(PartitionShape({3})) == 1);
}

TEST_CASE("is_valid_tableau") {
    const PartitionShape hook({2, 1});
    CHECK(is_valid_tableau(parse_filling(hook, "11/1")));
    CHECK_FALSE(is_valid_tableau(parse_filling(hook, "01/0")));
    CHECK_FALSE(is_valid_tableau(parse_filling(PartitionShape({2, 2}), "11/10")));
    CHECK(is_valid_tableau(parse_filling(PartitionShape({2, 2}), "11/01")));
    CHECK_THROWS_AS(is_valid_tableau(TableauFilling{hook, {1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(parse_filling(hook, "11/11"), InvalidArgument);
    CHECK_THROWS_AS(parse_filling(hook, "11"), InvalidArgument);

    std::ostringstream os;
    dump_filling(os, parse_filling(PartitionShape({3, 1}), "101/1"));
    CHECK(os.str() == "101\n1\n");
}

TEST_CASE("brute_count_tableaux examples") {
    CHECK(brute_count_tableaux(PartitionShape({2, 1})) == 3);
    CHECK(brute_count_tableaux(PartitionShape({2, 2})) == 7);
    CHECK(brute_count_tableaux(PartitionShape({1, 1})) == 3);
    CHECK_THROWS_AS(brute_count_tableaux(PartitionShape({5, 5, 5, 5, 1})), CapExceeded);
    CHECK_THROWS_AS(brute_count_tableaux(PartitionShape({3, 3}), 5), CapExceeded);
}

TEST_CASE("pruned search agrees with full enumeration and the validity check") {
    for (int boxes = 1; boxes <= 9; ++boxes) {
        for (const auto& shape : partitions_of(boxes, 5)) {
            CAPTURE(shape.to_string());
            std::vector<int> parts(shape.parts().begin(), shape.parts().end());
            const auto expected = oracle::tableaux_count(parts);
            CHECK(brute_count_tableaux(shape) == expected);

            std::int64_t valid = 0;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << boxes); ++bits) {
                TableauFilling f{shape, {}};
                for (int i = 0; i < boxes; ++i) f.bits.push_back(static_cast<std::uint8_t>((bits >> i) & 1u));
                valid += is_valid_tableau(f);
            }
            CHECK(valid == expected);
        }
    }
}

TEST_CASE("closed counts match the filling oracle") {
    for (int boxes = 1; boxes <= 12; ++boxes) {
        for (const auto& shape : partitions_of(boxes, 5)) {
            CAPTURE(shape.to_string());
            const BigInt brute = brute_count_tableaux(shape);
            CHECK(count_tableaux_formula(shape) == brute);
            CHECK(count_tableaux_typed(shape) == brute);
        }
    }
}

TEST_CASE("shape counts add up to n!") {
    for (int n = 2; n <= 8; ++n) {
        BigInt exact = 0;
        for (const auto& shape : shapes_with_semiperimeter(n)) exact += count_tableaux_formula(shape);
        CHECK(exact == factorial(static_cast<unsigned long>(n)) - factorial(static_cast<unsigned long>(n - 1)));

        BigInt all = 1;
        for (int m = 2; m <= n; ++m) {
            for (const auto& shape : shapes_with_semiperimeter(m)) all += count_tableaux_formula(shape);
        }
        CHECK(all == factorial(static_cast<unsigned long>(n)));
    }
}
