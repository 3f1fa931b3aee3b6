#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdes/descent_formula.hpp"
#include "cdes/error.hpp"
#include "cdes/generating_tree.hpp"
#include "oracle.hpp"

#include <set>
#include <sstream>

using namespace cdes;

namespace {

void check_labels(const TreeNode& node, int increments) {
    CHECK(node.label == 1 + increments);
    CHECK(node.label >= 1);
    CHECK(node.label <= node.height + 1);
    if (!node.is_leaf()) {
        REQUIRE(node.children.size() == 2);
        CHECK(node.children[0].label == node.label);
        CHECK(node.children[1].label == node.label + 1);
        check_labels(node.children[0], increments);
        check_labels(node.children[1], increments + 1);
    }
}

std::vector<int> path_to(const TreeNode& root, std::uint32_t choice, int k) {
    std::vector<int> path{root.label};
    const TreeNode* node = &root;
    for (int i = 0; i < k; ++i) {
        node = &node->children[(choice >> (k - 1 - i)) & 1u];
        path.push_back(node->label);
    }
    return path;
}

} // namespace

TEST_CASE("build_tree") {
    const auto t0 = build_tree(0);
    CHECK(t0.is_leaf());
    CHECK(t0.label == 1);

    const auto t1 = build_tree(1);
    REQUIRE(t1.children.size() == 2);
    CHECK(t1.children[0].label == 1);
    CHECK(t1.children[1].label == 2);

    std::vector<int> labels;
    const auto t2 = build_tree(2);
    for (const auto* leaf : leaves(t2)) labels.push_back(leaf->label);
    CHECK(labels == std::vector<int>{1, 2, 2, 3});

    CHECK_THROWS_AS(build_tree(21), CapExceeded);
    CHECK_THROWS_AS(build_tree(5, 4), CapExceeded);
    CHECK_THROWS_AS(build_tree(-1), InvalidArgument);
}

TEST_CASE("labels count incrementing edges") {
    for (int k = 0; k <= 8; ++k) {
        const auto root = build_tree(k);
        check_labels(root, 0);
        CHECK(leaves(root).size() == (std::size_t{1} << k));
    }
}

TEST_CASE("tree_weight_traversal examples") {
    const auto naive = oracle::cdes_table(4);
    CHECK(naive.at({2, 4}) == 3);
    CHECK(tree_weight_traversal({2, 1}) == 3);
    CHECK(tree_weight_traversal({1, 2}) == 7);
    CHECK(tree_weight_traversal({0}) == 0);
    CHECK(tree_weight_traversal({}) == 1);
    CHECK_THROWS_AS(tree_weight_traversal(WeightSequence(21, 1)), CapExceeded);
}

TEST_CASE("tree_weight_sum examples") {
    CHECK(tree_weight_sum({4}) == 15);
    CHECK(tree_weight_sum({1, 1, 2}) == 15);
    CHECK(tree_weight_sum({1, 1}) == 1);
    CHECK_THROWS_AS(tree_weight_sum(WeightSequence(31, 1)), CapExceeded);
}

TEST_CASE("traversal and closed sum agree") {
    // Every d with |d| <= 6 and entries <= 2, plus longer sparse samples.
    for (std::size_t k = 0; k <= 6; ++k) {
        std::size_t combos = 1;
        for (std::size_t i = 0; i < k; ++i) combos *= 3;
        for (std::size_t code = 0; code < combos; ++code) {
            WeightSequence d(k);
            std::size_t c = code;
            for (auto& e : d) {
                e = static_cast<unsigned>(c % 3);
                c /= 3;
            }
            CHECK(tree_weight_traversal(d) == tree_weight_sum(d));
        }
    }
    for (std::size_t k = 7; k <= 12; ++k) {
        for (unsigned seed = 0; seed < 4; ++seed) {
            WeightSequence d(k);
            for (std::size_t i = 0; i < k; ++i) d[i] = static_cast<unsigned>((i * 7 + seed * 3) % 5);
            CHECK(tree_weight_traversal(d) == tree_weight_sum(d));
        }
    }
}

TEST_CASE("tree weight of a gap vector is the descent count") {
    for (int n = 2; n <= 10; ++n) {
        for (const auto& s : subsets_of_range(2, n)) {
            if (s.empty()) continue;
            const BigInt w = tree_weight_sum(gap_vector(s).gaps);
            CHECK(w == cdes_formula(n, s));
            CHECK(w >= 0);
        }
    }
}

TEST_CASE("leaf_theta") {
    CHECK(leaf_theta(std::vector{1, 2, 3}) == std::vector{1, 1});
    CHECK(leaf_theta(std::vector{1, 1, 1}) == std::vector{0, 0});
    CHECK(leaf_theta(std::vector{1, 2, 2}) == std::vector{1, 0});
    CHECK_THROWS_AS(leaf_theta(std::vector{2, 3}), InvalidArgument);
    CHECK_THROWS_AS(leaf_theta(std::vector{1, 3}), InvalidArgument);
    CHECK_THROWS_AS(leaf_theta(std::vector{1, 0}), InvalidArgument);
    CHECK_THROWS_AS(leaf_from_theta(std::vector{2}), InvalidArgument);
}

TEST_CASE("theta is a bijection from leaves onto the cube") {
    for (int k = 0; k <= 12; ++k) {
        const auto root = build_tree(k);
        std::set<std::vector<int>> images;
        for (std::uint32_t choice = 0; choice < (1u << k); ++choice) {
            const auto path = path_to(root, choice, k);
            const auto bits = leaf_theta(path);
            CHECK(leaf_from_theta(bits) == path);
            images.insert(bits);
        }
        CHECK(images.size() == (std::size_t{1} << k));
    }
}

TEST_CASE("dump_tree format") {
    std::ostringstream os;
    dump_tree(os, build_tree(2));
    CHECK(os.str() ==
          "0 1 +\n"
          "  1 1 -\n"
          "    2 1 -\n"
          "    2 2 +\n"
          "  1 2 +\n"
          "    2 2 -\n"
          "    2 3 +\n");
}
