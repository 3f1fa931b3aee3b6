#include "cdes/generating_tree.hpp"

#include "cdes/error.hpp"

#include <bit>
#include <cstdint>
#include <ostream>
#include <string>

namespace cdes {

namespace {

void grow(TreeNode& node, int depth) {
    if (node.height == depth) return;
    node.children.reserve(2);
    for (int step = 0; step <= 1; ++step) {
        TreeNode child;
        child.label = node.label + step;
        child.height = node.height + 1;
        grow(child, depth);
        node.children.push_back(std::move(child));
    }
}

void check_depth(std::size_t k, int cap, const char* what) {
    if (static_cast<long>(k) > cap) {
        throw CapExceeded(std::string(what) + ": k = " + std::to_string(k) + " exceeds cap " +
                          std::to_string(cap));
    }
}

void collect_leaves(const TreeNode& node, std::vector<const TreeNode*>& out) {
    if (node.is_leaf()) {
        out.push_back(&node);
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, out);
}

void accumulate(const TreeNode& node, const BigInt& path_weight, const WeightSequence& d, BigInt& total) {
    if (node.is_leaf()) {
        total += path_weight;
        return;
    }
    for (const auto& child : node.children) {
        BigInt w = path_weight * ipow(static_cast<unsigned long>(child.label),
                                      d[static_cast<std::size_t>(child.height - 1)]);
        if (child.label == node.label) w = -w;
        accumulate(child, w, d, total);
    }
}

void dump(std::ostream& os, const TreeNode& node, char sign) {
    os << std::string(static_cast<std::size_t>(2 * node.height), ' ') << node.height << ' ' << node.label
       << ' ' << sign << '\n';
    for (const auto& child : node.children) dump(os, child, child.label == node.label ? '-' : '+');
}

} // namespace

TreeNode build_tree(int k, int cap) {
    if (k < 0) throw InvalidArgument("tree height must be nonnegative");
    check_depth(static_cast<std::size_t>(k), cap, "build_tree");
    TreeNode root;
    grow(root, k);
    return root;
}

std::vector<const TreeNode*> leaves(const TreeNode& root) {
    std::vector<const TreeNode*> out;
    collect_leaves(root, out);
    return out;
}

BigInt tree_weight_traversal(const WeightSequence& d, int cap) {
    check_depth(d.size(), cap, "tree_weight_traversal");
    const TreeNode root = build_tree(static_cast<int>(d.size()), cap);
    BigInt total = 0;
    accumulate(root, BigInt(1), d, total);
    return total;
}

BigInt tree_weight_sum(const WeightSequence& d, int cap) {
    check_depth(d.size(), cap, "tree_weight_sum");
    const std::size_t k = d.size();
    BigInt total = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
        BigInt term = 1;
        unsigned long partial = 1;
        for (std::size_t i = 0; i < k; ++i) {
            partial += (x >> i) & 1u;
            term *= ipow(partial, d[i]);
        }
        if ((k - static_cast<std::size_t>(std::popcount(x))) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

std::vector<int> leaf_theta(std::span<const int> leaf_path) {
    if (leaf_path.empty() || leaf_path.front() != 1) {
        throw InvalidArgument("a leaf path starts at the root label 1");
    }
    std::vector<int> bits;
    bits.reserve(leaf_path.size() - 1);
    for (std::size_t i = 1; i < leaf_path.size(); ++i) {
        const int step = leaf_path[i] - leaf_path[i - 1];
        if (step != 0 && step != 1) throw InvalidArgument("label steps must be 0 or 1");
        bits.push_back(step);
    }
    return bits;
}

std::vector<int> leaf_from_theta(std::span<const int> bits) {
    std::vector<int> path{1};
    path.reserve(bits.size() + 1);
    for (int b : bits) {
        if (b != 0 && b != 1) throw InvalidArgument("theta entries must be 0 or 1");
        path.push_back(path.back() + b);
    }
    return path;
}

void dump_tree(std::ostream& os, const TreeNode& root) { dump(os, root, '+'); }

} // namespace cdes
