#pragma once

#include "cdes/bigint.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace cdes {

/// Exponent d_j applied to the vertex label at height j (j = 1..k).
using WeightSequence = std::vector<unsigned>;

/**
 * Node of the binary generating tree with root (1) and rule (k) -> (k)(k+1).
 * The left child keeps the label, the right child increments it.
 */
struct TreeNode {
    int label = 1;
    int height = 0;
    std::vector<TreeNode> children;

    bool is_leaf() const { return children.empty(); }
};

inline constexpr int kDefaultTreeCap = 20;
inline constexpr int kDefaultTreeSumCap = 30;

/// Materializes T_k (2^(k+1) - 1 nodes). Throws CapExceeded when k > cap.
TreeNode build_tree(int k, int cap = kDefaultTreeCap);

/// Leaves of `root` in left-to-right order.
std::vector<const TreeNode*> leaves(const TreeNode& root);

/**
 * Weight of T_k summed leaf by leaf: every root-to-leaf path contributes the
 * product of its vertex weights label^(d_height) and its edge signs, where an
 * edge that keeps the label is -1 and an edge that increments it is +1.
 */
BigInt tree_weight_traversal(const WeightSequence& d, int cap = kDefaultTreeCap);

/// The same weight as a sum over {0,1}^k without building the tree.
BigInt tree_weight_sum(const WeightSequence& d, int cap = kDefaultTreeSumCap);

/// Label increments along a root-to-leaf label path. Rejects paths that do not
/// start at 1 or take a step outside {0, 1}.
std::vector<int> leaf_theta(std::span<const int> leaf_path);

/// Inverse of leaf_theta: labels 1, 1 + x_1, 1 + x_1 + x_2, ...
std::vector<int> leaf_from_theta(std::span<const int> bits);

/// One line per node in preorder: two spaces per level, then
/// "<height> <label> <sign>", sign being the incoming edge sign ("+" at the root).
void dump_tree(std::ostream& os, const TreeNode& root);

} // namespace cdes
