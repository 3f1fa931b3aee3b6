#pragma once

#include "cdes/bigint.hpp"
#include "cdes/value_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <span>
#include <string_view>
#include <vector>

namespace cdes {

/// Young diagram shape lambda_1 >= ... >= lambda_k >= 1 inside a
/// k x lambda_1 rectangle, so the border path has n = k + lambda_1 steps.
class PartitionShape {
public:
    /// Throws InvalidArgument unless parts are positive and weakly decreasing.
    explicit PartitionShape(std::vector<int> parts);

    /// "3,3,1".
    static PartitionShape parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int columns() const { return parts_.front(); }
    int semiperimeter() const { return rows() + columns(); }
    int boxes() const;
    /// 1-based row length.
    int row_length(int row) const { return parts_[static_cast<std::size_t>(row - 1)]; }

    std::string to_string() const;

    friend bool operator==(const PartitionShape&, const PartitionShape&) = default;

private:
    std::vector<int> parts_;
};

/// All shapes with exactly `boxes` boxes and at most `max_rows` rows,
/// reverse-lexicographic (largest first part first).
std::vector<PartitionShape> partitions_of(int boxes, int max_rows);

/// Shapes with the given semiperimeter (rows + columns).
std::vector<PartitionShape> shapes_with_semiperimeter(int n);

/// Distinct part values a_1 > ... > a_s and b_i = #{j : lambda_j >= a_i}.
struct PartitionType {
    std::vector<int> a;
    std::vector<int> b;

    friend bool operator==(const PartitionType&, const PartitionType&) = default;
};

PartitionType partition_type(const PartitionShape& shape);

struct BorderLabeling {
    int n;
    ValueSet horizontal;
};

/**
 * Walks the southeast border from the rectangle's northeast corner to its
 * southwest corner, numbering steps 1..n, and returns the labels of the
 * horizontal steps.
 */
BorderLabeling shape_to_descent_set(const PartitionShape& shape);

/// Count of permutation tableaux of this shape as cdes_n(S) of the border labels.
BigInt count_tableaux_formula(const PartitionShape& shape);

/// The same count written directly over the partition type (a, b).
BigInt count_tableaux_typed(const PartitionShape& shape);

/// 0/1 filling, row-major, row 1 on top.
struct TableauFilling {
    PartitionShape shape;
    std::vector<std::uint8_t> bits;

    /// 1-based.
    int at(int row, int column) const;
};

/// Rows of 0/1 characters, e.g. "11/1" for a (2,1) all-ones filling.
TableauFilling parse_filling(const PartitionShape& shape, std::string_view rows);

void dump_filling(std::ostream& os, const TableauFilling& filling);

/// Every column has a 1, and no 0 has both a 1 above it and a 1 to its left.
/// Throws InvalidArgument when bits do not match the shape's box count.
bool is_valid_tableau(const TableauFilling& filling);

inline constexpr int kDefaultTableauBoxCap = 20;

/// Counts valid fillings by depth-first search over boxes in column-major order.
BigInt brute_count_tableaux(const PartitionShape& shape, int box_cap = kDefaultTableauBoxCap);

} // namespace cdes
