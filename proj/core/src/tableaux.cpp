#include "cdes/tableaux.hpp"

#include "cdes/descent_formula.hpp"
#include "cdes/error.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace cdes {

PartitionShape::PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidArgument("a shape needs at least one row");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidArgument("shape parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("shape parts must be weakly decreasing");
    }
}

PartitionShape PartitionShape::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw InvalidArgument("malformed shape part '" + std::string(field) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return PartitionShape(std::move(parts));
}

int PartitionShape::boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string PartitionShape::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& current,
                    std::vector<PartitionShape>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, rows_left - 1, current, out);
        current.pop_back();
    }
}

void bounded_rows(int rows_left, int max_part, std::vector<int>& current,
                  std::vector<PartitionShape>& out) {
    if (rows_left == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = max_part; part >= 1; --part) {
        current.push_back(part);
        bounded_rows(rows_left - 1, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<PartitionShape> partitions_of(int boxes, int max_rows) {
    std::vector<PartitionShape> out;
    if (boxes < 1 || max_rows < 1) return out;
    std::vector<int> current;
    partitions_rec(boxes, boxes, max_rows, current, out);
    return out;
}

std::vector<PartitionShape> shapes_with_semiperimeter(int n) {
    std::vector<PartitionShape> out;
    for (int rows = 1; rows < n; ++rows) {
        const int width = n - rows;
        std::vector<int> current{width};
        bounded_rows(rows - 1, width, current, out);
    }
    return out;
}

PartitionType partition_type(const PartitionShape& shape) {
    PartitionType type;
    const auto parts = shape.parts();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (type.a.empty() || type.a.back() != parts[j]) {
            type.a.push_back(parts[j]);
            type.b.push_back(0);
        }
        // Parts are weakly decreasing: b_i is the position of the last part equal to a_i.
        type.b.back() = static_cast<int>(j) + 1;
    }
    return type;
}

BorderLabeling shape_to_descent_set(const PartitionShape& shape) {
    const int k = shape.rows();
    const int n = shape.semiperimeter();
    std::vector<int> horizontal;
    int row = 1;
    int column = shape.columns();
    for (int step = 1; step <= n; ++step) {
        if (row <= k && shape.row_length(row) == column) {
            ++row;
        } else {
            horizontal.push_back(step);
            --column;
        }
    }
    return BorderLabeling{n, ValueSet::from_sorted(std::move(horizontal))};
}

BigInt count_tableaux_formula(const PartitionShape& shape) {
    const auto [n, set] = shape_to_descent_set(shape);
    return cdes_formula(n, set);
}

BigInt count_tableaux_typed(const PartitionShape& shape) {
    const auto type = partition_type(shape);
    const std::size_t width = static_cast<std::size_t>(shape.columns());
    const std::size_t s = type.a.size();
    if (width > 62) throw CapExceeded("cube sums are limited to 62 columns");

    // b with the sentinel b_0 = 1 in front; a stays 0-based (a[i-1] = a_i).
    std::vector<int> b{1};
    b.insert(b.end(), type.b.begin(), type.b.end());

    BigInt sum = 0;
    std::vector<unsigned long> prefix(width + 1);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << width); ++x) {
        prefix[0] = 1;
        for (std::size_t j = 0; j < width; ++j) prefix[j + 1] = prefix[j] + ((x >> j) & 1u);

        BigInt term = 1;
        for (std::size_t i = 1; i <= width; ++i) term *= prefix[i];
        for (std::size_t i = 1; i <= s; ++i) {
            const auto a = static_cast<std::size_t>(type.a[s - i]);
            const auto exponent = static_cast<unsigned long>(b[s + 1 - i] - b[s - i]);
            term *= ipow(prefix[a], exponent);
        }
        if ((width - static_cast<std::size_t>(std::popcount(x))) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

int TableauFilling::at(int row, int column) const {
    std::size_t offset = 0;
    for (int r = 1; r < row; ++r) offset += static_cast<std::size_t>(shape.row_length(r));
    return bits[offset + static_cast<std::size_t>(column - 1)];
}

TableauFilling parse_filling(const PartitionShape& shape, std::string_view rows) {
    TableauFilling filling{shape, {}};
    int row = 1;
    int in_row = 0;
    auto close_row = [&] {
        if (row > shape.rows() || in_row != shape.row_length(row)) {
            throw InvalidArgument("filling rows do not match shape " + shape.to_string());
        }
        ++row;
        in_row = 0;
    };
    for (char c : rows) {
        if (c == '0' || c == '1') {
            filling.bits.push_back(static_cast<std::uint8_t>(c - '0'));
            ++in_row;
        } else if (c == '/' || c == '\n') {
            close_row();
        } else if (c != ' ') {
            throw InvalidArgument(std::string("unexpected character '") + c + "' in filling");
        }
    }
    close_row();
    if (row != shape.rows() + 1) throw InvalidArgument("filling has too few rows for shape " + shape.to_string());
    return filling;
}

void dump_filling(std::ostream& os, const TableauFilling& filling) {
    for (int r = 1; r <= filling.shape.rows(); ++r) {
        for (int c = 1; c <= filling.shape.row_length(r); ++c) os << filling.at(r, c);
        os << '\n';
    }
}

bool is_valid_tableau(const TableauFilling& filling) {
    const auto& shape = filling.shape;
    if (filling.bits.size() != static_cast<std::size_t>(shape.boxes())) {
        throw InvalidArgument("filling has " + std::to_string(filling.bits.size()) + " cells, shape has " +
                              std::to_string(shape.boxes()));
    }
    for (int c = 1; c <= shape.columns(); ++c) {
        bool has_one = false;
        for (int r = 1; r <= shape.rows() && shape.row_length(r) >= c; ++r) has_one |= filling.at(r, c) == 1;
        if (!has_one) return false;
    }
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = 1; c <= shape.row_length(r); ++c) {
            if (filling.at(r, c) != 0) continue;
            bool above = false;
            for (int rr = 1; rr < r; ++rr) above |= filling.at(rr, c) == 1;
            bool left = false;
            for (int cc = 1; cc < c; ++cc) left |= filling.at(r, cc) == 1;
            if (above && left) return false;
        }
    }
    return true;
}

namespace {

struct FillingSearch {
    std::vector<int> heights;      // column heights, 0-based by column
    std::vector<bool> row_has_one; // a 1 in an earlier column, 0-based by row

    std::uint64_t column(std::size_t c) {
        if (c == heights.size()) return 1;
        return cell(c, 0, false);
    }

    std::uint64_t cell(std::size_t c, int r, bool above) {
        if (r == heights[c]) return above ? column(c + 1) : 0;
        const auto row = static_cast<std::size_t>(r);
        std::uint64_t total = 0;
        if (!(above && row_has_one[row])) total += cell(c, r + 1, above);
        const bool saved = row_has_one[row];
        row_has_one[row] = true;
        total += cell(c, r + 1, true);
        row_has_one[row] = saved;
        return total;
    }
};

} // namespace

BigInt brute_count_tableaux(const PartitionShape& shape, int box_cap) {
    if (shape.boxes() > box_cap) {
        throw CapExceeded("shape " + shape.to_string() + " has " + std::to_string(shape.boxes()) +
                          " boxes, cap is " + std::to_string(box_cap));
    }
    if (shape.boxes() > 62) throw CapExceeded("filling enumeration is limited to 62 boxes");
    FillingSearch search;
    for (int c = 1; c <= shape.columns(); ++c) {
        int h = 0;
        while (h < shape.rows() && shape.row_length(h + 1) >= c) ++h;
        search.heights.push_back(h);
    }
    search.row_has_one.assign(static_cast<std::size_t>(shape.rows()), false);
    return BigInt(static_cast<unsigned long>(search.column(0)));
}

} // namespace cdes
