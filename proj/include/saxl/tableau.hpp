#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "saxl/error.hpp"
#include "saxl/partition.hpp"

namespace saxl {

/// Assignment of positive integers to the boxes of a Young diagram, stored
/// row by row.
class Filling {
public:
    Filling() = default;

    explicit Filling(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        lengths.reserve(rows_.size());
        for (const auto& row : rows_)
            lengths.push_back(static_cast<int>(row.size()));
        try {
            shape_ = Partition(lengths);
        } catch (const Error&) {
            throw Error(ErrorCode::BadShape, "row lengths of a filling must form a partition");
        }
        if (shape_.length() != static_cast<int>(rows_.size()))
            throw Error(ErrorCode::BadShape, "filling has an empty row");
        for (const auto& row : rows_)
            for (int v : row)
                if (v <= 0)
                    throw Error(ErrorCode::BadShape, "filling entries must be positive");
    }

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int at(int row, int col) const { return rows_.at(row).at(col); }

    /// Entries of column j, top to bottom.
    std::vector<int> column(int j) const {
        std::vector<int> out;
        for (const auto& row : rows_) {
            if (static_cast<int>(row.size()) <= j)
                break;
            out.push_back(row[j]);
        }
        return out;
    }

    int num_columns() const noexcept { return shape_.empty() ? 0 : shape_[0]; }

    friend bool operator==(const Filling&, const Filling&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Multiplicity vector: entry i-1 counts occurrences of i. Length is the
/// largest entry.
inline std::vector<int> content(const Filling& f) {
    std::vector<int> gamma;
    for (const auto& row : f.rows())
        for (int v : row) {
            if (static_cast<int>(gamma.size()) < v)
                gamma.resize(v, 0);
            ++gamma[v - 1];
        }
    return gamma;
}

/// Content compared against a partition, ignoring trailing zero counts.
inline bool has_content(const Filling& f, const Partition& gamma) {
    std::vector<int> c = content(f);
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c == gamma.parts();
}

inline bool is_semistandard(const Filling& f) {
    const auto& rows = f.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c - 1] > rows[r][c])
                return false;
            if (r > 0 && rows[r - 1][c] >= rows[r][c])
                return false;
        }
    return true;
}

inline bool has_distinct_column_entries(const Filling& f) {
    for (int j = 0; j < f.num_columns(); ++j) {
        std::vector<int> col = f.column(j);
        std::sort(col.begin(), col.end());
        if (std::adjacent_find(col.begin(), col.end()) != col.end())
            return false;
    }
    return true;
}

enum class FillingPredicate { semistandard, distinct_columns };

inline constexpr int default_brute_force_filling_cap = 12;

/// Exhaustive search over every filling of `shape` with content `gamma`
/// (each distinct placement once, row-major lexicographic order).
inline std::optional<Filling> brute_force_filling_search(const Partition& shape, const Partition& gamma,
                                                         FillingPredicate predicate,
                                                         int cap = default_brute_force_filling_cap) {
    if (shape.size() > cap)
        throw Error(ErrorCode::CapExceeded, "brute-force filling search limited to " + std::to_string(cap) + " boxes");
    if (shape.size() != gamma.size())
        throw Error(ErrorCode::SizeMismatch, "shape " + shape.to_string() + " vs content " + gamma.to_string());

    std::vector<int> word;
    for (int i = 0; i < gamma.length(); ++i)
        word.insert(word.end(), gamma[i], i + 1);

    std::vector<std::vector<int>> rows(shape.length());
    do {
        auto it = word.begin();
        for (int r = 0; r < shape.length(); ++r) {
            rows[r].assign(it, it + shape[r]);
            it += shape[r];
        }
        Filling f(rows);
        bool ok = predicate == FillingPredicate::semistandard ? is_semistandard(f) : has_distinct_column_entries(f);
        if (ok)
            return f;
    } while (std::next_permutation(word.begin(), word.end()));
    return std::nullopt;
}

namespace detail {

// Values 1..k in order; the copies of value i go one per column into the
// columns with the most unfilled boxes, ties broken leftmost. Returns
// nullopt if some value cannot be spread over distinct columns.
inline std::optional<Filling> greedy_column_filling(const Partition& shape, const Partition& gamma) {
    const std::vector<int> heights = column_lengths(shape);
    const int ncols = static_cast<int>(heights.size());
    std::vector<int> filled(ncols, 0);
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r)
        rows[r].assign(shape[r], 0);

    std::vector<int> order(ncols);
    for (int value = 1; value <= gamma.length(); ++value) {
        const int copies = gamma[value - 1];
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return heights[a] - filled[a] > heights[b] - filled[b];
        });
        if (copies > ncols)
            return std::nullopt;
        for (int k = 0; k < copies; ++k) {
            int col = order[k];
            if (filled[col] >= heights[col])
                return std::nullopt;
            rows[filled[col]][col] = value;
            ++filled[col];
        }
    }
    return Filling(std::move(rows));
}

} // namespace detail

/// Semistandard filling of `shape` with content `gamma`, present exactly when
/// `shape` dominates `gamma`.
inline std::optional<Filling> gale_ryser_filling(const Partition& shape, const Partition& gamma) {
    if (!dominates(shape, gamma))
        return std::nullopt;
    auto valid = [&](const std::optional<Filling>& f) {
        return f && f->shape() == shape && is_semistandard(*f) && has_content(*f, gamma);
    };
    std::optional<Filling> f = detail::greedy_column_filling(shape, gamma);
    if (valid(f))
        return f;
    if (shape.size() <= default_brute_force_filling_cap) {
        f = brute_force_filling_search(shape, gamma, FillingPredicate::semistandard);
        if (valid(f))
            return f;
    }
    throw Error(ErrorCode::InternalInconsistency,
                "no semistandard filling found for dominating pair " + shape.to_string() + " / " + gamma.to_string());
}

} // namespace saxl
