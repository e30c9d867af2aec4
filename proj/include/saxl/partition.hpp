#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saxl/error.hpp"

namespace saxl {

/// Integer partition: weakly decreasing positive parts. Trailing zeros are
/// dropped at construction, so equality is plain structural equality.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        std::int64_t total = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw Error(ErrorCode::InvalidPartition, "parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
            total += parts_[i];
            if (total > std::numeric_limits<int>::max())
                throw Error(ErrorCode::InvalidPartition, "partition too large");
        }
        size_ = static_cast<int>(total);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses the text form "5,3,1,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        if (text.empty())
            return Partition{};
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value <= 0)
                throw Error(ErrorCode::Parse, "bad partition text '" + std::string(text) + "'");
            parts.push_back(value);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        try {
            return Partition(std::move(parts));
        } catch (const Error& e) {
            throw Error(ErrorCode::Parse, "'" + std::string(text) + "' is not a partition");
        }
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Number of nonzero parts (rows of the Young diagram).
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Number of boxes.
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part (0-based); zero past the last row.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline Partition transpose(const Partition& p) {
    std::vector<int> cols(p.empty() ? 0 : p[0], 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

/// Column lengths, left to right.
inline std::vector<int> column_lengths(const Partition& p) { return transpose(p).parts(); }

inline bool dominates(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw Error(ErrorCode::SizeMismatch,
                    "cannot compare " + p.to_string() + " and " + q.to_string() + " in dominance order");
    const std::size_t len = std::max(p.parts().size(), q.parts().size());
    std::int64_t sp = 0, sq = 0;
    for (std::size_t k = 0; k < len; ++k) {
        sp += p[k];
        sq += q[k];
        if (sp < sq)
            return false;
    }
    return true;
}

inline bool comparable(const Partition& p, const Partition& q) { return dominates(p, q) || dominates(q, p); }

inline Partition staircase(int n) {
    if (n < 1)
        throw Error(ErrorCode::BadShape, "staircase needs n >= 1");
    std::vector<int> parts(n);
    for (int i = 0; i < n; ++i)
        parts[i] = n - i;
    return Partition(std::move(parts));
}

/// Boxes in the staircase of order n.
constexpr int staircase_size(int n) noexcept { return n * (n + 1) / 2; }

inline Partition add(const Partition& p, const Partition& q) {
    const std::size_t len = std::max(p.parts().size(), q.parts().size());
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i)
        parts[i] = p[i] + q[i];
    return Partition(std::move(parts));
}

/// A single row of n boxes.
inline Partition row_partition(int n) { return n == 0 ? Partition{} : Partition({n}); }

/// A single column of n boxes.
inline Partition column_partition(int n) { return Partition(std::vector<int>(n, 1)); }

struct Hook {
    int row_len = 0; ///< length of the first row
    int col_len = 0; ///< boxes below the first box of the first column

    friend bool operator==(const Hook&, const Hook&) = default;
};

/// Decomposes p as a hook: first row of row_len boxes with col_len boxes
/// stacked below its first box. Absent when a second part exceeds 1.
inline std::optional<Hook> as_hook(const Partition& p) {
    if (p.empty())
        return Hook{};
    if (p.length() > 1 && p[1] > 1)
        return std::nullopt;
    return Hook{p[0], p.length() - 1};
}

inline Partition hook_partition(Hook h) {
    if (h.row_len == 0) {
        if (h.col_len != 0)
            throw Error(ErrorCode::InvalidPartition, "hook with empty row needs empty column");
        return Partition{};
    }
    std::vector<int> parts(1 + h.col_len, 1);
    parts[0] = h.row_len;
    return Partition(std::move(parts));
}

inline constexpr int default_enumeration_cap = 30;

/// All partitions of d in reverse lexicographic order, (d) first.
inline std::vector<Partition> enumerate_partitions(int d, int cap = default_enumeration_cap) {
    if (d < 0)
        throw Error(ErrorCode::BadShape, "negative size");
    if (d > cap)
        throw Error(ErrorCode::CapExceeded,
                    "enumerating partitions of " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
    std::vector<Partition> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{d};
    while (true) {
        out.emplace_back(cur);
        // Find the rightmost part > 1, decrement it and redistribute the tail
        // greedily with parts no larger than the decremented value.
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty())
            break;
        int v = --cur.back();
        int rest = ones + 1;
        while (rest > 0) {
            int take = std::min(v, rest);
            cur.push_back(take);
            rest -= take;
        }
    }
    return out;
}

/// All hooks with d boxes, longest first row first. There are exactly d of
/// them for d >= 1.
inline std::vector<Partition> enumerate_hooks(int d) {
    std::vector<Partition> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    for (int row = d; row >= 1; --row)
        out.push_back(hook_partition(Hook{row, d - row}));
    return out;
}

} // namespace saxl

template <>
struct std::hash<saxl::Partition> {
    std::size_t operator()(const saxl::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int part : p.parts()) {
            h ^= static_cast<std::size_t>(part);
            h *= 1099511628211ull;
        }
        return h;
    }
};
