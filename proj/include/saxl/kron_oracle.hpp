#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "saxl/contraction.hpp"
#include "saxl/error.hpp"
#include "saxl/partition.hpp"

namespace saxl {

/// Cycle lengths of a conjugacy class of the symmetric group.
using CycleType = Partition;

inline constexpr int default_oracle_cap = 25;

inline ExactScalar factorial(int d) {
    ExactScalar f = 1;
    for (int k = 2; k <= d; ++k)
        f *= k;
    return f;
}

/// Number of permutations with the given cycle type: d! / prod(l^m * m!).
inline ExactScalar class_size(const CycleType& ct) {
    ExactScalar z = 1;
    const auto& parts = ct.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const int len = parts[i];
        const int mult = static_cast<int>(j - i);
        for (int k = 1; k <= mult; ++k)
            z *= ExactScalar(len) * k;
        i = j;
    }
    return factorial(ct.size()) / z;
}

/// Memo table for Murnaghan-Nakayama: (shape, remaining cycles) -> character
/// value. Values never change once inserted; readers share, writers serialize.
class CharacterCache {
public:
    std::optional<std::int64_t> find(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(const std::string& key, std::int64_t value) {
        std::unique_lock lock(mutex_);
        table_.emplace(key, value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::int64_t> table_;
};

/// Character-theoretic ground truth for Kronecker coefficients.
class KroneckerOracle {
public:
    explicit KroneckerOracle(int cap = default_oracle_cap) : cap_(cap) {
        if (cap < 0 || cap > 120)
            throw Error(ErrorCode::CapExceeded, "oracle cap must lie in 0..120");
    }

    int cap() const noexcept { return cap_; }

    ExactScalar character(const Partition& lambda, const CycleType& ct) const {
        if (lambda.size() != ct.size())
            throw Error(ErrorCode::SizeMismatch,
                        "character of " + lambda.to_string() + " on class " + ct.to_string());
        check_cap(lambda.size());
        return ExactScalar(mn(lambda.parts(), ct.parts(), 0));
    }

    ExactScalar kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) const {
        if (lambda.size() != mu.size() || mu.size() != nu.size())
            throw Error(ErrorCode::SizeMismatch, "Kronecker coefficient needs equal sizes");
        const int d = lambda.size();
        check_cap(d);
        ExactScalar sum = 0;
        for (const auto& ct : enumerate_partitions(d, cap_))
            sum += class_size(ct) * mn(lambda.parts(), ct.parts(), 0) * mn(mu.parts(), ct.parts(), 0) *
                   mn(nu.parts(), ct.parts(), 0);
        return divide_class_sum(sum, d);
    }

    /// Multiplicity of every partition of |rho| in the tensor square of rho,
    /// zeros included.
    std::map<Partition, ExactScalar> tensor_square_decomposition(const Partition& rho) const {
        const int d = rho.size();
        check_cap(d);
        const auto classes = enumerate_partitions(d, cap_);
        std::vector<ExactScalar> weight;
        weight.reserve(classes.size());
        for (const auto& ct : classes) {
            ExactScalar chi = mn(rho.parts(), ct.parts(), 0);
            weight.push_back(class_size(ct) * chi * chi);
        }
        std::map<Partition, ExactScalar> out;
        for (const auto& nu : classes) {
            ExactScalar sum = 0;
            for (std::size_t i = 0; i < classes.size(); ++i)
                sum += weight[i] * mn(nu.parts(), classes[i].parts(), 0);
            out.emplace(nu, divide_class_sum(sum, d));
        }
        return out;
    }

    /// Dimension of the irreducible: the character on the identity class.
    ExactScalar dimension(const Partition& lambda) const {
        return character(lambda, CycleType(std::vector<int>(lambda.size(), 1)));
    }

    const CharacterCache& cache() const noexcept { return cache_; }

private:
    void check_cap(int d) const {
        if (d > cap_)
            throw Error(ErrorCode::CapExceeded,
                        "oracle limited to " + std::to_string(cap_) + " boxes, got " + std::to_string(d));
    }

    static ExactScalar divide_class_sum(const ExactScalar& sum, int d) {
        const ExactScalar dfact = factorial(d);
        if (sum % dfact != 0)
            throw Error(ErrorCode::InternalInconsistency, "class sum " + sum.str() + " not divisible by " +
                                                              std::to_string(d) + "!");
        ExactScalar value = sum / dfact;
        if (value < 0)
            throw Error(ErrorCode::InternalInconsistency, "negative Kronecker coefficient " + value.str());
        return value;
    }

    static std::string key(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t from) {
        std::string k;
        k.reserve(shape.size() + cycles.size() - from + 1);
        for (int p : shape)
            k.push_back(static_cast<char>(p));
        k.push_back('\0');
        for (std::size_t i = from; i < cycles.size(); ++i)
            k.push_back(static_cast<char>(cycles[i]));
        return k;
    }

    // Murnaghan-Nakayama: strip a border strip of length cycles[from] in
    // every possible way, via beta-numbers (abacus with one bead per row).
    std::int64_t mn(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t from) const {
        if (from == cycles.size())
            return shape.empty() ? 1 : 0;
        const std::string k = key(shape, cycles, from);
        if (auto hit = cache_.find(k))
            return *hit;

        const int len = static_cast<int>(shape.size());
        const int strip = cycles[from];
        std::vector<int> beads(len);
        for (int i = 0; i < len; ++i)
            beads[i] = shape[i] + (len - 1 - i); // strictly decreasing
        std::vector<char> occupied(len == 0 ? 1 : beads[0] + 1, 0);
        for (int b : beads)
            occupied[b] = 1;

        std::int64_t total = 0;
        std::vector<int> moved(len);
        for (int i = 0; i < len; ++i) {
            const int target = beads[i] - strip;
            if (target < 0 || occupied[target])
                continue;
            int between = 0;
            for (int p = target + 1; p < beads[i]; ++p)
                between += occupied[p];
            moved = beads;
            moved[i] = target;
            std::sort(moved.rbegin(), moved.rend());
            std::vector<int> next;
            for (int r = 0; r < len; ++r) {
                int part = moved[r] - (len - 1 - r);
                if (part > 0)
                    next.push_back(part);
            }
            std::int64_t sub = mn(next, cycles, from + 1);
            if (between % 2)
                sub = -sub;
            if (__builtin_add_overflow(total, sub, &total))
                throw Error(ErrorCode::InternalInconsistency, "character value overflow");
        }
        cache_.insert(k, total);
        return total;
    }

    int cap_;
    mutable CharacterCache cache_;
};

/// Process-wide oracle with the default cap; its cache is shared by all
/// callers of the free functions below.
inline const KroneckerOracle& default_oracle() {
    static const KroneckerOracle oracle;
    return oracle;
}

inline ExactScalar character(const Partition& lambda, const CycleType& ct) {
    return default_oracle().character(lambda, ct);
}

inline ExactScalar kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return default_oracle().kronecker(lambda, mu, nu);
}

inline std::map<Partition, ExactScalar> tensor_square_decomposition(const Partition& rho) {
    return default_oracle().tensor_square_decomposition(rho);
}

} // namespace saxl
