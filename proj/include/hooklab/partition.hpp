#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hooklab {

/// A box of a Ferrers diagram together with its hook data. Rows are counted
/// from 1 starting at the longest part (the bottom row in French convention),
/// columns from 1. `epsilon` is -1 for boxes strictly above the diagonal,
/// i.e. row > column, and +1 on or below it.
struct BoxHook {
    int row = 0;
    int col = 0;
    int hook = 0;
    int epsilon = 1;

    friend bool operator==(const BoxHook&, const BoxHook&) = default;
};

/// Integer partition: a non-increasing list of positive parts. The empty
/// partition (weight 0) is valid. Immutable after construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    long long weight() const {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    /// 1-indexed part access; rows beyond the last part have size 0.
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(cols));
    }

    /// Side of the Durfee square: the largest i with part(i) >= i.
    int durfee() const {
        int d = 0;
        while (part(d + 1) >= d + 1) ++d;
        return d;
    }

    /// (-1)^durfee().
    int delta_sign() const { return durfee() % 2 == 0 ? 1 : -1; }

    /// Hook lengths of the diagonal boxes (i,i), i = 1..durfee().
    /// Strictly decreasing; their sum is the weight.
    std::vector<int> principal_hooks() const {
        const auto conj = conjugate();
        const int d = durfee();
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(d));
        for (int i = 1; i <= d; ++i)
            out.push_back((part(i) - i) + (conj.part(i) - i) + 1);
        return out;
    }

    /// One entry per box, row-major; hooks from the arm + leg + 1 formula.
    std::vector<BoxHook> hook_multiset() const {
        const auto conj = conjugate();
        std::vector<BoxHook> out;
        out.reserve(static_cast<std::size_t>(weight()));
        for (int i = 1; i <= length(); ++i) {
            for (int j = 1; j <= part(i); ++j) {
                const int arm = part(i) - j;
                const int leg = conj.part(j) - i;
                out.push_back({i, j, arm + leg + 1, i > j ? -1 : 1});
            }
        }
        return out;
    }

    bool is_self_conjugate() const { return parts_ == conjugate().parts_; }

    /// True exactly when the Frobenius symbol satisfies arm = leg + 1 in
    /// every diagonal row, i.e. the partition is a doubled distinct one.
    bool is_doubled_distinct() const {
        const auto conj = conjugate();
        const int d = durfee();
        for (int i = 1; i <= d; ++i) {
            const int arm = part(i) - i;
            const int leg = conj.part(i) - i;
            if (arm != leg + 1) return false;
        }
        return true;
    }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(parts_[k]);
        }
        s += ')';
        return s;
    }

private:
    std::vector<int> parts_;
};

/// Partition with strictly decreasing positive parts.
class DistinctPartition {
public:
    DistinctPartition() = default;

    explicit DistinctPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0)
                throw std::invalid_argument("distinct partition parts must be positive");
            if (k > 0 && parts_[k] >= parts_[k - 1])
                throw std::invalid_argument("distinct partition parts must strictly decrease");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    long long weight() const {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    auto operator<=>(const DistinctPartition&) const = default;

private:
    std::vector<int> parts_;
};

/// Rebuilds the partition with Frobenius symbol (arms | legs): row i of the
/// diagram has arms[i-1] boxes right of the diagonal and legs[i-1] above it.
inline Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
    if (arms.size() != legs.size())
        throw std::invalid_argument("frobenius arms/legs must have equal length");
    const int d = static_cast<int>(arms.size());
    for (int i = 0; i < d; ++i) {
        if (arms[i] < 0 || legs[i] < 0)
            throw std::invalid_argument("frobenius entries must be non-negative");
        if (i > 0 && (arms[i] >= arms[i - 1] || legs[i] >= legs[i - 1]))
            throw std::invalid_argument("frobenius entries must strictly decrease");
    }
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(arms[i - 1] + i);
    for (int i = d + 1;; ++i) {
        int row = 0;
        for (int j = 1; j <= d; ++j)
            if (legs[j - 1] + j >= i) ++row;
        if (row == 0) break;
        parts.push_back(row);
    }
    return Partition(std::move(parts));
}

/// Doubled distinct partition of mu0: shift row i of the shifted diagram
/// right by i and glue the transpose below; equivalently the partition with
/// Frobenius symbol (mu0_i | mu0_i - 1). Principal hooks come out as 2*mu0_i.
inline Partition double_distinct(const DistinctPartition& d) {
    std::vector<int> arms = d.parts();
    std::vector<int> legs = arms;
    for (int& l : legs) --l;
    return from_frobenius(arms, legs);
}

/// Inverse of double_distinct. Throws if p is not doubled distinct.
inline DistinctPartition undouble(const Partition& p) {
    if (!p.is_doubled_distinct())
        throw std::invalid_argument("partition is not doubled distinct");
    std::vector<int> parts;
    for (int i = 1; i <= p.durfee(); ++i) parts.push_back(p.part(i) - i);
    return DistinctPartition(std::move(parts));
}

/// Self-conjugate partition with the given odd, strictly decreasing
/// principal hook lengths.
inline Partition self_conjugate_from_principal_hooks(const std::vector<int>& hooks) {
    std::vector<int> arms;
    for (int h : hooks) {
        if (h <= 0 || h % 2 == 0)
            throw std::invalid_argument("self-conjugate principal hooks must be odd");
        arms.push_back((h - 1) / 2);
    }
    return from_frobenius(arms, arms);
}

/// Doubled distinct partition with the given even, strictly decreasing
/// principal hook lengths.
inline Partition doubled_distinct_from_principal_hooks(const std::vector<int>& hooks) {
    std::vector<int> arms, legs;
    for (int h : hooks) {
        if (h <= 0 || h % 2 != 0)
            throw std::invalid_argument("doubled distinct principal hooks must be even");
        arms.push_back(h / 2);
        legs.push_back(h / 2 - 1);
    }
    return from_frobenius(arms, legs);
}

struct Classification {
    bool self_conjugate = false;
    bool doubled_distinct = false;
};

inline Classification classify(const Partition& p) {
    return {p.is_self_conjugate(), p.is_doubled_distinct()};
}

enum class PartitionClass { all, distinct, self_conjugate, doubled_distinct };

namespace detail {

inline void gen_partitions(int remaining, int max_part, bool distinct, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, distinct ? p - 1 : p, distinct, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All partitions of weight n in the requested class, each exactly once, in
/// lexicographically decreasing part-list order.
inline std::vector<Partition> enumerate_partitions(PartitionClass cls, int n) {
    if (n < 0) throw std::invalid_argument("partition weight must be >= 0");
    std::vector<Partition> out;
    switch (cls) {
        case PartitionClass::all:
        case PartitionClass::distinct: {
            std::vector<int> cur;
            detail::gen_partitions(n, n, cls == PartitionClass::distinct, cur, out);
            break;
        }
        case PartitionClass::self_conjugate: {
            for (const auto& p : enumerate_partitions(PartitionClass::all, n))
                if (p.is_self_conjugate()) out.push_back(p);
            break;
        }
        case PartitionClass::doubled_distinct: {
            // Doubled distinct partitions of weight 2n correspond to distinct
            // partitions of weight n; odd weights give nothing.
            if (n % 2 != 0) break;
            for (const auto& d : enumerate_partitions(PartitionClass::distinct, n / 2))
                out.push_back(double_distinct(DistinctPartition(d.parts())));
            break;
        }
    }
    return out;
}

}  // namespace hooklab
