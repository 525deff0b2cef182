#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooklab/partition.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

enum class VectorKind { gks, sc, dd, pair };

/// Integer vector image of a core (or core pair) under one of the abacus
/// bijections, tagged with the modulus it was computed against.
struct CoreVector {
    int modulus = 0;
    VectorKind kind = VectorKind::gks;
    std::vector<long long> entries;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(entries[k]);
        }
        s += ')';
        return s;
    }
};

namespace detail {

/// First-column offsets beta_i = part(i) - i for rows 1..rows. As a set in
/// Z these extend with beta_r = -r for all r beyond the length; an integer
/// b <= -(length+1) therefore always counts as occupied.
inline std::vector<long long> beta_values(const Partition& p, int rows) {
    std::vector<long long> b;
    b.reserve(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) b.push_back(static_cast<long long>(p.part(i)) - i);
    return b;
}

inline Partition partition_from_betas(std::vector<long long> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<>());
    std::vector<int> parts;
    for (std::size_t r = 0; r < betas.size(); ++r) {
        const long long part = betas[r] + static_cast<long long>(r) + 1;
        if (part < 0) throw std::logic_error("beta multiset does not describe a partition");
        if (part > 0) parts.push_back(static_cast<int>(part));
    }
    return Partition(std::move(parts));
}

}  // namespace detail

/// True when no hook length equals t; removing a length-t border strip is
/// the move beta -> beta - t on a free target, so this is the same as "no
/// such move exists".
inline bool is_t_core(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("core parameter t must be >= 1");
    const int len = p.length();
    const auto betas = detail::beta_values(p, len);
    const std::set<long long> occupied(betas.begin(), betas.end());
    for (long long b : betas) {
        const long long tgt = b - t;
        if (tgt >= -static_cast<long long>(len) && !occupied.count(tgt)) return false;
    }
    return true;
}

/// All partitions reachable from p by removing one border strip of length t,
/// listed by the row of the strip's head box (ascending, so the first entry
/// is the canonical lexicographically-smallest choice).
inline std::vector<Partition> ribbon_removals(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("core parameter t must be >= 1");
    const int len = p.length();
    auto betas = detail::beta_values(p, len);
    const std::set<long long> occupied(betas.begin(), betas.end());
    std::vector<Partition> out;
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const long long tgt = betas[i] - t;
        if (tgt < -static_cast<long long>(len) || occupied.count(tgt)) continue;
        auto next = betas;
        next[i] = tgt;
        out.push_back(detail::partition_from_betas(std::move(next)));
    }
    return out;
}

/// The t-core T(p): strips length-t ribbons until none remain, always taking
/// the strip with the smallest head row. The result does not depend on the
/// removal order; the test suite asserts this separately.
inline Partition t_core_reduce(Partition p, int t) {
    for (;;) {
        auto moves = ribbon_removals(p, t);
        if (moves.empty()) return p;
        p = std::move(moves.front());
    }
}

/// Abacus map on t-cores. Row i of the extended residue diagram exposes the
/// box with content beta_i = part(i) - i, whose label is beta_i mod t and
/// whose region is floor(beta_i / t) + 1; entry n_label is the largest region
/// exposing that label. Rows 1..length+t suffice since the t all-empty rows
/// after the last part already cover every label.
inline CoreVector gks_phi(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("core parameter t must be >= 1");
    if (!is_t_core(p, t)) throw std::invalid_argument("gks_phi requires a t-core");
    std::vector<long long> n(static_cast<std::size_t>(t));
    std::vector<bool> seen(static_cast<std::size_t>(t), false);
    for (int i = 1; i <= p.length() + t; ++i) {
        const long long beta = static_cast<long long>(p.part(i)) - i;
        const auto label = static_cast<std::size_t>(mod_floor(beta, t));
        const long long region = floor_div(beta, t) + 1;
        if (!seen[label] || region > n[label]) {
            n[label] = region;
            seen[label] = true;
        }
    }
    long long sum = 0;
    for (long long v : n) sum += v;
    if (sum != 0) throw std::logic_error("abacus vector of a t-core must sum to zero");
    return CoreVector{t, VectorKind::gks, std::move(n)};
}

/// Inverse abacus map: each class i carries the occupied positions
/// t(n_i - 1) + i, then every t-th below; reading the union top-down yields
/// the beta values of the unique t-core with that vector.
inline Partition gks_phi_inv(const std::vector<long long>& n, int t) {
    if (t < 1 || static_cast<int>(n.size()) != t)
        throw std::invalid_argument("gks vector length must equal t");
    long long sum = 0, max_abs = 0;
    for (long long v : n) {
        sum += v;
        max_abs = std::max(max_abs, v < 0 ? -v : v);
    }
    if (sum != 0) throw std::invalid_argument("gks vector entries must sum to zero");
    const long long depth = t * (max_abs + 2);
    std::vector<long long> betas;
    for (int i = 0; i < t; ++i) {
        for (long long b = t * (n[static_cast<std::size_t>(i)] - 1) + i; b >= -depth; b -= t)
            betas.push_back(b);
    }
    return detail::partition_from_betas(std::move(betas));
}

inline Partition gks_phi_inv(const CoreVector& v) { return gks_phi_inv(v.entries, v.modulus); }

namespace detail {

// A self-conjugate core has the centrally antisymmetric abacus vector
// n_i = -n_{t-1-i}; a doubled distinct core has n_0 = 0 and n_i = -n_{t-i}.
// Either way the trailing floor(t/2) (resp. floor((t-1)/2)) entries carry all
// the information, and these are what phi1/phi2 keep.

inline std::vector<long long> full_from_sc_slice(const std::vector<long long>& s, int t) {
    const int k = t / 2;
    if (static_cast<int>(s.size()) != k)
        throw std::invalid_argument("phi1 slice must have floor(t/2) entries");
    std::vector<long long> full(static_cast<std::size_t>(t), 0);
    for (int m = 0; m < k; ++m) {
        full[static_cast<std::size_t>(t - k + m)] = s[static_cast<std::size_t>(m)];
        full[static_cast<std::size_t>(k - 1 - m)] = -s[static_cast<std::size_t>(m)];
    }
    return full;
}

inline std::vector<long long> full_from_dd_slice(const std::vector<long long>& s, int t) {
    const int k = (t - 1) / 2;
    if (static_cast<int>(s.size()) != k)
        throw std::invalid_argument("phi2 slice must have floor((t-1)/2) entries");
    std::vector<long long> full(static_cast<std::size_t>(t), 0);
    for (int m = 0; m < k; ++m) {
        full[static_cast<std::size_t>(t - k + m)] = s[static_cast<std::size_t>(m)];
        full[static_cast<std::size_t>(k - m)] = -s[static_cast<std::size_t>(m)];
    }
    return full;
}

}  // namespace detail

/// Restriction of gks_phi to self-conjugate t-cores: the last floor(t/2)
/// abacus entries.
inline CoreVector phi1(const Partition& p, int t) {
    if (!p.is_self_conjugate()) throw std::invalid_argument("phi1 requires a self-conjugate partition");
    CoreVector full = gks_phi(p, t);
    for (int i = 0; i < t; ++i) {
        if (full.entries[static_cast<std::size_t>(i)] !=
            -full.entries[static_cast<std::size_t>(t - 1 - i)])
            throw std::logic_error("self-conjugate core vector must be centrally antisymmetric");
    }
    const int k = t / 2;
    std::vector<long long> slice(full.entries.end() - k, full.entries.end());
    return CoreVector{t, VectorKind::sc, std::move(slice)};
}

inline Partition phi1_inv(const std::vector<long long>& slice, int t) {
    Partition p = gks_phi_inv(detail::full_from_sc_slice(slice, t), t);
    if (!p.is_self_conjugate()) throw std::logic_error("phi1_inv produced a non-self-conjugate core");
    return p;
}

inline Partition phi1_inv(const CoreVector& v) { return phi1_inv(v.entries, v.modulus); }

/// Restriction of gks_phi to doubled distinct t-cores: the last
/// floor((t-1)/2) abacus entries.
inline CoreVector phi2(const Partition& p, int t) {
    if (!p.is_doubled_distinct()) throw std::invalid_argument("phi2 requires a doubled distinct partition");
    CoreVector full = gks_phi(p, t);
    if (full.entries[0] != 0) throw std::logic_error("doubled distinct core vector must start at zero");
    for (int i = 1; i < t; ++i) {
        if (full.entries[static_cast<std::size_t>(i)] !=
            -full.entries[static_cast<std::size_t>(t - i)])
            throw std::logic_error("doubled distinct core vector must be antisymmetric off zero");
    }
    const int k = (t - 1) / 2;
    std::vector<long long> slice(full.entries.end() - k, full.entries.end());
    return CoreVector{t, VectorKind::dd, std::move(slice)};
}

inline Partition phi2_inv(const std::vector<long long>& slice, int t) {
    Partition p = gks_phi_inv(detail::full_from_dd_slice(slice, t), t);
    if (!p.is_doubled_distinct()) throw std::logic_error("phi2_inv produced a non-doubled-distinct core");
    return p;
}

inline Partition phi2_inv(const CoreVector& v) { return phi2_inv(v.entries, v.modulus); }

// Weight laws attached to the bijections.

inline long long gks_weight(const std::vector<long long>& n) {
    const long long t = static_cast<long long>(n.size());
    long long norm2 = 0, dot = 0;
    for (long long i = 0; i < t; ++i) {
        norm2 += n[static_cast<std::size_t>(i)] * n[static_cast<std::size_t>(i)];
        dot += i * n[static_cast<std::size_t>(i)];
    }
    // norm2 is even whenever the entries sum to zero.
    return t * norm2 / 2 + dot;
}

inline long long phi1_weight(const std::vector<long long>& s, int t) {
    long long w = 0;
    for (std::size_t m = 0; m < s.size(); ++m) {
        const long long c = (t % 2 == 0) ? (2 * static_cast<long long>(m) + 1)
                                         : (2 * static_cast<long long>(m) + 2);
        w += t * s[m] * s[m] + c * s[m];
    }
    return w;
}

inline long long phi2_weight(const std::vector<long long>& s, int t) {
    long long w = 0;
    for (std::size_t m = 0; m < s.size(); ++m) {
        const long long d = (t % 2 == 0) ? (2 * static_cast<long long>(m) + 2)
                                         : (2 * static_cast<long long>(m) + 1);
        w += t * s[m] * s[m] + d * s[m];
    }
    return w;
}

inline long long varphi_weight(const std::vector<long long>& n, int t) {
    long long w = 0;
    for (long long i = 1; i <= t; ++i) {
        const long long v = n[static_cast<std::size_t>(i - 1)];
        w += (t + 1) * v * v + i * v;
    }
    return w;
}

/// A (self-conjugate, doubled distinct) partition pair, optionally bound to
/// a modulus t+1. Class membership is enforced; being cores is not, since
/// several hook-product operations range over arbitrary pairs.
struct PairSCDD {
    Partition lambda;
    Partition mu;
    int t_plus_1 = 0;

    PairSCDD() = default;

    PairSCDD(Partition l, Partition m, int modulus) : lambda(std::move(l)), mu(std::move(m)), t_plus_1(modulus) {
        if (!lambda.is_self_conjugate())
            throw std::invalid_argument("pair violates invariant: lambda must be self-conjugate");
        if (!mu.is_doubled_distinct())
            throw std::invalid_argument("pair violates invariant: mu must be doubled distinct");
        if (modulus < 0) throw std::invalid_argument("pair modulus must be non-negative");
    }

    long long weight() const { return lambda.weight() + mu.weight(); }

    bool is_core_pair() const { return is_core_pair(t_plus_1); }

    bool is_core_pair(int modulus) const {
        return modulus >= 1 && is_t_core(lambda, modulus) && is_t_core(mu, modulus);
    }

    /// Joint principal hook lengths, descending. Odd ones belong to lambda,
    /// even ones to mu, so they never collide.
    std::vector<long long> joint_principal_hooks() const {
        std::vector<long long> d;
        for (int h : lambda.principal_hooks()) d.push_back(h);
        for (int h : mu.principal_hooks()) d.push_back(h);
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }
};

/// Per-class hook maxima of a pair: Delta_i is the largest joint principal
/// hook congruent to +-i - (t+1) mod 2t+2, with fallback i - (t+1) when the
/// class is empty. sigma_i and n_i are recovered from the congruence class
/// of t+1+Delta_i.
struct DeltaProfile {
    int t = 0;
    std::vector<long long> delta;    // ascending
    std::vector<long long> delta_i;  // [i-1] for i = 1..t
    std::vector<int> sigma_i;
    std::vector<long long> n_i;
};

inline DeltaProfile delta_profile(const Partition& lambda, const Partition& mu, int t_plus_1) {
    if (t_plus_1 < 2) throw std::invalid_argument("delta profile needs modulus t+1 >= 2");
    const int t = t_plus_1 - 1;
    const long long m = t_plus_1;
    const long long big_m = 2 * m;

    DeltaProfile prof;
    prof.t = t;
    for (int h : lambda.principal_hooks()) prof.delta.push_back(h);
    for (int h : mu.principal_hooks()) prof.delta.push_back(h);
    std::sort(prof.delta.begin(), prof.delta.end());

    for (long long i = 1; i <= t; ++i) {
        const long long r_plus = mod_floor(i - m, big_m);
        const long long r_minus = mod_floor(-i - m, big_m);
        long long best = i - m;
        for (long long h : prof.delta) {
            const long long hm = mod_floor(h, big_m);
            if ((hm == r_plus || hm == r_minus) && h > best) best = h;
        }
        prof.delta_i.push_back(best);
        const int sigma = (mod_floor(m + best, big_m) == mod_floor(i, big_m)) ? 1 : -1;
        prof.sigma_i.push_back(sigma);
        const long long num = sigma * (m + best) - i;
        if (mod_floor(num, big_m) != 0)
            throw std::logic_error("delta class value inconsistent with its residue");
        prof.n_i.push_back(num / big_m);
    }
    return prof;
}

inline DeltaProfile delta_profile(const PairSCDD& pair) {
    return delta_profile(pair.lambda, pair.mu, pair.t_plus_1);
}

/// Bijection between pairs of (t+1)-cores in SC x DD and Z^t. The vector
/// interleaves the phi1 and phi2 slices: for odd t+1 the even positions hold
/// phi1(lambda) and the odd positions phi2(mu); for even t+1 the parities
/// swap.
inline CoreVector varphi(const PairSCDD& pair) {
    const int m = pair.t_plus_1;
    if (m < 2) throw std::invalid_argument("varphi needs modulus t+1 >= 2");
    if (!is_t_core(pair.lambda, m))
        throw std::invalid_argument("pair violates invariant: lambda must be a (t+1)-core");
    if (!is_t_core(pair.mu, m))
        throw std::invalid_argument("pair violates invariant: mu must be a (t+1)-core");
    const int t = m - 1;
    const auto sc = phi1(pair.lambda, m).entries;
    const auto dd = phi2(pair.mu, m).entries;
    std::vector<long long> n(static_cast<std::size_t>(t));
    std::size_t si = 0, di = 0;
    for (int q = 1; q <= t; ++q) {
        const bool sc_position = (m % 2 == 1) ? (q % 2 == 0) : (q % 2 == 1);
        n[static_cast<std::size_t>(q - 1)] = sc_position ? sc[si++] : dd[di++];
    }
    if (si != sc.size() || di != dd.size()) throw std::logic_error("varphi interleave size mismatch");
    return CoreVector{m, VectorKind::pair, std::move(n)};
}

inline PairSCDD varphi_inv(const std::vector<long long>& n, int t) {
    if (t < 1 || static_cast<int>(n.size()) != t)
        throw std::invalid_argument("varphi vector length must equal t");
    const int m = t + 1;
    std::vector<long long> sc, dd;
    for (int q = 1; q <= t; ++q) {
        const bool sc_position = (m % 2 == 1) ? (q % 2 == 0) : (q % 2 == 1);
        (sc_position ? sc : dd).push_back(n[static_cast<std::size_t>(q - 1)]);
    }
    return PairSCDD(phi1_inv(sc, m), phi2_inv(dd, m), m);
}

inline PairSCDD varphi_inv(const CoreVector& v) { return varphi_inv(v.entries, v.modulus - 1); }

/// The doubled distinct partition whose principal hooks are twice the pair's
/// joint principal hooks. Doubling the hook set is exactly doubling the
/// distinct partition formed by the joint hooks.
inline Partition pair_to_dd(const PairSCDD& pair) {
    const auto joint = pair.joint_principal_hooks();
    std::vector<int> parts(joint.begin(), joint.end());
    return double_distinct(DistinctPartition(std::move(parts)));
}

/// Splits a doubled distinct partition back into the (SC, DD) pair: halve
/// the principal hooks, route odd halves to lambda and even halves to mu.
inline PairSCDD dd_to_pair(const Partition& nu, int t_plus_1 = 0) {
    if (!nu.is_doubled_distinct())
        throw std::invalid_argument("dd_to_pair requires a doubled distinct partition");
    std::vector<int> odd, even;
    for (int h : nu.principal_hooks()) {
        const int half = h / 2;
        (half % 2 == 1 ? odd : even).push_back(half);
    }
    return PairSCDD(self_conjugate_from_principal_hooks(odd),
                    doubled_distinct_from_principal_hooks(even), t_plus_1);
}

}  // namespace hooklab
