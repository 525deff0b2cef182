#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "hooklab/cores.hpp"
#include "hooklab/macdonald.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/rational.hpp"
#include "hooklab/series.hpp"

namespace hooklab {

/// sum_{|lambda| <= order} x^|lambda| prod_{h} (1 - z/h^2), the hook-length
/// expansion of prod (1-x^k)^{z-1}.
inline TruncatedSeries no_rhs(long long z, int order) {
    TruncatedSeries s(Rational(0), order);
    for (int n = 0; n <= order; ++n) {
        Rational acc(0);
        for (const auto& p : enumerate_partitions(PartitionClass::all, n)) {
            Rational prod(1);
            for (const auto& box : p.hook_multiset()) {
                const long long hh = static_cast<long long>(box.hook) * box.hook;
                prod *= Rational(hh - z, hh);
            }
            acc += prod;
        }
        s.set_coeff(n, acc);
    }
    return s;
}

namespace detail {

inline Rational dd_hook_product(const Partition& p, long long t) {
    Rational prod(1);
    for (const auto& box : p.hook_multiset()) {
        // 1 - (2t+2)/(h eps) == (h - eps (2t+2)) / h since eps is a sign.
        prod *= Rational(box.hook - box.epsilon * (2 * t + 2), box.hook);
    }
    return prod;
}

}  // namespace detail

/// sum over doubled distinct partitions of weight <= 2*order of
/// delta_lambda x^{|lambda|/2} prod_h (1 - (2t+2)/(h eps_h)).
inline TruncatedSeries typeC_rhs(long long t, int order) {
    TruncatedSeries s(Rational(0), order);
    for (int m = 0; m <= order; ++m) {
        Rational acc(0);
        for (const auto& p : enumerate_partitions(PartitionClass::doubled_distinct, 2 * m))
            acc += Rational(p.delta_sign()) * detail::dd_hook_product(p, t);
        s.set_coeff(m, acc);
    }
    return s;
}

/// The per-pair product Q over the joint principal hooks h:
///   (1 - (2t+2)/h)(1 - (t+1)/h) prod_{j=1}^{h-1} (1 - ((2t+2)/(h + tau_j j))^2)
/// with tau_j = +1 exactly when j is itself a joint principal hook. Q
/// vanishes exactly when the pair fails to be a pair of (t+1)-cores.
inline Rational pair_Q(const PairSCDD& pair, long long t) {
    const auto joint = pair.joint_principal_hooks();
    const std::set<long long> delta(joint.begin(), joint.end());
    const long long c = 2 * t + 2;
    Rational q(1);
    for (long long h : joint) {
        q *= Rational(h - c, h);
        q *= Rational(h - (t + 1), h);
        for (long long j = 1; j < h; ++j) {
            const long long d = delta.count(j) ? h + j : h - j;
            if (d == 0) throw std::logic_error("pair_Q denominator vanished");
            q *= Rational(d * d - c * c, d * d);
        }
    }
    return q;
}

enum class PairRange { all, cores_only };

/// sum over SC x DD pairs of weight <= order of
/// delta_lambda delta_mu x^{|lambda|+|mu|} pair_Q. With PairRange::cores_only
/// the sum is restricted to pairs of (t+1)-cores; the two agree because Q
/// kills every other pair.
inline TruncatedSeries pair_rhs(long long t, int order, PairRange range = PairRange::all) {
    std::vector<std::vector<Partition>> sc(static_cast<std::size_t>(order) + 1);
    std::vector<std::vector<Partition>> dd(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        sc[static_cast<std::size_t>(n)] = enumerate_partitions(PartitionClass::self_conjugate, n);
        dd[static_cast<std::size_t>(n)] = enumerate_partitions(PartitionClass::doubled_distinct, n);
    }
    const int modulus = static_cast<int>(t) + 1;
    TruncatedSeries s(Rational(0), order);
    for (int a = 0; a <= order; ++a) {
        for (const auto& lambda : sc[static_cast<std::size_t>(a)]) {
            if (range == PairRange::cores_only && !is_t_core(lambda, modulus)) continue;
            for (int b = 0; a + b <= order; ++b) {
                for (const auto& mu : dd[static_cast<std::size_t>(b)]) {
                    if (range == PairRange::cores_only && !is_t_core(mu, modulus)) continue;
                    const PairSCDD pair(lambda, mu, modulus);
                    const Rational q = pair_Q(pair, t);
                    if (q == 0) continue;
                    s.add_coeff(a + b,
                                Rational(lambda.delta_sign() * mu.delta_sign()) * q);
                }
            }
        }
    }
    return s;
}

struct ProductBridgeReport {
    bool pass = false;
    Rational pair_product;
    Rational dd_product;
    bool weight_ok = false;
    bool sign_ok = false;
    Partition nu;
};

/// Checks that Q of a pair equals the signed hook product over the doubled
/// distinct partition with doubled principal hooks, together with the weight
/// and Durfee-sign transport laws.
inline ProductBridgeReport bij_product_check(const PairSCDD& pair, long long t) {
    ProductBridgeReport rep;
    rep.nu = pair_to_dd(pair);
    rep.pair_product = pair_Q(pair, t);
    rep.dd_product = detail::dd_hook_product(rep.nu, t);
    rep.weight_ok = rep.nu.weight() == 2 * pair.weight();
    rep.sign_ok = rep.nu.delta_sign() == pair.lambda.delta_sign() * pair.mu.delta_sign();
    rep.pass = rep.weight_ok && rep.sign_ok && rep.pair_product == rep.dd_product;
    return rep;
}

/// sum over doubled distinct partitions of weight 2n of prod_h 1/h; equals
/// 1/(2^n n!).
inline Rational symplectic_hook_sum(int n) {
    if (n < 1) throw std::invalid_argument("symplectic hook sum needs n >= 1");
    Rational acc(0);
    for (const auto& p : enumerate_partitions(PartitionClass::doubled_distinct, 2 * n)) {
        Integer prod = 1;
        for (const auto& box : p.hook_multiset()) prod *= box.hook;
        acc += Rational(Integer(1), prod);
    }
    return acc;
}

enum class GenfuncMode { enumeration, product };

/// Generating function of SC x DD pairs of (t+1)-cores by total weight.
/// `product` builds the closed Pochhammer form; `enumeration` walks every
/// vector within the weight budget through varphi_inv and bins the actual
/// pair weights.
inline TruncatedSeries genfunc_pair(int t_plus_1, int order, GenfuncMode mode) {
    if (t_plus_1 < 1) throw std::invalid_argument("genfunc modulus must be >= 1");
    const int t = t_plus_1 - 1;
    if (mode == GenfuncMode::product) {
        TruncatedSeries s = pochhammer_inf(2, order) * pochhammer_inf(1, order).inverse();
        s = s * pochhammer_inf(t_plus_1, order);
        s = s * pochhammer_inf(2LL * t_plus_1, order).pow(t - 1);
        return s;
    }
    TruncatedSeries s(Rational(0), order);
    if (t == 0) {
        // 1-cores are empty; the only pair is (empty, empty).
        s.set_coeff(0, Rational(1));
        return s;
    }
    std::vector<long long> n;
    const long long m = t_plus_1;
    // Per-coordinate contribution m k^2 + i k is minimized at k = 0, so the
    // running weight only grows along the walk.
    auto walk = [&](auto&& self, long long weight_so_far) -> void {
        const long long i = static_cast<long long>(n.size()) + 1;
        if (i > t) {
            const PairSCDD pair = varphi_inv(n, t);
            const long long w = pair.weight();
            if (w != weight_so_far) throw std::logic_error("pair weight law violated");
            if (w <= order) s.add_coeff(static_cast<int>(w), Rational(1));
            return;
        }
        long long span = 0;
        while (m * span * span <= order) ++span;
        for (long long k = -span; k <= span; ++k) {
            const long long contrib = m * k * k + i * k;
            if (weight_so_far + contrib > order) continue;
            n.push_back(k);
            self(self, weight_so_far + contrib);
            n.pop_back();
        }
    };
    walk(walk, 0);
    return s;
}

struct CompactCheck {
    bool is_compact = false;
    std::vector<long long> maxima;  // ascending
};

/// Validates the 2t+2-compactness axioms and extracts the per-residue-class
/// maxima: all of -1..-(2t+1) present, every other element positive and not
/// divisible by 2t+2, positives closed downward within their class.
inline CompactCheck compact_ops(const std::set<long long>& a, long long t) {
    if (t < 1) throw std::invalid_argument("compact set parameter t must be >= 1");
    const long long m = 2 * t + 2;
    CompactCheck res;
    for (long long j = 1; j <= 2 * t + 1; ++j)
        if (!a.count(-j)) return res;
    for (long long e : a) {
        if (e >= -(2 * t + 1) && e <= -1) continue;
        if (e < 1 || mod_floor(e, m) == 0) return res;
        if (e > m && !a.count(e - m)) return res;
    }
    res.is_compact = true;
    std::vector<long long> best(static_cast<std::size_t>(m), 0);
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (long long e : a) {
        const auto cls = static_cast<std::size_t>(mod_floor(e, m));
        if (!seen[cls] || e > best[cls]) {
            best[cls] = e;
            seen[cls] = true;
        }
    }
    for (std::size_t cls = 0; cls < static_cast<std::size_t>(m); ++cls)
        if (seen[cls]) res.maxima.push_back(best[cls]);
    std::sort(res.maxima.begin(), res.maxima.end());
    return res;
}

struct CompactLemmaReport {
    bool pass = false;
    Rational lhs, rhs;
};

/// - prod_{a in A, a > 0} (1 - ((2t+2)/a)^2) == prod_{a maximal} (a+2t+2)/a.
inline CompactLemmaReport compact_lemma_check(const std::set<long long>& a, long long t) {
    const CompactCheck chk = compact_ops(a, t);
    if (!chk.is_compact) throw std::invalid_argument("compact_lemma_check requires a compact set");
    const long long m = 2 * t + 2;
    CompactLemmaReport rep;
    Rational lhs(-1);
    for (long long e : a) {
        if (e <= 0) continue;
        lhs *= Rational(e * e - m * m, e * e);
    }
    Rational rhs(1);
    for (long long e : chk.maxima) rhs *= make_rational(e + m, e);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = lhs == rhs;
    return rep;
}

/// Seeded random compact set: for every residue class a geometric-ish count
/// of positives capped at max_positive, on top of the mandatory negatives.
inline std::set<long long> random_compact_set(long long t, std::mt19937_64& rng,
                                              long long max_positive = 40) {
    const long long m = 2 * t + 2;
    std::set<long long> a;
    for (long long j = 1; j <= 2 * t + 1; ++j) a.insert(-j);
    for (long long r = 1; r < m; ++r) {
        long long max_count = 0;
        while (r + max_count * m <= max_positive) ++max_count;
        if (max_count == 0) continue;
        const long long count = static_cast<long long>(rng() % static_cast<unsigned long long>(max_count + 1));
        for (long long k = 0; k < count; ++k) a.insert(r + k * m);
    }
    return a;
}

struct LemmaRatioReport {
    bool pass = false;              // corrected member list satisfies the ratio
    bool alt_reading_pass = false;  // the verbatim-printed member list
    bool alt_reading_defined = false;
    bool recap_pass = false;
    bool maxima_match = false;      // member list is the maxima of its closure
    bool tau_match = false;         // closure positives match h11 + tau_j j
    int i0 = 0;
    Rational ratio, rhs_main, rhs_alt;
    Rational recap_lhs, recap_rhs;
};

namespace detail {

inline Rational delta_product(const DeltaProfile& prof, long long m) {
    Rational p(1);
    for (std::size_t i = 0; i < prof.delta_i.size(); ++i)
        p *= Rational(prof.sigma_i[i] * (m + prof.delta_i[i]));
    for (std::size_t i = 0; i < prof.delta_i.size(); ++i) {
        const long long a = m + prof.delta_i[i];
        for (std::size_t j = i + 1; j < prof.delta_i.size(); ++j) {
            const long long b = m + prof.delta_i[j];
            p *= Rational(a * a - b * b);
        }
    }
    return p;
}

}  // namespace detail

/// Hook-removal ratio and recap identity for a non-empty core pair. The
/// closed form for the ratio after deleting the largest joint hook h11 uses
/// the member list
///   {h11 + Delta_j, h11 - Delta_j - 2t-2 : j != i0}
///     u {h11 - t-1, h11 - 2t-2, 2 h11 - 2t-2},
/// which is simultaneously the per-class maxima of a compact set whose
/// positive part is {h11 + tau_j j}. The alternative reading with
/// h11 - 2t+2 / 2 h11 - 2t+2 in the last two slots is evaluated as well so
/// the two can be told apart numerically.
inline LemmaRatioReport lemma_ratio_check(const PairSCDD& pair, long long t) {
    const int m = static_cast<int>(t) + 1;
    if (!pair.is_core_pair(m))
        throw std::invalid_argument("lemma_ratio_check requires a pair of (t+1)-cores");
    const auto joint = pair.joint_principal_hooks();
    if (joint.empty()) throw std::invalid_argument("lemma_ratio_check requires a non-empty pair");

    LemmaRatioReport rep;
    const long long h11 = joint.front();
    const long long big_m = 2 * t + 2;

    const DeltaProfile prof = delta_profile(pair.lambda, pair.mu, m);

    int i0 = 0, i0_count = 0;
    for (std::size_t i = 0; i < prof.delta_i.size(); ++i) {
        if (prof.delta_i[i] == h11) {
            i0 = static_cast<int>(i) + 1;
            ++i0_count;
        }
    }
    if (i0_count != 1) throw std::logic_error("largest hook must sit in exactly one delta class");
    rep.i0 = i0;

    // Reduced pair: delete the outer principal hook from whichever side owns it.
    Partition red_lambda = pair.lambda, red_mu = pair.mu;
    if (h11 % 2 == 1) {
        auto hooks = pair.lambda.principal_hooks();
        hooks.erase(hooks.begin());
        red_lambda = self_conjugate_from_principal_hooks(hooks);
    } else {
        auto hooks = pair.mu.principal_hooks();
        hooks.erase(hooks.begin());
        red_mu = doubled_distinct_from_principal_hooks(hooks);
    }
    const DeltaProfile red = delta_profile(red_lambda, red_mu, m);
    rep.ratio = detail::delta_product(prof, m) / detail::delta_product(red, m);

    const Rational head = make_rational(h11 - big_m, h11) * make_rational(h11 - m, h11) *
                          make_rational(h11 + m, h11 - m);
    Rational tail(1);
    for (std::size_t i = 0; i < prof.delta_i.size(); ++i) {
        if (static_cast<int>(i) + 1 == i0) continue;
        const long long dj = prof.delta_i[i];
        tail *= make_rational((h11 + dj + big_m) * (h11 - dj), (h11 + dj) * (h11 - dj - big_m));
    }
    rep.rhs_main =
        head * make_rational(h11, h11 - big_m) * make_rational(2 * h11, 2 * h11 - big_m) * tail;
    if (h11 - big_m + 4 != 0 && 2 * h11 - big_m + 4 != 0) {
        rep.alt_reading_defined = true;
        rep.rhs_alt = head * make_rational(h11, h11 - big_m + 4) *
                      make_rational(2 * h11, 2 * h11 - big_m + 4) * tail;
        rep.alt_reading_pass = rep.ratio == rep.rhs_alt;
    }
    rep.pass = rep.ratio == rep.rhs_main;

    // Member list as per-class maxima of its downward closure.
    std::set<long long> members = {h11 - m, h11 - big_m, 2 * h11 - big_m};
    for (std::size_t i = 0; i < prof.delta_i.size(); ++i) {
        if (static_cast<int>(i) + 1 == i0) continue;
        members.insert(h11 + prof.delta_i[i]);
        members.insert(h11 - prof.delta_i[i] - big_m);
    }
    if (members.size() == static_cast<std::size_t>(2 * t + 1)) {
        std::set<long long> closure;
        for (long long j = 1; j <= 2 * t + 1; ++j) closure.insert(-j);
        for (long long e : members)
            for (long long v = e; v >= 1; v -= big_m) closure.insert(v);
        const CompactCheck chk = compact_ops(closure, t);
        std::vector<long long> want(members.begin(), members.end());
        rep.maxima_match = chk.is_compact && chk.maxima == want;

        std::set<long long> closure_pos;
        for (long long e : closure)
            if (e >= 1) closure_pos.insert(e);
        std::set<long long> tau_pos;
        const std::set<long long> delta_set(joint.begin(), joint.end());
        for (long long j = 1; j < h11; ++j) tau_pos.insert(delta_set.count(j) ? h11 + j : h11 - j);
        rep.tau_match = closure_pos == tau_pos;
    }

    // Recap identity: prod_i v_i prod_{i<j} (v_i^2 - v_j^2) with
    // v_i = (2t+2) n_i + i equals delta_lambda delta_mu / c1 times Q.
    const CoreVector n = varphi(PairSCDD(pair.lambda, pair.mu, m));
    std::vector<long long> vhat;
    for (std::size_t i = 0; i < n.entries.size(); ++i)
        vhat.push_back(big_m * n.entries[i] + static_cast<long long>(i) + 1);
    Rational lhs(1);
    for (long long v : vhat) lhs *= Rational(v);
    for (std::size_t i = 0; i < vhat.size(); ++i)
        for (std::size_t j = i + 1; j < vhat.size(); ++j)
            lhs *= Rational(vhat[i] * vhat[i] - vhat[j] * vhat[j]);
    const Rational c1 = macdonald_constant(Family::C, static_cast<int>(t));
    rep.recap_lhs = lhs;
    rep.recap_rhs = Rational(pair.lambda.delta_sign() * pair.mu.delta_sign()) / c1 *
                    pair_Q(pair, t);
    rep.recap_pass = rep.recap_lhs == rep.recap_rhs;

    rep.pass = rep.pass && rep.recap_pass && rep.maxima_match && rep.tau_match;
    return rep;
}

}  // namespace hooklab
