#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hooklab/rational.hpp"
#include "hooklab/series.hpp"

namespace hooklab {

enum class Family { A, B, C, BC };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::BC: return "BC";
    }
    return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "BC" || s == "bc" || s == "Bc") return Family::BC;
    return std::nullopt;
}

/// Congruence data of one specialized lattice sum. `residues` holds the
/// per-coordinate representatives of smallest absolute value, so the vector
/// of residues itself is the unique admissible minimizer of the norm and its
/// exponent equals eta_exponent/24.
struct LatticeSpec {
    Family family = Family::C;
    int t = 0;
    long long modulus = 0;
    std::vector<long long> residues;
    bool require_sum_zero = false;
    bool require_sum_congruence = false;
    long long sum_value = 0;
    long long sum_modulus = 0;
    long long exponent_divisor = 0;
    long long eta_exponent = 0;
};

inline LatticeSpec make_lattice_spec(Family f, int t) {
    LatticeSpec s;
    s.family = f;
    s.t = t;
    switch (f) {
        case Family::A: {
            if (t < 3 || t % 2 == 0)
                throw std::invalid_argument("family A requires an odd rank t >= 3");
            s.modulus = t;
            for (long long i = 0; i < t; ++i)
                s.residues.push_back(i <= (t - 1) / 2 ? i : i - t);
            s.require_sum_zero = true;
            s.exponent_divisor = 2LL * t;
            s.eta_exponent = static_cast<long long>(t) * t - 1;
            break;
        }
        case Family::C: {
            if (t < 2) throw std::invalid_argument("family C requires rank t >= 2");
            s.modulus = 2LL * t + 2;
            for (long long i = 1; i <= t; ++i) s.residues.push_back(i);
            s.exponent_divisor = 4LL * t + 4;
            s.eta_exponent = 2LL * t * t + t;
            break;
        }
        case Family::B: {
            if (t < 3) throw std::invalid_argument("family B requires rank t >= 3");
            s.modulus = 4LL * t - 2;
            for (long long i = 1; i <= t; ++i) s.residues.push_back(2 * i - 1);
            s.require_sum_congruence = true;
            s.sum_value = static_cast<long long>(t) * t;
            s.sum_modulus = 8LL * t - 4;
            s.exponent_divisor = 8LL * (2 * t - 1);
            s.eta_exponent = 2LL * t * t + t;
            break;
        }
        case Family::BC: {
            if (t < 1) throw std::invalid_argument("family BC requires rank t >= 1");
            s.modulus = 4LL * t + 2;
            for (long long i = 1; i <= t; ++i) s.residues.push_back(2 * i - 1);
            s.exponent_divisor = 8LL * (2 * t + 1);
            s.eta_exponent = 2LL * t * t - t;
            break;
        }
    }
    return s;
}

/// Normalizing constant of the lattice sum, computed from factorials. Each
/// constant is the reciprocal of the weight of the minimal admissible vector
/// (the residue vector itself), which forces the leading coefficient of the
/// eta power side to be 1:
///   A:  prod_{i<j} (v_i - v_j) at the balanced residues gives
///       (-1)^{(t-1)/2} 1!2!...(t-1)!.
///   C:  prod v_i prod_{i<j} (v_i^2 - v_j^2) at (1,...,t) gives
///       (-1)^{floor(t/2)} 1!3!...(2t-1)!.
///   B:  the same product at (1,3,...,2t-1) picks up 4^{t(t-1)/2}.
///   BC: the signed product at (1,3,...,2t-1) is 4^{t(t-1)/2} 2!4!...(2t-2)!.
inline Rational macdonald_constant(Family f, int t) {
    switch (f) {
        case Family::A: {
            Integer den = 1;
            for (int k = 1; k <= t - 1; ++k) den *= factorial(k);
            const int sign = ((t - 1) / 2) % 2 == 0 ? 1 : -1;
            return Rational(Integer(sign), den);
        }
        case Family::C: {
            Integer den = 1;
            for (int k = 1; k <= t; ++k) den *= factorial(2 * k - 1);
            const int sign = (t / 2) % 2 == 0 ? 1 : -1;
            return Rational(Integer(sign), den);
        }
        case Family::B: {
            Integer den = integer_pow(4, static_cast<long long>(t) * (t - 1) / 2);
            for (int k = 1; k <= t; ++k) den *= factorial(2 * k - 1);
            const int sign = (t / 2) % 2 == 0 ? 1 : -1;
            return Rational(Integer(sign), den);
        }
        case Family::BC: {
            Integer den = integer_pow(4, static_cast<long long>(t) * (t - 1) / 2);
            for (int k = 1; k <= t - 1; ++k) den *= factorial(2 * k);
            return Rational(Integer(1), den);
        }
    }
    throw std::logic_error("unknown family");
}

/// One admissible lattice vector: `step` is its exponent minus the minimal
/// exponent eta_exponent/24 (always a non-negative integer), `weight` the
/// family-specific integrand value.
struct LatticeTerm {
    std::vector<long long> v;
    long long step = 0;
    Integer weight;
};

namespace detail {

inline Integer lattice_weight(const LatticeSpec& spec, const std::vector<long long>& v) {
    Integer w = 1;
    const std::size_t t = v.size();
    if (spec.family == Family::A) {
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j) w *= Integer(v[i]) - Integer(v[j]);
        return w;
    }
    if (spec.family != Family::BC)
        for (long long vi : v) w *= vi;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            w *= Integer(v[i]) * v[i] - Integer(v[j]) * v[j];
    if (spec.family == Family::BC) {
        long long sum = 0;
        for (long long vi : v) sum += vi;
        const long long e = (sum - spec.t) / 2;
        if (mod_floor(e, 2) == 1) w = -w;
    }
    return w;
}

template <typename F>
void lattice_walk(const LatticeSpec& spec, long long norm_budget,
                  const std::vector<long long>& suffix_min, std::vector<long long>& v,
                  long long norm_so_far, long long base_norm, F&& yield) {
    const std::size_t i = v.size();
    const std::size_t t = spec.residues.size();
    if (i == t) {
        if (spec.require_sum_zero || spec.require_sum_congruence) {
            long long sum = 0;
            for (long long vi : v) sum += vi;
            if (spec.require_sum_zero && sum != 0) return;
            if (spec.require_sum_congruence &&
                mod_floor(sum - spec.sum_value, spec.sum_modulus) != 0)
                return;
        }
        const long long excess = norm_so_far - base_norm;
        if (excess < 0 || excess % spec.exponent_divisor != 0)
            throw std::logic_error("lattice exponent step is not a non-negative integer");
        LatticeTerm term;
        term.v = v;
        term.step = excess / spec.exponent_divisor;
        term.weight = lattice_weight(spec, v);
        if (term.weight != 0) yield(std::move(term));
        return;
    }
    const long long rem = norm_budget - norm_so_far - suffix_min[i + 1];
    if (rem < 0) return;
    const long long r = spec.residues[i];
    // Candidates r + modulus*k with square within the remaining budget.
    long long span = 0;
    while (span * span <= rem) ++span;
    const long long lo = floor_div(-span - r, spec.modulus);
    const long long hi = floor_div(span - r, spec.modulus);
    for (long long k = lo; k <= hi; ++k) {
        const long long value = r + spec.modulus * k;
        if (value * value > rem) continue;
        // Zero integrand subtrees: duplicate |values| (or values, family A)
        // contribute nothing.
        bool dead = false;
        for (long long prev : v) {
            if (spec.family == Family::A ? prev == value
                                         : (prev == value || prev == -value || value == 0)) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        v.push_back(value);
        lattice_walk(spec, norm_budget, suffix_min, v, norm_so_far + value * value, base_norm,
                     yield);
        v.pop_back();
    }
}

}  // namespace detail

/// Every admissible vector whose exponent lies within `order` steps of the
/// minimum, in deterministic depth-first order. Zero-weight vectors are
/// skipped.
template <typename F>
void for_each_lattice_term(const LatticeSpec& spec, int order, F&& yield) {
    long long base_norm = 0;
    for (long long r : spec.residues) base_norm += r * r;
    const long long budget = base_norm + spec.exponent_divisor * order;
    const std::size_t t = spec.residues.size();
    std::vector<long long> suffix_min(t + 1, 0);
    for (std::size_t i = t; i-- > 0;)
        suffix_min[i] = suffix_min[i + 1] + spec.residues[i] * spec.residues[i];
    std::vector<long long> v;
    v.reserve(t);
    detail::lattice_walk(spec, budget, suffix_min, v, 0, base_norm, yield);
}

inline std::vector<LatticeTerm> lattice_terms(const LatticeSpec& spec, int order) {
    std::vector<LatticeTerm> out;
    for_each_lattice_term(spec, order, [&](LatticeTerm term) { out.push_back(std::move(term)); });
    return out;
}

/// The specialized lattice sum as a series: constant times the weights
/// binned by exponent, with offset eta_exponent/24.
inline TruncatedSeries macdonald_series(Family f, int t, int order) {
    const LatticeSpec spec = make_lattice_spec(f, t);
    TruncatedSeries s(Rational(spec.eta_exponent, 24), order);
    for_each_lattice_term(spec, order, [&](const LatticeTerm& term) {
        if (term.step <= order) s.add_coeff(static_cast<int>(term.step), Rational(term.weight));
    });
    return s.scaled(macdonald_constant(f, t)).with_offset(Rational(spec.eta_exponent, 24));
}

struct MacdonaldReport {
    bool pass = false;
    long long first_mismatch = -1;  // step index, -1 when equal
    Rational lhs, rhs;
    std::size_t term_count = 0;
    long long eta_exponent = 0;
};

/// Compares the lattice sum against eta_power(eta_exponent) coefficient by
/// coefficient, exactly.
inline MacdonaldReport verify_macdonald(Family f, int t, int order) {
    const LatticeSpec spec = make_lattice_spec(f, t);
    MacdonaldReport rep;
    rep.eta_exponent = spec.eta_exponent;

    TruncatedSeries sum(Rational(spec.eta_exponent, 24), order);
    for_each_lattice_term(spec, order, [&](const LatticeTerm& term) {
        if (term.step <= order) {
            sum.add_coeff(static_cast<int>(term.step), Rational(term.weight));
            ++rep.term_count;
        }
    });
    const TruncatedSeries lhs = sum.scaled(macdonald_constant(f, t));
    const TruncatedSeries rhs = eta_power(spec.eta_exponent, order);

    rep.pass = true;
    for (int k = 0; k <= order; ++k) {
        if (lhs.coeff(k) != rhs.coeff(k)) {
            rep.pass = false;
            rep.first_mismatch = k;
            rep.lhs = lhs.coeff(k);
            rep.rhs = rhs.coeff(k);
            break;
        }
    }
    return rep;
}

}  // namespace hooklab
