#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/// Truncated formal power series sum_{k=0}^{order} c_k x^{offset+k} with
/// exact rational coefficients. `offset` is a global exponent shift and may
/// be a non-integer rational (eta powers carry e/24). Coefficients beyond
/// `order` are unknown, never assumed zero; every operation truncates to the
/// range it can certify.
class TruncatedSeries {
public:
    TruncatedSeries(Rational offset, int order) : offset_(std::move(offset)) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        coeff_.resize(static_cast<std::size_t>(order) + 1);
    }

    static TruncatedSeries constant(const Rational& value, int order) {
        TruncatedSeries s(Rational(0), order);
        s.coeff_[0] = value;
        return s;
    }

    const Rational& offset() const { return offset_; }
    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& coeff(int k) const {
        range_check(k);
        return coeff_[static_cast<std::size_t>(k)];
    }

    void set_coeff(int k, Rational v) {
        range_check(k);
        coeff_[static_cast<std::size_t>(k)] = std::move(v);
    }

    void add_coeff(int k, const Rational& v) {
        range_check(k);
        coeff_[static_cast<std::size_t>(k)] += v;
    }

    /// Same coefficients under a different global exponent shift.
    TruncatedSeries with_offset(Rational off) const {
        TruncatedSeries s = *this;
        s.offset_ = std::move(off);
        return s;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
        TruncatedSeries s(offset_, new_order);
        for (int k = 0; k <= new_order; ++k) s.coeff_[static_cast<std::size_t>(k)] = coeff(k);
        return s;
    }

    /// Coefficient of x^exponent. Exponents below the offset (or off the
    /// offset + integer grid) are zero by construction; exponents past the
    /// truncation horizon are unknown and rejected.
    Rational coefficient_at(const Rational& exponent) const {
        const Rational rel = exponent - offset_;
        if (rel < 0) return Rational(0);
        if (denominator(rel) != 1) return Rational(0);
        const Integer k = numerator(rel);
        if (k > order()) throw std::out_of_range("exponent beyond truncation order");
        return coeff_[static_cast<std::size_t>(k.convert_to<long long>())];
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const Rational gap = b.offset_ - a.offset_;
        if (denominator(gap) != 1)
            throw std::invalid_argument("cannot add series whose offsets differ by a non-integer");
        const Rational lo = a.offset_ < b.offset_ ? a.offset_ : b.offset_;
        const Rational end_a = a.offset_ + a.order();
        const Rational end_b = b.offset_ + b.order();
        const Rational end = end_a < end_b ? end_a : end_b;
        const Rational span = end - lo;
        const int new_order = static_cast<int>(numerator(span).convert_to<long long>());
        TruncatedSeries s(lo, new_order);
        const Rational shift_a = a.offset_ - lo;
        const Rational shift_b = b.offset_ - lo;
        const long long da = numerator(shift_a).convert_to<long long>();
        const long long db = numerator(shift_b).convert_to<long long>();
        for (int k = 0; k <= a.order() && da + k <= new_order; ++k)
            s.coeff_[static_cast<std::size_t>(da + k)] += a.coeff(k);
        for (int k = 0; k <= b.order() && db + k <= new_order; ++k)
            s.coeff_[static_cast<std::size_t>(db + k)] += b.coeff(k);
        return s;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + b.scaled(Rational(-1));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncatedSeries s(a.offset_ + b.offset_, n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.coeff(j) == 0) continue;
                s.coeff_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return s;
    }

    TruncatedSeries scaled(const Rational& c) const {
        TruncatedSeries s = *this;
        for (auto& v : s.coeff_) v *= c;
        return s;
    }

    /// Exact reciprocal; requires a non-zero constant coefficient.
    TruncatedSeries inverse() const {
        if (coeff_[0] == 0)
            throw std::invalid_argument("series inverse needs a non-zero constant term");
        const int n = order();
        TruncatedSeries s(-offset_, n);
        s.coeff_[0] = Rational(1) / coeff_[0];
        for (int k = 1; k <= n; ++k) {
            Rational acc(0);
            for (int i = 1; i <= k; ++i)
                acc += coeff_[static_cast<std::size_t>(i)] * s.coeff_[static_cast<std::size_t>(k - i)];
            s.coeff_[static_cast<std::size_t>(k)] = -acc / coeff_[0];
        }
        return s;
    }

    TruncatedSeries pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        TruncatedSeries result = constant(Rational(1), order());
        if (e == 0) return result;
        TruncatedSeries base = *this;
        for (;;) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (!e) break;
            base = base * base;
        }
        return result;
    }

    /// Multiplies in place by (1 - c x^step), no truncation loss.
    void mul_sparse_binomial(int step, const Rational& c) {
        if (step <= 0) throw std::invalid_argument("sparse factor step must be positive");
        for (int k = order(); k >= step; --k)
            coeff_[static_cast<std::size_t>(k)] -= c * coeff_[static_cast<std::size_t>(k - step)];
    }

    /// Text form: one line "exponent<TAB>numerator/denominator" per non-zero
    /// coefficient, exponents ascending, each exponent reduced ("p" or "p/q").
    void write_text(std::ostream& os) const {
        for (int k = 0; k <= order(); ++k) {
            if (coeff_[static_cast<std::size_t>(k)] == 0) continue;
            os << exponent_string(offset_ + k) << '\t'
               << fraction_string(coeff_[static_cast<std::size_t>(k)]) << '\n';
        }
    }

private:
    void range_check(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
    }

    Rational offset_;
    std::vector<Rational> coeff_;
};

struct SeriesMismatch {
    Rational exponent;
    Rational lhs;
    Rational rhs;
};

/// First exponent (up to the shared truncation horizon) where the two series
/// disagree. Exponents below either offset count as zero coefficients.
inline std::optional<SeriesMismatch> series_first_mismatch(const TruncatedSeries& a,
                                                           const TruncatedSeries& b) {
    const Rational gap = b.offset() - a.offset();
    if (denominator(gap) != 1)
        throw std::invalid_argument("cannot compare series on incommensurable exponent grids");
    const Rational lo = a.offset() < b.offset() ? a.offset() : b.offset();
    const Rational end_a = a.offset() + a.order();
    const Rational end_b = b.offset() + b.order();
    const Rational end = end_a < end_b ? end_a : end_b;
    for (Rational e = lo; e <= end; e += 1) {
        const Rational ca = a.coefficient_at(e);
        const Rational cb = b.coefficient_at(e);
        if (ca != cb) return SeriesMismatch{e, ca, cb};
    }
    return std::nullopt;
}

inline bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !series_first_mismatch(a, b).has_value();
}

/// prod_{k=1..order} (1 - x^k) truncated at x^order.
inline TruncatedSeries euler_product(int order) {
    TruncatedSeries e = TruncatedSeries::constant(Rational(1), order);
    for (int k = 1; k <= order; ++k) e.mul_sparse_binomial(k, Rational(1));
    return e;
}

/// prod_{k>=1} (1 - x^k)^m truncated at x^order, offset 0. Negative m goes
/// through one exact inversion of the Euler product.
inline TruncatedSeries power_product(long long m, int order) {
    if (m == 0) return TruncatedSeries::constant(Rational(1), order);
    TruncatedSeries base = euler_product(order);
    if (m < 0) return base.inverse().pow(-m);
    return base.pow(m);
}

/// eta(x)^e without the modular factor folded in: offset e/24, coefficients
/// of prod (1-x^k)^e.
inline TruncatedSeries eta_power(long long e, int order) {
    return power_product(e, order).with_offset(Rational(e, 24));
}

/// (x^a; x^a)_infinity = prod_{j>=1} (1 - x^{a j}), truncated at x^order.
inline TruncatedSeries pochhammer_inf(long long a, int order) {
    if (a < 1) throw std::invalid_argument("pochhammer modulus must be >= 1");
    TruncatedSeries s = TruncatedSeries::constant(Rational(1), order);
    for (long long k = a; k <= order; k += a) s.mul_sparse_binomial(static_cast<int>(k), Rational(1));
    return s;
}

/// Same value as power_product(e, order) computed along an independent
/// route: prod (1-x^k)^e = exp(-e sum_{k>=1} x^k / (k (1-x^k))), with the
/// exponential expanded by the exact derivative recurrence.
inline TruncatedSeries exp_cross_check(long long e, int order) {
    // Coefficient of x^n in the inner sum is sum_{k | n} 1/k.
    std::vector<Rational> t(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k)
        for (int n = k; n <= order; n += k) t[static_cast<std::size_t>(n)] += Rational(1, k);
    for (auto& v : t) v *= Rational(-e);

    TruncatedSeries s(Rational(0), order);
    s.set_coeff(0, Rational(1));
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += Rational(k) * t[static_cast<std::size_t>(k)] * s.coeff(n - k);
        s.set_coeff(n, acc / n);
    }
    return s;
}

struct PolyIdentityReport {
    bool pass = true;
    long long failed_t = 0;
    Rational failed_exponent;
    Rational lhs;
    Rational rhs;
    int samples = 0;
};

/// Checks that two series-valued polynomial families agree identically in an
/// integer parameter. Both generators must produce, for every integer t, a
/// series whose x^m coefficient is a polynomial in t of degree at most
/// degree_bound(m); agreement at max_m degree_bound(m) + 1 distinct sample
/// points then proves coefficient-wise equality. Samples run at t = 0, 1, ...
/// and may be evaluated on up to `jobs` threads; the verdict is independent
/// of the schedule.
inline PolyIdentityReport poly_identity_check(
    const std::function<TruncatedSeries(long long)>& lhs_at,
    const std::function<TruncatedSeries(long long)>& rhs_at, int order,
    const std::function<int(int)>& degree_bound, int jobs = 1) {
    int max_deg = 0;
    for (int m = 0; m <= order; ++m) max_deg = std::max(max_deg, degree_bound(m));
    const int samples = max_deg + 1;

    struct SampleFail {
        Rational exponent, lhs, rhs;
    };
    std::vector<std::optional<SampleFail>> fails(static_cast<std::size_t>(samples));

    auto run_sample = [&](int idx) {
        const long long t = idx;
        const TruncatedSeries lhs = lhs_at(t).truncated(order);
        const TruncatedSeries rhs = rhs_at(t).truncated(order);
        if (auto mm = series_first_mismatch(lhs, rhs))
            fails[static_cast<std::size_t>(idx)] = SampleFail{mm->exponent, mm->lhs, mm->rhs};
    };

    if (jobs <= 1) {
        for (int i = 0; i < samples; ++i) run_sample(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= samples) return;
                run_sample(i);
            }
        };
        std::vector<std::thread> pool;
        const int n_threads = std::min(jobs, samples);
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    PolyIdentityReport rep;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        if (fails[static_cast<std::size_t>(i)]) {
            rep.pass = false;
            rep.failed_t = i;
            rep.failed_exponent = fails[static_cast<std::size_t>(i)]->exponent;
            rep.lhs = fails[static_cast<std::size_t>(i)]->lhs;
            rep.rhs = fails[static_cast<std::size_t>(i)]->rhs;
            break;
        }
    }
    return rep;
}

}  // namespace hooklab
