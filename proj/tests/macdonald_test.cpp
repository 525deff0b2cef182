#include "hooklab/macdonald.hpp"

#include <gtest/gtest.h>

#include <set>

#include "hooklab/series.hpp"

using namespace hooklab;

TEST(Macdonald, SpecAdmissibility) {
    EXPECT_THROW(make_lattice_spec(Family::A, 2), std::invalid_argument);
    EXPECT_THROW(make_lattice_spec(Family::A, 1), std::invalid_argument);
    EXPECT_THROW(make_lattice_spec(Family::C, 1), std::invalid_argument);
    EXPECT_THROW(make_lattice_spec(Family::B, 2), std::invalid_argument);
    EXPECT_THROW(make_lattice_spec(Family::BC, 0), std::invalid_argument);
    EXPECT_NO_THROW(make_lattice_spec(Family::A, 3));
    EXPECT_NO_THROW(make_lattice_spec(Family::BC, 1));
}

TEST(Macdonald, MinimalVectorIsResidues) {
    // The residue vector is admissible with exponent exactly eta_exponent/24.
    struct Case {
        Family f;
        int t;
    };
    const Case cases[] = {{Family::A, 3},  {Family::A, 5},  {Family::C, 2},  {Family::C, 3},
                          {Family::C, 4},  {Family::C, 5},  {Family::C, 6},  {Family::B, 3},
                          {Family::B, 4},  {Family::B, 5},  {Family::B, 6},  {Family::BC, 1},
                          {Family::BC, 2}, {Family::BC, 3}, {Family::BC, 4}, {Family::BC, 5},
                          {Family::BC, 6}};
    for (const auto& c : cases) {
        const LatticeSpec spec = make_lattice_spec(c.f, c.t);
        long long norm = 0, sum = 0;
        for (long long r : spec.residues) {
            norm += r * r;
            sum += r;
        }
        EXPECT_EQ(Rational(norm, spec.exponent_divisor), Rational(spec.eta_exponent, 24))
            << family_name(c.f) << " t=" << c.t;
        if (spec.require_sum_zero) EXPECT_EQ(sum, 0);
        if (spec.require_sum_congruence)
            EXPECT_EQ(mod_floor(sum - spec.sum_value, spec.sum_modulus), 0);
    }
}

TEST(Macdonald, Constants) {
    EXPECT_EQ(macdonald_constant(Family::A, 3), Rational(-1, 2));
    EXPECT_EQ(macdonald_constant(Family::A, 5), Rational(1, 288));
    EXPECT_EQ(macdonald_constant(Family::C, 2), Rational(-1, 6));
    EXPECT_EQ(macdonald_constant(Family::C, 3), Rational(-1, 720));
    EXPECT_EQ(macdonald_constant(Family::BC, 1), Rational(1));
    EXPECT_EQ(macdonald_constant(Family::BC, 2), Rational(1, 8));
}

TEST(Macdonald, LatticeTermExamples) {
    // Family C, t=2: the minimal vector (1,2) has exponent 5/12 and weight
    // (1*2)(1-4) = -6; with c1 = -1/6 the leading coefficient is 1.
    {
        const LatticeSpec spec = make_lattice_spec(Family::C, 2);
        bool found = false;
        for (const auto& term : lattice_terms(spec, 3)) {
            if (term.v == std::vector<long long>{1, 2}) {
                found = true;
                EXPECT_EQ(term.step, 0);
                EXPECT_EQ(term.weight, Integer(-6));
            }
        }
        EXPECT_TRUE(found);
        EXPECT_EQ(macdonald_constant(Family::C, 2) * Rational(-6), Rational(1));
        EXPECT_EQ(macdonald_series(Family::C, 2, 3).offset(), Rational(5, 12));
        EXPECT_EQ(macdonald_series(Family::C, 2, 3).coeff(0), Rational(1));
    }
    // Family A, t=3: (0,1,-1) is admissible with weight -2.
    {
        const LatticeSpec spec = make_lattice_spec(Family::A, 3);
        bool found = false;
        for (const auto& term : lattice_terms(spec, 3)) {
            if (term.v == std::vector<long long>{0, 1, -1}) {
                found = true;
                EXPECT_EQ(term.step, 0);
                EXPECT_EQ(term.weight, Integer(-2));
            }
        }
        EXPECT_TRUE(found);
    }
    // Family BC, t=1: v=(1) carries exponent 1/24 and weight +1.
    {
        const LatticeSpec spec = make_lattice_spec(Family::BC, 1);
        bool found = false;
        for (const auto& term : lattice_terms(spec, 2)) {
            if (term.v == std::vector<long long>{1}) {
                found = true;
                EXPECT_EQ(term.step, 0);
                EXPECT_EQ(term.weight, Integer(1));
            }
        }
        EXPECT_TRUE(found);
        EXPECT_EQ(macdonald_series(Family::BC, 1, 2).offset(), Rational(1, 24));
    }
}

TEST(Macdonald, EnumerationCompleteUnderWiderBound) {
    // Re-running with a larger horizon must not reveal new vectors at steps
    // within the original one.
    for (Family f : {Family::A, Family::C, Family::B, Family::BC}) {
        const int t = f == Family::A ? 3 : (f == Family::B ? 3 : 2);
        const LatticeSpec spec = make_lattice_spec(f, t);
        std::set<std::vector<long long>> narrow, wide;
        for (const auto& term : lattice_terms(spec, 8)) narrow.insert(term.v);
        for (const auto& term : lattice_terms(spec, 12))
            if (term.step <= 8) wide.insert(term.v);
        EXPECT_EQ(narrow, wide) << family_name(f);
    }
}

TEST(Macdonald, DuplicateFree) {
    for (Family f : {Family::A, Family::C, Family::B, Family::BC}) {
        const int t = f == Family::A ? 5 : 3;
        const LatticeSpec spec = make_lattice_spec(f, t);
        std::set<std::vector<long long>> seen;
        std::size_t total = 0;
        for (const auto& term : lattice_terms(spec, 10)) {
            seen.insert(term.v);
            ++total;
        }
        EXPECT_EQ(seen.size(), total) << family_name(f);
    }
}

TEST(Macdonald, TypeAMatchesEtaPower) {
    for (int t : {3, 5}) {
        const auto rep = verify_macdonald(Family::A, t, 20);
        EXPECT_TRUE(rep.pass) << "t=" << t << " first mismatch at step " << rep.first_mismatch
                              << ": " << fraction_string(rep.lhs) << " vs "
                              << fraction_string(rep.rhs);
    }
}

TEST(Macdonald, TypeCMatchesEtaPower) {
    for (int t : {2, 3, 4}) {
        const auto rep = verify_macdonald(Family::C, t, 20);
        EXPECT_TRUE(rep.pass) << "t=" << t << " first mismatch at step " << rep.first_mismatch
                              << ": " << fraction_string(rep.lhs) << " vs "
                              << fraction_string(rep.rhs);
    }
}

TEST(Macdonald, TypeBMatchesEtaPower) {
    for (int t : {3, 4}) {
        const auto rep = verify_macdonald(Family::B, t, 15);
        EXPECT_TRUE(rep.pass) << "t=" << t << " first mismatch at step " << rep.first_mismatch
                              << ": " << fraction_string(rep.lhs) << " vs "
                              << fraction_string(rep.rhs);
    }
}

TEST(Macdonald, TypeBCMatchesEtaPower) {
    for (int t : {1, 2, 3}) {
        const auto rep = verify_macdonald(Family::BC, t, 15);
        EXPECT_TRUE(rep.pass) << "t=" << t << " first mismatch at step " << rep.first_mismatch
                              << ": " << fraction_string(rep.lhs) << " vs "
                              << fraction_string(rep.rhs);
    }
}
