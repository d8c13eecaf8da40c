#include <gtest/gtest.h>

#include <random>

#include "cubic7/arithgrp/hilbert.hpp"

using namespace cubic7;

namespace {

NumberMatrix square2(const AlgebraicNumber& a, const AlgebraicNumber& b, const AlgebraicNumber& c,
                     const AlgebraicNumber& d) {
    NumberMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

AlgebraicNumber num(long v) { return AlgebraicNumber(v) * root(1); }
AlgebraicNumber half(long a, long d, long b = 0, long e = 1) {
    return (AlgebraicNumber(a) * root(d) + AlgebraicNumber(b) * root(e)) / AlgebraicNumber(2);
}

NumberMatrix identity2() { return square2(num(1), num(0), num(0), num(1)); }

// Random small element of the tube field.
AlgebraicNumber random_radical(std::mt19937& rng) {
    static const long radicands[] = {1, 2, 3, 6, 7, 14, 21, 42};
    std::uniform_int_distribution<int> pick(0, 7), coeff(-2, 2);
    return AlgebraicNumber(Rational(coeff(rng), 2)) * root(radicands[pick(rng)]) + AlgebraicNumber(coeff(rng)) * root(radicands[pick(rng)]);
}

NumberMatrix random_sl2(std::mt19937& rng) {
    NumberMatrix m = identity2();
    std::uniform_int_distribution<int> side(0, 1);
    for (int k = 0; k < 3; ++k) {
        AlgebraicNumber t = random_radical(rng);
        m = m * (side(rng) ? square2(num(1), t, num(0), num(1)) : square2(num(1), num(0), t, num(1)));
    }
    return m;
}

IntMatrix identity_int(std::size_t n) { return IntMatrix::identity(n); }

IntMatrix minus(const IntMatrix& m) { return m.map([](const Integer& v) { return Integer(-v); }); }

std::vector<IntMatrix> rank3_members(std::size_t count) {
    const auto& base = enumerate_rank3(rank3_identity_type(), 20);
    std::vector<IntMatrix> singles;
    for (const auto& e : base) singles.push_back(gamma2_member(e));
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, singles.size() - 1);
    std::vector<IntMatrix> out;
    while (out.size() < count) out.push_back(singles[pick(rng)] * singles[pick(rng)] * singles[pick(rng)]);
    return out;
}

}  // namespace

TEST(Phi, Examples) {
    EXPECT_EQ(as_integer_matrix(phi1(identity2())), identity_int(3));
    auto s = as_integer_matrix(phi1(square2(num(0), num(1), num(-1), num(0))));
    ASSERT_TRUE(s);
    EXPECT_TRUE(preserves_gram(*s, transcendental_rank3()));
    EXPECT_TRUE(in_o_plus(*s, transcendental_rank3()));
    auto r = as_integer_matrix(phi1(square2(half(1, 21, 3), half(1, 14, 1, 6), half(1, 14, -1, 6), half(1, 21, -3))));
    ASSERT_TRUE(r);
    EXPECT_TRUE(preserves_gram(*r, transcendental_rank3()));
    EXPECT_THROW(phi1(square2(num(2), num(0), num(0), num(1))), NotUnimodular);

    EXPECT_EQ(as_integer_matrix(phi2(identity2(), identity2())), identity_int(4));
    auto neg = as_integer_matrix(phi2(identity2(), -identity2()));
    ASSERT_TRUE(neg);
    EXPECT_EQ(*neg, minus(identity_int(4)));
    EXPECT_EQ(as_integer_matrix(phi2(-identity2(), -identity2())), identity_int(4));
    EXPECT_THROW(phi2(identity2(), square2(num(1), num(1), num(1), num(1))), NotUnimodular);
}

TEST(Phi, Homomorphism) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        NumberMatrix a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng), d = random_sl2(rng);
        EXPECT_EQ(phi1(a * b), phi1(a) * phi1(b));
        EXPECT_EQ(phi2(a * c, b * d), phi2(a, b) * phi2(c, d));
        EXPECT_EQ(phi1(sl2_inverse(a)) * phi1(a), to_number_matrix(identity_int(3)));
    }
}

TEST(Gamma2, Membership) {
    EXPECT_EQ(gamma2_member({{1, 21, 6, 14}, {2, 0, 0, 0}}), identity_int(3));
    auto s = as_integer_matrix(phi1(square2(num(0), num(1), num(-1), num(0))));
    EXPECT_EQ(gamma2_member({{14, 6, 21, 1}, {0, 0, 0, 2}}), *s);
    auto t = as_integer_matrix(phi1(square2(num(0), half(1, 3, 1, 7), half(1, 3, -1, 7), num(0))));
    ASSERT_TRUE(t);
    EXPECT_EQ(gamma2_member({{2, 42, 3, 7}, {0, 0, 1, 1}}), *t);
    EXPECT_THROW(gamma2_member({{1, 21, 6, 14}, {1, 0, 0, 0}}), NormNotFour);
    EXPECT_THROW(gamma2_member({{1, 21, 6, 14}, {3, 1, 1, 1}}), NormNotFour);
}

TEST(Gamma2, IsometryOfSamples) {
    Lattice t = transcendental_rank3();
    for (const auto& m : rank3_members(100)) {
        EXPECT_TRUE(preserves_gram(m, t));
        EXPECT_TRUE(in_o_plus(m, t));
        EXPECT_EQ(z3_action(m, t), Z3Action::preserves);
        auto e = rank3_retype(m);
        ASSERT_TRUE(e);
        EXPECT_EQ(e->type, rank3_identity_type());
    }
}

TEST(Gamma2, ParityFollowsFromNorm) {
    for (const auto& t : rank3_types())
        for (long u = -5; u <= 5; ++u)
            for (long v = -5; v <= 5; ++v)
                for (long w = -5; w <= 5; ++w)
                    for (long x = -5; x <= 5; ++x) {
                        TypedElementRank3 e{t, {u, v, w, x}};
                        if (e.norm() != 4) continue;
                        EXPECT_TRUE(rank3_parity_rule(e)) << e.to_string();
                        EXPECT_TRUE(as_integer_matrix(phi1(e.matrix()))) << e.to_string();
                    }
}

TEST(Gamma2, ExhaustiveSmallBox) {
    Lattice l = transcendental_rank3();
    const IntMatrix& g = l.gram();
    std::vector<IntVector> vecs;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) vecs.push_back({Integer(a), Integer(b), Integer(c)});
    auto pair = [&](const IntVector& x, const IntVector& y) {
        Integer s = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s += x[i] * g(i, j) * y[j];
        return s;
    };
    int isometries = 0, special = 0;
    for (const auto& c0 : vecs) {
        if (pair(c0, c0) != g(0, 0)) continue;
        for (const auto& c1 : vecs) {
            if (pair(c1, c1) != g(1, 1) || pair(c0, c1) != g(0, 1)) continue;
            for (const auto& c2 : vecs) {
                if (pair(c2, c2) != g(2, 2) || pair(c0, c2) != g(0, 2) || pair(c1, c2) != g(1, 2)) continue;
                IntMatrix m(3, 3);
                for (std::size_t i = 0; i < 3; ++i) {
                    m(i, 0) = c0[i];
                    m(i, 1) = c1[i];
                    m(i, 2) = c2[i];
                }
                ++isometries;
                auto e = rank3_retype(m);
                if (integer_determinant(m) == 1 && in_o_plus(m, l)) {
                    ++special;
                    ASSERT_TRUE(e);
                    EXPECT_EQ(gamma2_member(*e), m);
                    TypedElementRank3 flipped{e->type, {-e->coords[0], -e->coords[1], -e->coords[2], -e->coords[3]}};
                    EXPECT_EQ(gamma2_member(flipped), m);
                } else {
                    EXPECT_FALSE(e);
                }
            }
        }
    }
    EXPECT_EQ(isometries, 12);
    EXPECT_EQ(special, 3);
}

TEST(Gamma2, TypeComposition) {
    EXPECT_EQ(rank3_compose({1, 21, 6, 14}, {21, 1, 14, 6}), (TypeQuad{21, 1, 14, 6}));
    EXPECT_EQ(rank3_compose({21, 1, 14, 6}, {14, 6, 21, 1}), (TypeQuad{6, 14, 1, 21}));
    EXPECT_EQ(rank3_compose({2, 42, 3, 7}, {2, 42, 3, 7}), (TypeQuad{1, 21, 6, 14}));
}

TEST(Gamma2, Table) {
    auto report = verify_table2(4);
    ASSERT_EQ(report.rows.size(), 8u);
    for (const auto& row : report.rows) {
        EXPECT_TRUE(row.member) << row.representative.to_string();
        EXPECT_EQ(row.z3 == Z3Action::preserves, row.quoted_preserves) << row.representative.to_string();
    }
    EXPECT_TRUE(report.labels_form_group);
    EXPECT_TRUE(report.z3_column_matches);
    EXPECT_TRUE(report.cosets_closed);
    EXPECT_TRUE(report.normal);
    ASSERT_EQ(report.flagged.size(), 1u);
    EXPECT_EQ(report.rows[5].representative.type, (TypeQuad{42, 2, 7, 3}));
    EXPECT_EQ(report.rows[5].quoted_label, (Label{0, 1, 1}));
    EXPECT_EQ(report.rows[5].computed_label, (Label{1, 0, 1}));
    EXPECT_EQ(report.rows[6].computed_label, (Label{0, 1, 1}));
}

TEST(Z3, Actions) {
    Lattice t = transcendental_rank3();
    EXPECT_EQ(z3_action(identity_int(3), t), Z3Action::preserves);
    EXPECT_EQ(z3_action(gamma2_member({{21, 1, 14, 6}, {1, 3, 1, 1}}), t), Z3Action::negates);
    EXPECT_EQ(z3_action(gamma2_member({{7, 3, 42, 2}, {1, 1, 0, 0}}), t), Z3Action::preserves);
    EXPECT_EQ(z3_action(minus(identity_int(3)), t), Z3Action::negates);
    IntMatrix bad = identity_int(3);
    bad(0, 1) = 1;
    EXPECT_THROW(z3_action(bad, t), NotIsometry);
}

TEST(GammaPrime, Membership) {
    EXPECT_EQ(gammaprime_member({{1, 21, 3, 7}, {2, 2, 0, 0, 0, 0, 0, 0}}), identity_int(4));
    TypedElementRank4 r{{3, 7, 1, 21}, {0, 0, 0, 0, 2, -2, 0, 0}};
    auto m = gammaprime_member(r);
    auto [h1, h2] = r.pair();
    EXPECT_EQ(to_number_matrix(m), phi2(h1, h2));
    EXPECT_TRUE(preserves_gram(m, transcendental_rank4()));
    EXPECT_THROW(gammaprime_member({{1, 21, 3, 7}, {2, 1, 0, 0, 0, 0, 0, 0}}), ParityViolation);
    EXPECT_THROW(gammaprime_member({{1, 21, 3, 7}, {2, 4, 0, 0, 0, 0, 0, 0}}), NormNotFour);
    EXPECT_THROW(gammaprime_member({{1, 21, 3, 7}, {2, 2, 0, 0, 0, 2, 2, 0}}), DeterminantMismatch);
    for (const auto& t : rank4_excluded_types()) {
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b) {
                TypedElementRank4 e{t, {a, a, b, b, 0, 0, 0, 0}};
                EXPECT_THROW(gammaprime_member(e), MathError) << e.to_string();
            }
    }
}

TEST(GammaPrime, DeterminantRuleEquivalence) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> coord(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    auto types = rank4_types();
    int with_rule = 0, without_rule = 0;
    for (int trial = 0; trial < 400 && (with_rule < 15 || without_rule < 15); ++trial) {
        TypedElementRank4 e{types[pick(rng)], {}};
        for (std::size_t i = 0; i < 7; ++i) e.coords[i] = coord(rng);
        if (e.coords[6] == 0) continue;
        const auto& t = e.type;
        long rest = 4 - (e.coords[0] * e.coords[1] * t[0] - e.coords[2] * e.coords[3] * t[1] - e.coords[4] * e.coords[5] * t[2]);
        long denom = e.coords[6] * t[3];
        if (rest % denom != 0) continue;
        e.coords[7] = rest / denom;
        ASSERT_EQ(e.norm(), 4);
        auto [h1, h2] = e.pair();
        bool unimodular = determinant(h1) == num(1) && determinant(h2) == num(1);
        EXPECT_EQ(unimodular, e.determinant_rule()) << e.to_string();
        (e.determinant_rule() ? with_rule : without_rule)++;
    }
    EXPECT_GT(with_rule, 0);
    EXPECT_GT(without_rule, 0);
}

TEST(GammaPrime, Table) {
    auto report = verify_table3(20);
    ASSERT_EQ(report.rows.size(), 4u);
    EXPECT_EQ(report.rows[0].z3, Z3Action::preserves);
    EXPECT_EQ(report.rows[1].z3, Z3Action::negates);
    EXPECT_EQ(report.rows[2].z3, Z3Action::negates);
    EXPECT_EQ(report.rows[3].z3, Z3Action::preserves);
    EXPECT_TRUE(report.klein_four);
    EXPECT_TRUE(report.normal);
    EXPECT_TRUE(report.excluded_rejected);
    EXPECT_EQ(report.excluded_residues, 0u);
    EXPECT_EQ(rank4_compose({21, 1, 7, 3}, {3, 7, 1, 21}), (TypeQuad{7, 3, 21, 1}));
}

TEST(Involutions, Checks) {
    auto r = involution_checks();
    EXPECT_TRUE(r.p_in_o_plus);
    EXPECT_TRUE(r.p_squared_identity);
    EXPECT_EQ(r.p_det, -1);
    EXPECT_EQ(r.minus_id_rank3, Z3Action::negates);
    EXPECT_TRUE(r.f_hat_integral);
    EXPECT_TRUE(r.f_hat_involution);
    EXPECT_EQ(r.f_hat_det, 1);
    EXPECT_TRUE(r.f_hat_o_plus);
    EXPECT_EQ(r.f_hat_z3, Z3Action::preserves);
    auto [f1, f2] = f_hat_pair();
    EXPECT_EQ(rank4_retype(f1, f2), (TypedElementRank4{{7, 3, 21, 1}, {0, 0, 0, 0, 0, 0, 2, 2}}));
}

TEST(Hilbert, Membership) {
    QuadInteger pi = prime_over_seven();
    EXPECT_EQ(pi.norm(), 7);
    EXPECT_EQ(fundamental_unit().norm(), 1);
    EXPECT_TRUE((QuadInteger{Rational(1, 2), Rational(1, 2)}).integral());
    EXPECT_FALSE((QuadInteger{Rational(1, 2), 0}).integral());
    EXPECT_FALSE(in_prime({1, 0}));
    EXPECT_TRUE(in_prime({7, 0}));
    EXPECT_TRUE(in_prime_inverse({1, 0}));

    auto [a, b] = hilbert_map(identity2());
    EXPECT_EQ(a, identity2());
    EXPECT_EQ(b, identity2());
    EXPECT_TRUE(hilbert_member(identity2()));
    NumberMatrix lower = square2(num(1), num(0), pi.value(), num(1));
    EXPECT_TRUE(hilbert_member(lower));
    auto rt = hilbert_roundtrip(lower);
    EXPECT_TRUE(rt.identity_coset);
    EXPECT_TRUE(rt.round_trips);
    EXPECT_EQ(rt.element.coords[5], 1);
    EXPECT_EQ(rt.element.coords[7], -1);
    EXPECT_TRUE(hilbert_member(square2(num(1), num(1), num(0), num(1))));
    EXPECT_FALSE(hilbert_member(square2(num(1), num(0), num(1), num(1))));
    EXPECT_THROW(hilbert_map(square2(num(2), num(0), num(0), num(1))), NotUnimodular);
}

TEST(Hilbert, RoundTripAndIsometry) {
    auto sample = hilbert_sample(100, 40, 3);
    ASSERT_EQ(sample.size(), 100u);
    Lattice t = transcendental_rank4();
    for (const auto& m : sample) {
        ASSERT_TRUE(hilbert_member(m));
        auto rt = hilbert_roundtrip(m);
        EXPECT_TRUE(rt.identity_coset);
        EXPECT_TRUE(rt.round_trips);
        EXPECT_TRUE(preserves_gram(rt.image, t));
        EXPECT_TRUE(in_o_plus(rt.image, t));
    }
}

TEST(Hilbert, PullbackOfSampledH) {
    auto sample = sample_rank4_identity(100, 9);
    ASSERT_EQ(sample.size(), 100u);
    for (const auto& e : sample) {
        auto [h1, h2] = e.pair();
        NumberMatrix m = hilbert_preimage(h1);
        EXPECT_TRUE(hilbert_member(m)) << e.to_string();
        auto image = hilbert_map(m);
        EXPECT_EQ(image.second, h2) << e.to_string();
    }
}

TEST(Quaternion, Embedding) {
    auto units = quaternion_units(6);
    ASSERT_FALSE(units.empty());
    EXPECT_EQ(units[0].to_string(), "(5,0,2,0)");
    for (const auto& u : units) {
        auto e = quaternion_embed(u);
        EXPECT_TRUE(e.even_coords);
        EXPECT_EQ(e.element.type, rank3_identity_type());
        EXPECT_EQ(gamma2_member(e.element), e.image);
    }
    auto e = quaternion_embed(units[0]);
    EXPECT_EQ(e.element.coords, (std::array<long, 4>{10, 0, -4, 0}));
    EXPECT_EQ(quaternion_embed({1, 0, 0, 0}).image, identity_int(3));
    EXPECT_THROW(quaternion_embed({5, 1, 1, 0}), NormNotOne);
    EXPECT_TRUE(mod3_lemma(20));
}
