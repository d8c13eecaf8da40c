#include <gtest/gtest.h>

#include <random>

#include "cubic7/groups/catalog.hpp"
#include "cubic7/singular/pencil.hpp"
#include "cubic7/singular/singular.hpp"

using namespace cubic7;

namespace {

bool contains_point(const std::vector<SingularPoint>& pts, const std::vector<AlgebraicNumber>& q) {
    for (const auto& p : pts)
        if (p.coords == q) return true;
    return false;
}

std::vector<AlgebraicNumber> normalized(std::vector<AlgebraicNumber> v) {
    AlgebraicNumber lead = v[0];
    for (auto& x : v) x = x / lead;
    return v;
}

}  // namespace

TEST(Discriminant, Examples) {
    auto m = discriminant_curve(1, 1);
    EXPECT_TRUE(m.on_twist[0]);
    EXPECT_EQ(discriminant_G(1, 1), AlgebraicNumber(0));
    EXPECT_TRUE(discriminant_curve(Rational(3, 4), 0).on_twist[0]);
    EXPECT_EQ(discriminant_curve(0, 0).count(), 0);
    AlgebraicNumber w = zeta(3);
    auto twisted = discriminant_curve(w * Rational(3, 4), 0);
    EXPECT_EQ(twisted.count(), 1);
    EXPECT_TRUE(twisted.on_twist[1]);
}

TEST(SingularPoints, A2Orbit) {
    auto pts = singular_points(1, 1);
    ASSERT_EQ(pts.size(), 7u);
    for (int l = 0; l < 7; ++l) {
        auto z = [l](int e) { return root_of_unity(7, e * l, cyclotomic(7)); };
        std::vector<AlgebraicNumber> q{1, -z(6), z(1), -z(4), z(5), -z(3)};
        EXPECT_TRUE(contains_point(pts, q)) << "l = " << l;
    }
    Poly f = f_ab(1, 1);
    auto cls = classify(f, {1, -1, 1, -1, 1, -1});
    EXPECT_EQ(cls.tag, SingularityTag::A2);
    EXPECT_EQ(cls.corank, 1);
    ASSERT_TRUE(cls.cubic_term.has_value());
    EXPECT_FALSE(cls.cubic_term->is_zero());
}

TEST(SingularPoints, SmoothAndNodal) {
    EXPECT_TRUE(singular_points(2, 3).empty());
    auto pts = singular_points(Rational(3, 4), 0);
    ASSERT_EQ(pts.size(), 7u);
    bool found = false;
    for (const auto& p : pts) {
        for (const auto& c : p.coords) EXPECT_FALSE(c.is_zero());
        if (p.l == 0) {
            EXPECT_EQ(p.k, 0);
            EXPECT_EQ(p.t, AlgebraicNumber(Rational(-1, 2)));
            found = true;
        }
        EXPECT_EQ(classify(f_ab(Rational(3, 4), 0), p.coords).tag, SingularityTag::A1);
    }
    EXPECT_TRUE(found);
}

TEST(Classify, NormalFormAndErrors) {
    Poly f = parse_poly("x1^2 + x2^2 + x3^2 + x4^2 + x5^3", 5);
    std::vector<AlgebraicNumber> origin(5, AlgebraicNumber(0));
    EXPECT_EQ(classify_affine(f, origin).tag, SingularityTag::A2);
    Poly g = parse_poly("x1^2 + x2^2 + x3^2 + x4^2 + x5^4", 5);
    EXPECT_EQ(classify_affine(g, origin).tag, SingularityTag::higher_order);
    Poly h = parse_poly("x1^2 + x2^2 + x3^2 + x4^3 + x5^3", 5);
    EXPECT_EQ(classify_affine(h, origin).tag, SingularityTag::higher_corank);
    EXPECT_THROW(classify(f_ab(2, 3), {1, 1, 1, 1, 1, 1}), NotSingular);
}

TEST(SingularPoints, ZeroPatterns) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        if (a == 0) a = 1;
        if (b == 0) b = -2;
        auto r = zero_pattern_check(a, b);
        EXPECT_EQ(r.patterns_checked, 62);
        EXPECT_TRUE(r.unresolved.empty()) << "a = " << a << ", b = " << b << ", first mask " << r.unresolved.front();
    }
}

TEST(SingularPoints, SweepAgreesWithCurve) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4), branch(0, 2);
    int on_curve = 0;
    for (int trial = 0; trial < 50; ++trial) {
        AlgebraicNumber a, b;
        if (trial % 2 == 0) {
            Rational tau(num(rng), den(rng));
            tau.canonicalize();
            if (tau == 0) tau = 2;
            AlgebraicNumber wk = root_of_unity(3, branch(rng), cyclotomic(3));
            AlgebraicNumber t(tau);
            a = AlgebraicNumber(-2) * t - wk * t * t;
            b = AlgebraicNumber(-2) * wk / t - (t * t).inverse();
        } else {
            Rational x(num(rng), den(rng)), y(num(rng), den(rng));
            x.canonicalize();
            y.canonicalize();
            a = x;
            b = y;
        }
        auto m = discriminant_curve(a, b);
        auto pts = singular_points(a, b);
        EXPECT_EQ(!pts.empty(), m.count() > 0) << a.display() << ", " << b.display();
        if (m.count() == 1) {
            ++on_curve;
            EXPECT_EQ(pts.size(), 7u);
        }
    }
    EXPECT_GT(on_curve, 10);
}

TEST(SingularPoints, SevenFoldSymmetry) {
    auto pts = singular_points(Rational(3, 4), 0);
    auto g = g7().matrix();
    for (const auto& p : pts) {
        std::vector<AlgebraicNumber> q;
        for (std::size_t i = 0; i < 6; ++i) q.push_back(p.coords[i] * g(i, i));
        EXPECT_TRUE(contains_point(pts, normalized(q)));
    }
}

TEST(Pencil, TableRows) {
    auto rows = l27_table_scan();
    ASSERT_EQ(rows.size(), 6u);
    for (const auto& r : rows) EXPECT_TRUE(r.matches) << r.equation << ": expected " << r.expected << ", got " << r.computed;
    EXPECT_EQ(rows[2].singular_count, 7u);
    EXPECT_EQ(rows[4].singular_count, 14u);
}

TEST(Pencil, GenericMemberIsSmooth) {
    auto p = pencil_to_f21(1);
    auto ab = ab_plane_coordinates(p);
    ASSERT_TRUE(ab.has_value());
    EXPECT_TRUE(singular_points((*ab)[0], (*ab)[1]).empty());
}

TEST(Pencil, VeroneseSextic) {
    auto v = veronese_sextic();
    EXPECT_TRUE(v.x1_reaches_target);
    EXPECT_FALSE(v.valid.empty());
    EXPECT_EQ(v.chosen.to_string(), "[z2z3, z1^2, z1z3, z2^2, z1z2, z3^2]");
    EXPECT_EQ(v.differing_slots, std::vector<int>{4});
    EXPECT_TRUE(v.locus_in_fourfold);
    EXPECT_TRUE(v.f1_gives_sextic);
    EXPECT_TRUE(v.f2_gives_sextic);
}
