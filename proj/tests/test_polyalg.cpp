#include <gtest/gtest.h>

#include <random>

#include "cubic7/polyalg/forms.hpp"

using namespace cubic7;

namespace {

NumberMatrix diag_zeta7(std::initializer_list<int> powers) {
    NumberMatrix m(6, 6);
    std::size_t i = 0;
    for (int p : powers) {
        m(i, i) = root_of_unity(7, p, cyclotomic(7));
        ++i;
    }
    return m;
}

NumberMatrix shift_by_two() {
    NumberMatrix m(6, 6);
    for (std::size_t j = 0; j < 6; ++j) m((j + 2) % 6, j) = AlgebraicNumber(1);
    return m;
}

NumberMatrix random_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    NumberMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = AlgebraicNumber(d(rng));
    return m;
}

Poly parse6(const char* s) { return parse_poly(s, 6); }

}  // namespace

TEST(Monomial, GrlexOrder) {
    auto basis = monomials_of_degree(3, 6);
    ASSERT_EQ(basis.size(), 56u);
    EXPECT_EQ(basis.front().to_string(6), "x1^3");
    EXPECT_EQ(basis[1].to_string(6), "x1^2*x2");
    EXPECT_EQ(basis.back().to_string(6), "x6^3");
    GrlexDescending greater;
    for (std::size_t i = 1; i < basis.size(); ++i) EXPECT_TRUE(greater(basis[i - 1], basis[i]));
}

TEST(Act, IdentityAndOrderSeven) {
    Poly f11 = f_ab(AlgebraicNumber(1), AlgebraicNumber(1));
    EXPECT_EQ(act(NumberMatrix::identity(6), f11), f11);
    AlgebraicNumber a(Rational(2, 3)), b = zeta(7) + AlgebraicNumber(5);
    Poly f = f_ab(a, b);
    EXPECT_EQ(act(diag_zeta7({1, 5, 4, 6, 2, 3}), f), f);
}

TEST(Act, ShiftSubstitution) {
    Poly f = parse6("x1^2*x2 + 2*x3");
    EXPECT_EQ(act(shift_by_two(), f), parse6("x3^2*x4 + 2*x5"));
}

TEST(Act, CompositionLaw) {
    std::mt19937 rng(1);
    Poly f = parse6("x1^3 - 2*x1*x2*x6 + 5*x4^2*x5 + x3*x6^2");
    for (int trial = 0; trial < 3; ++trial) {
        NumberMatrix a = random_matrix(rng), b = random_matrix(rng);
        EXPECT_EQ(act(a * b, f), act(a, act(b, f)));
    }
}

TEST(Act, DimensionMismatch) {
    EXPECT_THROW(act(NumberMatrix::identity(4), l27_f1()), DimensionMismatch);
}

TEST(InvariantSubspace, CyclicGroup) {
    auto basis = invariant_subspace({diag_zeta7({1, 5, 4, 6, 2, 3})}, 3, 6);
    ASSERT_EQ(basis.size(), 8u);
    std::vector<std::string> got;
    for (const auto& p : basis) got.push_back(p.to_string());
    std::vector<std::string> expected{"x1^2*x2", "x1*x3*x5", "x1*x6^2", "x2^2*x3",
                                      "x2*x4*x6", "x3^2*x4", "x4^2*x5", "x5^2*x6"};
    EXPECT_EQ(got, expected);
}

TEST(InvariantSubspace, FrobeniusGroup) {
    auto basis = invariant_subspace({diag_zeta7({1, 5, 4, 6, 2, 3}), shift_by_two()}, 3, 6);
    ASSERT_EQ(basis.size(), 4u);
    auto expected = f21_basis();
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& b : basis) found = found || proportionality(b, e).has_value();
        EXPECT_TRUE(found) << e.to_string();
    }
    for (const auto& b : basis) {
        EXPECT_EQ(act(shift_by_two(), b), b);
        EXPECT_TRUE(euler_relation_holds(b));
    }
}

TEST(InvariantSubspace, Trivial) {
    EXPECT_EQ(invariant_subspace({NumberMatrix::identity(6)}, 3, 6).size(), 56u);
}

TEST(Jacobian, Basics) {
    auto j = jacobian(parse6("x1^3"));
    EXPECT_EQ(j[0], parse6("3*x1^2"));
    for (int i = 1; i < 6; ++i) EXPECT_TRUE(j[static_cast<std::size_t>(i)].is_zero());
    Poly f11 = f_ab(AlgebraicNumber(1), AlgebraicNumber(1));
    std::vector<AlgebraicNumber> p{1, -1, 1, -1, 1, -1};
    EXPECT_TRUE(gradient_vanishes(f11, p));
}

TEST(Hessian, ChartVanishes) {
    std::vector<AlgebraicNumber> p{0, 1, 1, 1, 1, 1};
    EXPECT_THROW(hessian_at(l27_f1(), 0, p), ChartVanishes);
}

TEST(Hessian, ParametrizedSingularPointDeterminant) {
    FieldPtr k = cyclotomic(21);
    AlgebraicNumber w = root_of_unity(3, 1, k), z = root_of_unity(7, 1, k);
    for (int kk : {0, 1, 2}) {
        for (int l : {0, 1, 3}) {
            for (Rational t : {Rational(2), Rational(-1, 3)}) {
                AlgebraicNumber wk = w.pow(kk), zl = z.pow(l), tt(t);
                AlgebraicNumber tau = zl * tt;
                AlgebraicNumber a = AlgebraicNumber(-2) * tau - wk * tau * tau;
                AlgebraicNumber b = AlgebraicNumber(-2) * wk / tau - (tau * tau).inverse();
                Poly f = f_ab(a, b);
                std::vector<AlgebraicNumber> p{1, tt, wk * zl, tt * wk * z.pow(-2 * l), wk.inverse() * z.pow(-2 * l),
                                               tt * wk.inverse() * z.pow(-3 * l)};
                ASSERT_TRUE(gradient_vanishes(f, p));
                NumberMatrix h = AlgebraicNumber(Rational(1, 2)) * hessian_at(f, 0, p);
                AlgebraicNumber c = wk * zl;
                AlgebraicNumber expected =
                    AlgebraicNumber(Rational(-147, 16)) * c.pow(14) * tt * (c * tt + AlgebraicNumber(1));
                EXPECT_EQ(determinant(h), expected) << "k=" << kk << " l=" << l << " t=" << t;
            }
        }
    }
}

TEST(FamilyEmbed, Examples) {
    AlgebraicNumber one(1);
    EXPECT_EQ(family_embed({FamilyTag::F21, {one, one, one, one}}),
              parse6("x1^2*x2 + x3^2*x4 + x5^2*x6 + x2^2*x3 + x4^2*x5 + x6^2*x1 + x1*x3*x5 + x2*x4*x6"));
    AlgebraicNumber a(3), b(Rational(-1, 2));
    EXPECT_EQ(family_embed({FamilyTag::F21, {one, one, a, b}}), f_ab(a, b));
    EXPECT_EQ(family_embed({FamilyTag::L27, {one, AlgebraicNumber(0)}}),
              parse6("x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6^3 - (x1 + x2 + x3 + x4 + x5 + x6)^3"));
    FamilyPoint p{FamilyTag::F21, {AlgebraicNumber(2), AlgebraicNumber(3), AlgebraicNumber(5), AlgebraicNumber(7)}};
    EXPECT_EQ(family_embed(f21_to_c7(p)), family_embed(p));
    auto back = f21_coordinates(family_embed(p));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->coeffs, p.coeffs);
    EXPECT_FALSE(f21_coordinates(parse6("x1^3")).has_value());
}

TEST(Euler, GeneratedForms) {
    EXPECT_TRUE(euler_relation_holds(l27_f1()));
    EXPECT_TRUE(euler_relation_holds(l27_f2()));
    EXPECT_TRUE(euler_relation_holds(f_ab(zeta(7), AlgebraicNumber(2))));
}

TEST(Parser, RoundTrip) {
    std::vector<Poly> forms{l27_f1(), l27_f2(), f_ab(zeta(7) + AlgebraicNumber(Rational(1, 2)), sqrt_of(-7)),
                            f_ab(zeta(3), sqrt_of(21)),
                            parse6("(1/2*sqrt6 + sqrt2)*x1^3 - 3/2*x1^2*x2 + sqrt-7*x4*x5*x6")};
    for (const auto& f : forms) {
        std::string s = f.to_string();
        Poly g = parse6(s.c_str());
        EXPECT_EQ(g, f) << s;
        EXPECT_EQ(g.to_string(), s);
    }
    EXPECT_EQ(parse6("3/2*x1^2*x2").to_string(), "3/2*x1^2*x2");
    EXPECT_EQ(parse6("omega*x1^3 + omega^2*x1^3").to_string(), "-x1^3");
    EXPECT_THROW(parse6("x7^3"), ParseError);
    EXPECT_THROW(parse6("x1^"), ParseError);
}
