#include <gtest/gtest.h>

#include <random>

#include "cubic7/exactnum/algebraic.hpp"

using namespace cubic7;

namespace {

AlgebraicNumber random_element(const FieldPtr& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (int i = 0; i < f->degree(); ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return AlgebraicNumber(f, c);
}

std::vector<FieldPtr> catalog() {
    return {cyclotomic(3),  cyclotomic(4),       cyclotomic(7),      cyclotomic(8),
            cyclotomic(12), cyclotomic(21),      quadratic(2),       quadratic(21),
            quadratic(-7),  multiquadratic({2, 3, 7})};
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("12/5")), "12/5");
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(parse_rational("147/16"), Rational(147, 16));
    EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
    EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Rational, SquarefreePart) {
    EXPECT_EQ(squarefree_part(-28), -7);
    EXPECT_EQ(squarefree_part(294), 6);
    EXPECT_EQ(squarefree_part(1), 1);
}

TEST(UPoly, GcdAndSturm) {
    QPoly p = parse_qpoly("x^3 - 2*x", 'x');
    QPoly q = parse_qpoly("x^2 - 2", 'x');
    EXPECT_EQ(gcd(p, q), q);
    auto chain = sturm_chain(p);
    EXPECT_EQ(count_roots(chain, Rational(-10), Rational(10)), 3);
    EXPECT_EQ(count_roots(chain, Rational(0), Rational(10)), 1);
    EXPECT_EQ(to_string(p, "a"), "a^3 - 2*a");
}

TEST(Field, CyclotomicPolynomials) {
    EXPECT_EQ(to_string(cyclotomic_polynomial(7)), "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1");
    EXPECT_EQ(cyclotomic(21)->degree(), 12);
    EXPECT_EQ(cyclotomic(14), cyclotomic(7));
    EXPECT_EQ(cyclotomic(2), rationals());
}

TEST(Field, RootsOfUnity) {
    AlgebraicNumber z = zeta(7);
    EXPECT_TRUE((z * z.pow(6)).is_one());
    AlgebraicNumber sum(0);
    for (int i = 0; i < 7; ++i) sum += z.pow(i);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_TRUE((zeta(3).pow(3)).is_one());
    EXPECT_EQ(root_of_unity(6, 1, cyclotomic(3)).pow(3), AlgebraicNumber(-1));
}

TEST(Field, ComposeCatalog) {
    FieldPtr f = compose_fields(quadratic(3), quadratic(7));
    EXPECT_EQ(f->degree(), 4);
    EXPECT_TRUE(try_sqrt(21, f).has_value());
    EXPECT_EQ(compose_fields(cyclotomic(3), cyclotomic(7)), cyclotomic(21));
    EXPECT_EQ(compose_fields(rationals(), quadratic(2)), quadratic(2));
    EXPECT_EQ(multiquadratic({2, 21, 3}), multiquadratic({2, 3, 7}));
    EXPECT_EQ(compose_fields(quadratic(-7), cyclotomic(3)), cyclotomic(21));
}

TEST(Field, FieldMismatch) {
    EXPECT_THROW(zeta(7) + sqrt_of(2), FieldMismatch);
    EXPECT_NO_THROW(zeta(7) + AlgebraicNumber(Rational(1, 2)));
}

TEST(Field, DivisionByZero) {
    EXPECT_THROW(zeta(7) / AlgebraicNumber(0), DivisionByZero);
    EXPECT_THROW(AlgebraicNumber(0).inverse(), DivisionByZero);
}

TEST(Field, SquareRootsAcrossFields) {
    FieldPtr big = multiquadratic({2, 3, 7});
    AlgebraicNumber s6 = sqrt_in(6, big);
    EXPECT_EQ(s6 * s6, AlgebraicNumber(6));
    EXPECT_EQ(sqrt_in(2, big) * sqrt_in(3, big), s6);
    EXPECT_EQ(sign_of(s6), Sign::positive);
    AlgebraicNumber r = sqrt_in(-7, cyclotomic(7));
    EXPECT_EQ(r * r, AlgebraicNumber(-7));
    EXPECT_EQ(coerce(sqrt_of(-7), cyclotomic(21)), coerce(r, cyclotomic(21)));
    EXPECT_GT(r.approx().imag(), 2.6);
    AlgebraicNumber s2 = sqrt_in(2, cyclotomic(8));
    EXPECT_EQ(sign_of(s2 - AlgebraicNumber(Rational(141, 100))), Sign::positive);
    EXPECT_EQ(coerce(sqrt_of(2), cyclotomic(8)), s2);
    AlgebraicNumber s21 = sqrt_in(21, cyclotomic(84));
    EXPECT_EQ(sign_of(s21), Sign::positive);
}

TEST(Sign, Examples) {
    EXPECT_EQ(sign_of(AlgebraicNumber(0)), Sign::zero);
    EXPECT_EQ(sign_of(sqrt_of(21) - AlgebraicNumber(4)), Sign::positive);
    FieldPtr f = multiquadratic({3, 7});
    EXPECT_EQ(sign_of((sqrt_in(3, f) - sqrt_in(7, f)) / AlgebraicNumber(2)), Sign::negative);
    EXPECT_THROW(sign_of(zeta(7)), NotRealEmbedding);
    AlgebraicNumber z = zeta(7);
    EXPECT_EQ(sign_of(z + z.inverse()), Sign::positive);
    EXPECT_EQ(sign_of(z.pow(3) + z.pow(4)), Sign::negative);
}

TEST(Sign, NearCancellation) {
    // sqrt2 + sqrt3 versus a close rational
    FieldPtr f = multiquadratic({2, 3});
    AlgebraicNumber x = sqrt_in(2, f) + sqrt_in(3, f) - AlgebraicNumber(Rational(314626436, 100000000));
    EXPECT_EQ(sign_of(x), Sign::positive);
}

TEST(Field, ConstantFromConstraint) {
    AlgebraicNumber a = (AlgebraicNumber(2) * sqrt_of(2) + AlgebraicNumber(1)) / AlgebraicNumber(7);
    EXPECT_EQ(a * a.galois(1), AlgebraicNumber(Rational(-1, 7)));
}

TEST(Field, AlgebraicLawsOnRandomElements) {
    std::mt19937 rng(7);
    for (const auto& f : catalog()) {
        for (int trial = 0; trial < 10; ++trial) {
            AlgebraicNumber x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
            EXPECT_EQ((x + y) + z, x + (y + z)) << f->name();
            EXPECT_EQ((x * y) * z, x * (y * z)) << f->name();
            EXPECT_EQ(x * (y + z), x * y + x * z) << f->name();
            if (!x.is_zero()) {
                EXPECT_TRUE((x * x.inverse()).is_one()) << f->name();
            }
        }
    }
}

TEST(Field, QuadraticConjugationAndNorm) {
    std::mt19937 rng(11);
    for (long d : {2L, 21L}) {
        FieldPtr f = quadratic(d);
        AlgebraicNumber s = sqrt_in(d, f);
        for (int trial = 0; trial < 20; ++trial) {
            AlgebraicNumber x = random_element(f, rng), y = random_element(f, rng);
            EXPECT_EQ((x * y).galois(1), x.galois(1) * y.galois(1));
            EXPECT_EQ((x + y).galois(1), x.galois(1) + y.galois(1));
            Rational q(trial - 5, 3);
            EXPECT_EQ(AlgebraicNumber(q).galois(1), AlgebraicNumber(q));
            Rational a(trial, 7), b(trial - 3, 2);
            a.canonicalize();
            b.canonicalize();
            AlgebraicNumber u = AlgebraicNumber(a) + AlgebraicNumber(b) * s;
            EXPECT_EQ(u * u.galois(1), AlgebraicNumber(a * a - d * b * b));
            EXPECT_EQ(field_norm(u), a * a - d * b * b);
        }
    }
    AlgebraicNumber w = sqrt_of(-7);
    AlgebraicNumber u = AlgebraicNumber(3) + AlgebraicNumber(2) * w;
    EXPECT_EQ(u * u.conj(), AlgebraicNumber(9 + 28));
}

TEST(Sign, RefinementAgreesWithZeroTest) {
    std::mt19937 rng(3);
    for (const auto& f : {quadratic(21), multiquadratic({2, 3, 7}), quadratic(2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            AlgebraicNumber x = random_element(f, rng);
            Sign s = sign_of(x);
            EXPECT_EQ(s == Sign::zero, x.is_zero());
            if (s != Sign::zero) {
                double v = x.approx().real();
                EXPECT_EQ(v > 0, s == Sign::positive);
            }
        }
    }
}

TEST(Serialization, RoundTrip) {
    std::mt19937 rng(5);
    for (const auto& f : catalog()) {
        AlgebraicNumber x = random_element(f, rng);
        std::string text = x.to_string();
        EXPECT_EQ(parse_algebraic(text), x) << text;
    }
    EXPECT_EQ(AlgebraicNumber(Rational(12, 5)).to_string(), "(12/5) over a");
    EXPECT_EQ(zeta(3).to_string(), "(0, 1) over a^2 + a + 1");
}

TEST(Display, NamedConstants) {
    EXPECT_EQ(zeta(7).display(), "zeta7");
    EXPECT_EQ((AlgebraicNumber(1) + zeta(3)).display(), "1 + omega");
    FieldPtr f = multiquadratic({2, 3, 7});
    EXPECT_EQ((sqrt_in(6, f) * AlgebraicNumber(Rational(1, 2))).display(), "1/2*sqrt6");
    EXPECT_EQ(sqrt_of(-7).display(), "sqrt-7");
    EXPECT_EQ(*named_constant("sqrt21"), sqrt_of(21));
    EXPECT_EQ(*named_constant("omega"), zeta(3));
    EXPECT_FALSE(named_constant("sqrtx").has_value());
}

TEST(Matrix, InverseDeterminantKernel) {
    QMatrix m{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    EXPECT_EQ(determinant(m), Rational(1));
    EXPECT_EQ(*inverse(m) * m, QMatrix::identity(2));
    QMatrix s{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    EXPECT_FALSE(inverse(s).has_value());
    auto k = kernel_basis(s);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(s * k[0], (std::vector<Rational>{0, 0}));
    NumberMatrix a{{zeta(7), AlgebraicNumber(1)}, {AlgebraicNumber(0), zeta(7).inverse()}};
    EXPECT_TRUE(determinant(a).is_one());
}
