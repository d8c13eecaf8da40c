#include <gtest/gtest.h>

#include <sstream>

#include "cubic7/groups/catalog.hpp"
#include "cubic7/groups/family_action.hpp"

using namespace cubic7;

namespace {

FamilyPoint f21_point(std::vector<AlgebraicNumber> c) { return FamilyPoint{FamilyTag::F21, std::move(c)}; }

}  // namespace

TEST(Permutations, ColumnConvention) {
    auto m = permutation_matrix("(123)", 3);
    EXPECT_TRUE(m(1, 0).is_one());
    EXPECT_TRUE(m(2, 1).is_one());
    EXPECT_TRUE(m(0, 2).is_one());
    EXPECT_EQ(permutation_matrix("(1,2)(3,6)", 7), permutation_matrix("(12)(36)", 7));
    EXPECT_EQ(permutation_matrix("", 4), NumberMatrix::identity(4));
    EXPECT_THROW(parse_cycles("(12)(23)", 3), ParseError);
    EXPECT_THROW(parse_cycles("(19)", 7), ParseError);
}

TEST(Permutations, PsiRoundTrip) {
    auto seven = permutation_matrix("(1234567)", 7);
    auto six = psi_inverse(seven);
    EXPECT_EQ(psi(six), seven);
    ProjectiveMatrix p(six);
    EXPECT_FALSE(p.is_scalar());
    EXPECT_TRUE(p.pow(7).is_scalar());
    EXPECT_EQ(psi_inverse(NumberMatrix::identity(7)), NumberMatrix::identity(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_TRUE(six(i, j).is_rational());
    NumberMatrix bad = NumberMatrix::identity(7);
    bad(0, 1) = 1;
    EXPECT_THROW(psi_inverse(bad), DimensionMismatch);
}

TEST(Projective, ScalarBlindEquality) {
    auto a = g3() * g7();
    for (auto lambda : {AlgebraicNumber(3), sqrt_of(-7), zeta(7) + AlgebraicNumber(2)}) {
        ProjectiveMatrix b(lambda * a.matrix());
        EXPECT_TRUE(a == b);
        EXPECT_TRUE(b == a);
        EXPECT_EQ(*b.ratio_to(a), lambda);
    }
    EXPECT_FALSE(a == g7());
    EXPECT_THROW(ProjectiveMatrix(NumberMatrix(2, 2)), MathError);
}

TEST(Groups, Orders) {
    EXPECT_EQ(build_c7().order(), 7u);
    EXPECT_EQ(build_f21().order(), 21u);
    auto l27 = build_l27();
    EXPECT_EQ(l27.order(), 168u);
    for (const auto& g : l27.elements())
        for (const auto& h : l27.generators()) EXPECT_TRUE(l27.contains(g * h));
    EXPECT_EQ(build_l27_c2().order(), 336u);
    EXPECT_THROW(MatrixGroup::generate({build_l27().generators()}, 100), ClosureFailure);
}

TEST(Groups, ElementE) {
    auto e = build_E();
    EXPECT_TRUE(e.square_matches);
    EXPECT_TRUE(e.normalizes_l27);
    EXPECT_FALSE(e.is_permutation);
    EXPECT_FALSE(build_l27().contains(e.prime));
    auto f1 = l27_f1(), f2 = l27_f2();
    auto r2 = sqrt_of(2);
    EXPECT_EQ(act(e.prime.matrix(), f1), AlgebraicNumber(Rational(3, 2)) * r2 * f2);
    EXPECT_EQ(act(e.prime.matrix(), f2), AlgebraicNumber(Rational(1, 3)) * r2 * f1);
}

TEST(Groups, IntertwinerS) {
    auto s = build_S();
    EXPECT_EQ((s * g7_model() * s.inverse()).matrix(), g7().matrix());
    EXPECT_EQ((s * g3_model() * s.inverse()).matrix(), g3().matrix());
    for (const auto& f : {l27_f1(), l27_f2()}) {
        auto image = act(s.matrix(), f);
        EXPECT_TRUE(f21_coordinates(image).has_value());
    }
}

TEST(Groups, ConjugationIdentities) {
    for (const auto& check : conjugation_identities()) EXPECT_TRUE(check.holds) << check.name;
}

TEST(FamilyAction, Generators) {
    EXPECT_TRUE(induced_family_action(g7()).is_scalar());
    EXPECT_TRUE(induced_family_action(g3()).is_scalar());
    auto swap = induced_family_action(gtau()).matrix();
    NumberMatrix expected{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    EXPECT_EQ(swap, expected);
    AlgebraicNumber w = zeta(3);
    NumberMatrix kexp{{1, 0, 0, 0}, {0, w, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_EQ(induced_family_action(k_element()).matrix(), kexp);
    EXPECT_THROW(induced_family_action(ProjectiveMatrix(permutation_matrix("(12)", 6))), NotInNormalizer);
}

TEST(FamilyAction, TorusWeights) {
    auto w = torus_weights();
    EXPECT_EQ(w, (std::array<int, 4>{1, 2, 0, 3}));
    for (int t : {2, 3, 5}) {
        auto r = induced_family_action(torus(t)).matrix();
        for (std::size_t i = 0; i < 4; ++i) {
            Rational expected = 1;
            for (int e = 0; e < w[i]; ++e) expected *= t;
            EXPECT_EQ(r(i, i), AlgebraicNumber(expected));
        }
    }
}

TEST(Stabilizers, Generic) {
    auto r = stabilizer_check(f21_point({1, 2, 3, 5}));
    EXPECT_FALSE(r.infinite);
    EXPECT_EQ(r.quotient_order, 1u);
    EXPECT_EQ(r.max_order, 1);
}

TEST(Stabilizers, ExtraInvolution) {
    auto r = stabilizer_check(f21_point({1, 2, 3, 24}));
    EXPECT_EQ(r.quotient_order, 2u);
    EXPECT_TRUE(r.all_roots_found);
    EXPECT_EQ(r.max_order, 2);
    bool found = false;
    for (const auto& c : r.cosets)
        if (c.label.tau_power == 1 && c.label.k_power == 0 && !c.roots.empty()) {
            EXPECT_EQ(c.roots[0], AlgebraicNumber(4));
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(Stabilizers, KleinPoint) {
    auto r = stabilizer_check(f21_point({1, 1, 0, 0}));
    EXPECT_EQ(r.quotient_order, 6u);
    EXPECT_TRUE(r.all_roots_found);
    EXPECT_EQ(r.max_order, 6);
}

TEST(Stabilizers, PositiveDimensional) {
    auto r = stabilizer_check(f21_point({0, 0, 1, 0}));
    EXPECT_TRUE(r.infinite);
    EXPECT_THROW(stabilizer_check(f21_point({0, 0, 0, 0})), MathError);
}

TEST(Stabilizers, Pencil) {
    auto generic = pencil_stabilizer(FamilyPoint{FamilyTag::L27, {1, 1}});
    EXPECT_EQ(generic.stabilizer_order, 168u);
    EXPECT_FALSE(generic.extra_involution);
    auto r = AlgebraicNumber(Rational(3, 2)) * sqrt_of(2);
    for (auto c : {r, -r}) {
        auto special = pencil_stabilizer(FamilyPoint{FamilyTag::L27, {1, c}});
        EXPECT_EQ(special.stabilizer_order, 336u);
        EXPECT_TRUE(special.extra_involution);
    }
}

TEST(Config, LoadGenerators) {
    std::istringstream in("# F21 with the order-7 element twice\ng7\n  g3  # shift\n\n(1234567)\nP\n");
    auto gens = load_generators(in);
    ASSERT_EQ(gens.size(), 4u);
    EXPECT_TRUE(gens[0] == g7());
    EXPECT_TRUE(gens[2] == g7_model());
    EXPECT_EQ(gens[3].dim(), 4u);
    std::istringstream bad("g9\n");
    EXPECT_THROW(load_generators(bad), ParseError);
    EXPECT_THROW(load_generators_file("/nonexistent/gens.txt"), ParseError);
}
