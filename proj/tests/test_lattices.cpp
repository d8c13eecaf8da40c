#include <gtest/gtest.h>

#include <json.hpp>

#include <complex>
#include <functional>
#include <numeric>
#include <random>

#include "cubic7/lattices/lattice.hpp"

using namespace cubic7;

namespace {

// gcd of all k x k minors, the oracle for d_1 * ... * d_k.
Integer minor_gcd(const IntMatrix& m, std::size_t k) {
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t, std::vector<std::vector<std::size_t>>&)>
        choose = [&](std::size_t start, std::size_t n, std::vector<std::size_t>& cur, std::size_t left,
                     std::vector<std::vector<std::size_t>>& out) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                cur.push_back(i);
                choose(i + 1, n, cur, left - 1, out);
                cur.pop_back();
            }
        };
    std::vector<std::vector<std::size_t>> rsets, csets;
    std::vector<std::size_t> cur;
    choose(0, m.rows(), cur, k, rsets);
    choose(0, m.cols(), cur, k, csets);
    for (const auto& r : rsets)
        for (const auto& c : csets) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
            g = gcd(g, integer_determinant(sub));
        }
    return g;
}

void expect_valid_snf(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.u * m * s.v, s.d);
    EXPECT_TRUE(is_unimodular(s.u));
    EXPECT_TRUE(is_unimodular(s.v));
    std::size_t r = std::min(m.rows(), m.cols());
    Integer prod = 1;
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) EXPECT_EQ(s.d(i, j), 0);
    for (std::size_t k = 0; k < r; ++k) {
        EXPECT_GE(s.d(k, k), 0);
        if (k + 1 < r && s.d(k, k) != 0) EXPECT_EQ(s.d(k + 1, k + 1) % s.d(k, k), 0);
        prod *= s.d(k, k);
        EXPECT_EQ(prod, minor_gcd(m, k + 1));
    }
}

std::vector<Integer> diagonal(const IntMatrix& d) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < d.rows(); ++i) out.push_back(d(i, i));
    return out;
}

// Floating Gauss sum, an independent oracle for the exact phase.
int float_phase(const Lattice& l, const DiscriminantGroup& a) {
    std::complex<double> s = 0;
    a.for_each([&](const std::vector<long>& c) {
        double q = discriminant_q(l, a.element(c)).get_d();
        s += std::polar(1.0, M_PI * q);
    });
    double turns = std::arg(s) / (2 * M_PI) * 8;
    return static_cast<int>(std::lround(turns) % 8 + 8) % 8;
}

}  // namespace

TEST(Smith, Examples) {
    EXPECT_EQ(diagonal(smith_normal_form(transcendental_rank3().gram()).d), (std::vector<Integer>{1, 7, 84}));
    EXPECT_EQ(diagonal(smith_normal_form(transcendental_rank4().gram()).d), (std::vector<Integer>{1, 7, 7, 21}));
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(4)).d, IntMatrix::identity(4));
    expect_valid_snf(transcendental_rank3().gram());
    expect_valid_snf(transcendental_rank4().gram());
}

TEST(Smith, RandomAgainstMinors) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-12, 12), dim(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng) * (trial % 3 == 0 ? 6 : 1);
        expect_valid_snf(m);
    }
}

TEST(Lattice, Signatures) {
    EXPECT_EQ(transcendental_rank3().signature(), std::make_pair(1, 2));
    EXPECT_EQ(transcendental_rank4().signature(), std::make_pair(2, 2));
    EXPECT_EQ(hyperbolic_plane().signature(), std::make_pair(1, 1));
    EXPECT_EQ(a2_lattice().signature(), std::make_pair(2, 0));
    EXPECT_EQ(e8_lattice().signature(), std::make_pair(8, 0));
    EXPECT_EQ(transcendental_rank3().determinant(), 588);
    EXPECT_EQ(transcendental_rank4().determinant(), 1029);
    EXPECT_EQ(abs(e8_lattice().determinant()), 1);
    EXPECT_THROW(Lattice(IntMatrix{{Integer(1), Integer(2)}, {Integer(3), Integer(1)}}), MathError);
    EXPECT_THROW(Lattice(IntMatrix{{Integer(1), Integer(1)}, {Integer(1), Integer(1)}}), MathError);
}

TEST(Discriminant, Groups) {
    auto t1 = transcendental_rank3();
    auto a1 = discriminant_group(t1);
    EXPECT_EQ(a1.invariant_factors, (std::vector<Integer>{7, 84}));
    EXPECT_EQ(a1.order(), 588);
    auto a2 = discriminant_group(transcendental_rank4());
    EXPECT_EQ(a2.invariant_factors, (std::vector<Integer>{7, 7, 21}));
    EXPECT_EQ(a2.order(), 1029);
    EXPECT_TRUE(discriminant_group(e8_lattice()).invariant_factors.empty());
    EXPECT_TRUE(discriminant_group(hyperbolic_plane()).invariant_factors.empty());
    // Generators lie in the dual lattice and have the stated orders.
    for (const auto& [l, a] : {std::make_pair(t1, a1), std::make_pair(transcendental_rank4(), a2)}) {
        for (std::size_t g = 0; g < a.generators.size(); ++g) {
            for (std::size_t i = 0; i < l.rank(); ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < l.rank(); ++j) s += Rational(l.gram()(i, j)) * a.generators[g][j];
                EXPECT_TRUE(is_integral(s));
            }
            for (const auto& c : a.generators[g]) EXPECT_TRUE(is_integral(c * Rational(a.invariant_factors[g])));
        }
    }
}

TEST(Discriminant, PolarizationExhaustive) {
    auto t1 = transcendental_rank3();
    EXPECT_TRUE(polarization_consistent(t1, discriminant_group(t1)));
    auto a2 = a2_lattice();
    auto g = discriminant_group(a2);
    ASSERT_EQ(g.q_values.size(), 1u);
    EXPECT_EQ(g.q_values[0], Rational(2, 3));
}

TEST(Milgram, Phases) {
    struct Case {
        Lattice l;
        int phase;
    };
    std::vector<Case> cases{{transcendental_rank3(), 7}, {transcendental_rank4(), 0}, {hyperbolic_plane(), 0},
                            {a2_lattice(), 2}, {e8_lattice(), 0}};
    for (const auto& c : cases) {
        auto r = milgram_phase(c.l);
        EXPECT_EQ(r.phase, c.phase);
        EXPECT_TRUE(r.matches);
        EXPECT_EQ(float_phase(c.l, discriminant_group(c.l)), c.phase);
    }
    EXPECT_THROW(milgram_phase(Lattice(IntMatrix{{Integer(1)}})), NotEven);
}

TEST(Isotropic, Search) {
    EXPECT_FALSE(isotropic_search(transcendental_rank3(), 200).has_value());
    auto t2 = isotropic_search(transcendental_rank4(), 10);
    ASSERT_TRUE(t2.has_value());
    EXPECT_EQ(*t2, (IntVector{0, 0, 1, 0}));
    auto u = isotropic_search(hyperbolic_plane(), 1);
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(*u, (IntVector{1, 0}));
    EXPECT_FALSE(isotropic_search(a2_lattice(), 20, 3).has_value());
}

TEST(LocalObstruction, Examples) {
    auto half = half_norm_form(transcendental_rank3());
    auto quoted = parse_quadratic_form("-x1^2 + x1*x2 + 5*x2^2 - 14*x3^2", 3);
    EXPECT_EQ(half.coeffs, quoted.coeffs);
    EXPECT_TRUE(local_obstruction(quoted, 4));
    EXPECT_FALSE(local_obstruction(quoted, 2));
    EXPECT_TRUE(local_obstruction(parse_quadratic_form("x1^2 - 21*x2^2 - 6*x3^2 + 126*x4^2", 4), 49));
    EXPECT_FALSE(local_obstruction(parse_quadratic_form("x1^2 + x2^2 - x3^2", 3), 4));
    EXPECT_FALSE(local_obstruction(parse_quadratic_form("x1^2 + x2^2 - x3^2", 3), 1024));
    EXPECT_THROW(local_obstruction(quoted, 2048), ModulusTooLarge);
    EXPECT_THROW(local_obstruction(quoted, 12), MathError);
    EXPECT_THROW(parse_quadratic_form("x1^3", 2), ParseError);
}

TEST(Lattice, Json) {
    auto l = lattice_from_json(R"({"gram": [[-2,1,0],[1,10,0],[0,0,-28]]})");
    EXPECT_EQ(l.gram(), transcendental_rank3().gram());
    auto j = nlohmann::json::parse(discriminant_json(l, discriminant_group(l)));
    EXPECT_EQ(j["order"], "588");
    EXPECT_EQ(j["invariant_factors"].size(), 2u);
    EXPECT_EQ(j["genus_annotation"], "4_1^{+1} 7^{+2} 3^{-1}");
    EXPECT_THROW(lattice_from_json("{\"gram\": 3}"), ParseError);
    EXPECT_THROW(lattice_from_json("not json"), ParseError);
}
