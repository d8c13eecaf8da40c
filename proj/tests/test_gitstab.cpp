#include <gtest/gtest.h>

#include "cubic7/gitstab/stability.hpp"

using namespace cubic7;

namespace {

unsigned mask_of(std::initializer_list<int> slots) {
    unsigned m = 0;
    for (int s : slots) m |= 1u << (s - 1);
    return m;
}

SupportPattern c7(std::initializer_list<int> slots) { return {GitFamily::C7, mask_of(slots)}; }
SupportPattern f21(std::initializer_list<int> slots) { return {GitFamily::F21, mask_of(slots)}; }

}  // namespace

TEST(Weights, QuotedCertificates) {
    auto w = hm_weights(OnePS{{-25, -1, 3, 1, -1, 23}});
    for (int slot : {2, 3, 4, 5, 6, 8}) EXPECT_GT(w[static_cast<std::size_t>(slot - 1)], 0) << slot;
    EXPECT_LT(w[0], 0);
    auto v = hm_weights(OnePS{{-8, -5, 10, 1, -2, 4}});
    for (int slot = 2; slot <= 8; ++slot) EXPECT_GE(v[static_cast<std::size_t>(slot - 1)], 0) << slot;
    EXPECT_EQ(hm_weights(OnePS{{1, -1, 0, 0, 0, 0}}), (std::array<long, 8>{1, -2, 0, 0, 0, 1, 1, -1}));
    EXPECT_TRUE(certificate_holds(c7({2, 3, 4, 5, 6, 8}), OnePS{{-25, -1, 3, 1, -1, 23}}, true));
    OnePS unbalanced{{1, 1, 0, 0, 0, 0}};
    EXPECT_FALSE(unbalanced.valid());
}

TEST(Oracle, FourierMotzkin) {
    // x >= 1, y >= 1, x + y <= 1 is infeasible; x + y <= 3 is feasible.
    std::vector<std::vector<Rational>> a{{1, 0}, {0, 1}, {-1, -1}};
    EXPECT_FALSE(fm_feasible(a, {1, 1, -1}).has_value());
    auto y = fm_feasible({{1, 0}, {0, 1}, {-1, -1}}, {1, 1, -3});
    ASSERT_TRUE(y.has_value());
    EXPECT_GE((*y)[0], 1);
    EXPECT_GE((*y)[1], 1);
    EXPECT_LE((*y)[0] + (*y)[1], 3);
}

TEST(Oracle, Examples) {
    EXPECT_FALSE(destabilizer_exists(c7({1, 2, 3, 4, 5, 6, 7, 8}), false).has_value());
    EXPECT_FALSE(destabilizer_exists(c7({7, 8}), true).has_value());
    auto cert = destabilizer_exists(c7({2, 3, 4, 5, 6, 8}), true);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(certificate_holds(c7({2, 3, 4, 5, 6, 8}), *cert, true));
    EXPECT_EQ(oracle_classification(c7({7})), Stability::unstable);
    EXPECT_EQ(oracle_classification(c7({})), Stability::unstable);
}

TEST(ClosedForm, C7Examples) {
    EXPECT_EQ(closed_form_c7(c7({2, 4, 6, 7})), Stability::semistable_not_stable);
    EXPECT_EQ(closed_form_c7(c7({1, 3, 5, 8})), Stability::semistable_not_stable);
    EXPECT_EQ(closed_form_c7(c7({7})), Stability::unstable);
    EXPECT_EQ(closed_form_c7(c7({1, 2, 3, 4, 5, 6})), Stability::stable);
}

TEST(ClosedForm, F21Examples) {
    EXPECT_EQ(closed_form_f21(f21({1, 2})), Stability::stable);
    EXPECT_EQ(closed_form_f21(f21({1, 3})), Stability::unstable);
    EXPECT_EQ(closed_form_f21(f21({1, 2, 3, 4})), Stability::stable);
    EXPECT_EQ(oracle_classification(f21({1, 3})), Stability::unstable);
}

TEST(Sweep, C7Exhaustive) {
    auto entries = git_sweep(GitFamily::C7);
    ASSERT_EQ(entries.size(), 256u);
    for (const auto& e : entries) {
        EXPECT_EQ(e.oracle, e.closed_form) << e.pattern.to_string();
        if (e.unstable_witness) EXPECT_TRUE(certificate_holds(e.pattern, *e.unstable_witness, true));
        if (e.nonstable_witness) EXPECT_TRUE(certificate_holds(e.pattern, *e.nonstable_witness, false));
    }
}

TEST(Sweep, F21Exhaustive) {
    auto entries = git_sweep(GitFamily::F21);
    ASSERT_EQ(entries.size(), 16u);
    for (const auto& e : entries) {
        EXPECT_EQ(e.oracle, e.closed_form) << e.pattern.to_string();
        EXPECT_NE(e.oracle, Stability::semistable_not_stable);
    }
}

TEST(Sweep, Monotone) {
    for (auto family : {GitFamily::C7, GitFamily::F21}) {
        auto entries = git_sweep(family);
        for (const auto& small : entries)
            for (const auto& big : entries)
                if ((small.pattern.active & big.pattern.active) == small.pattern.active)
                    EXPECT_GE(static_cast<int>(big.oracle), static_cast<int>(small.oracle));
    }
}
