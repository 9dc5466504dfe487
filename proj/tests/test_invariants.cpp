#include "support.hpp"

#include <legendrid/invariants.hpp>

#include <gtest/gtest.h>

using namespace legendrid;

namespace {

LaurentPolynomial T(int e, std::int64_t c = 1) { return LaurentPolynomial::monomial(c, e); }

} // namespace

TEST(Invariants, MinimalUnknot) {
    auto s = summarize(minimal_unknot());
    EXPECT_EQ(s.tb_plus, -1);
    EXPECT_EQ(s.tb_minus, -1);
    EXPECT_EQ(s.rot_plus, 0);
    EXPECT_EQ(s.rot_minus, 0);
    EXPECT_EQ(s.alexander, LaurentPolynomial(1));
    EXPECT_EQ(s.type, KnotType::Unknot);
}

TEST(Invariants, Trefoil) {
    // a minimal grid of a trefoil realizes its maximal tb on one side only
    auto d = OrientedGridDiagram::validate(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4});
    auto s = summarize(d);
    EXPECT_EQ(std::min(s.tb_plus, s.tb_minus), -6);
    EXPECT_EQ(std::max(s.tb_plus, s.tb_minus), 1);
    EXPECT_EQ(std::abs(s.rot_plus) + std::abs(s.rot_minus), 1);
    EXPECT_EQ(s.alexander, T(1) - 1 + T(-1));
    EXPECT_EQ(s.type, KnotType::K3_1);
}

TEST(Invariants, TbSumIsMinusSize) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < testkit::kPropertyInstances; ++i) {
        auto d = testkit::random_diagram(rng, 2, 8);
        ASSERT_EQ(tb_plus(d) + tb_minus(d), -d.size()) << serialize(d);
    }
}

TEST(Invariants, ReversalAndSymmetries) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 2000; ++i) {
        auto d = testkit::random_diagram(rng, 2, 8);
        // tb ignores orientation, rotation changes sign
        ASSERT_EQ(tb_plus(reverse(d)), tb_plus(d));
        ASSERT_EQ(tb_minus(reverse(d)), tb_minus(d));
        ASSERT_EQ(rotation_plus(reverse(d)), -rotation_plus(d));
        ASSERT_EQ(rotation_minus(reverse(d)), -rotation_minus(d));
        // the vertical mirror swaps the two contact structures
        ASSERT_EQ(tb_plus(reflect_vertical(d)), tb_minus(d));
        // point reflection keeps tb
        ASSERT_EQ(tb_plus(rotate_pi(d)), tb_plus(d));
        ASSERT_EQ(tb_minus(rotate_pi(d)), tb_minus(d));
        // translations change nothing classical
        auto t = d.shifted(1, 2);
        ASSERT_EQ(tb_plus(t), tb_plus(d));
        ASSERT_EQ(rotation_plus(t), rotation_plus(d));
        ASSERT_EQ(rotation_minus(t), rotation_minus(d));
    }
}

TEST(Invariants, RotationParity) {
    // rot is congruent to tb + 1 mod 2 for knots
    std::mt19937_64 rng(8);
    for (int i = 0; i < 2000; ++i) {
        auto d = testkit::random_diagram(rng, 2, 8);
        ASSERT_EQ(((rotation_plus(d) + tb_plus(d) + 1) % 2 + 2) % 2, 0);
        ASSERT_EQ(((rotation_minus(d) + tb_minus(d) + 1) % 2 + 2) % 2, 0);
    }
}

TEST(Invariants, AlexanderTable) {
    const std::vector<std::pair<KnotType, LaurentPolynomial>> expected = {
        {KnotType::K4_1, -T(1) + 3 - T(-1)},
        {KnotType::K5_1, T(2) - T(1) + 1 - T(-1) + T(-2)},
        {KnotType::K5_2, T(1, 2) - 3 + T(-1, 2)},
        {KnotType::K6_1, T(1, -2) + 5 + T(-1, -2)},
        {KnotType::K7_6, -T(2) + T(1, 5) - 7 + T(-1, 5) - T(-2)},
        {KnotType::K7_7, T(2) - T(1, 5) + 9 - T(-1, 5) + T(-2)},
    };
    for (auto &e : knot_grids()) {
        auto g = table_grid(e);
        EXPECT_EQ(identify(g), e.type) << to_string(e.type);
        for (auto &[k, p] : expected) {
            if (k == e.type) {
                EXPECT_EQ(alexander(g), p) << to_string(k);
            }
        }
    }
}

TEST(Invariants, ConnectedSumDiscriminator) {
    auto sum = table_grid({KnotType::K3_1Sum4_1, {}, {}});
    const auto d = alexander(sum);
    EXPECT_EQ(d, -T(2) + T(1, 4) - 5 + T(-1, 4) - T(-2));
    EXPECT_NE(identify(sum), KnotType::K7_6);
    EXPECT_EQ(identify(sum), KnotType::K3_1Sum4_1);
}

TEST(Invariants, WritheOfTrefoilMirrorPair) {
    auto d = OrientedGridDiagram::validate(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4});
    EXPECT_EQ(std::abs(writhe(d)), std::abs(writhe(reflect_vertical(d))));
    EXPECT_EQ(alexander(reflect_vertical(d)), alexander(d));
}
