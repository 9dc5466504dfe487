#include "support.hpp"

#include <legendrid/explorer.hpp>

#include <gtest/gtest.h>

using namespace legendrid;

namespace {

OrientedGridDiagram trefoil() { return OrientedGridDiagram::validate(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}); }

// a diagram with a sizeable exchange class
OrientedGridDiagram roomy() { return OrientedGridDiagram::validate(6, {0, 1, 2, 3, 4, 5}, {2, 4, 1, 5, 3, 0}); }

} // namespace

TEST(Explorer, RigidDiagramsHaveSingletonClasses) {
    for (auto d : {trefoil(), minimal_unknot()}) {
        auto cls = exchange_class(d);
        EXPECT_TRUE(cls.complete);
        EXPECT_EQ(cls.size(), 1u);
        EXPECT_FALSE(admits_nontrivial_exchange(d));
        EXPECT_TRUE(cls.contains(d.shifted(2, 1)));
    }
}

TEST(Explorer, ClassIsClosedAndInvariant) {
    auto d = roomy();
    auto cls = exchange_class(d);
    ASSERT_TRUE(cls.complete);
    ASSERT_GT(cls.size(), 1u);
    for (auto &k : cls.members) {
        auto m = from_key(k);
        EXPECT_EQ(tb_plus(m), tb_plus(d));
        EXPECT_EQ(rotation_minus(m), rotation_minus(d));
        for (auto &mv : applicable_exchanges(m))
            ASSERT_TRUE(cls.contains(apply_exchange(m, mv)));
    }
    EXPECT_EQ(same_class(d, from_key(cls.members.back())), Decision::Yes);
}

TEST(Explorer, ThreadsGiveTheSameClass) {
    ExploreOptions one, many;
    many.threads = 3;
    auto d = stabilize(roomy(), StabType::IRight, 0, Role::X);
    EXPECT_EQ(exchange_class(d, one).members, exchange_class(d, many).members);
}

TEST(Explorer, BudgetStarvedRunsAreUnknown) {
    ExploreOptions tiny;
    tiny.node_budget = 3;
    auto d = roomy();
    auto cls = exchange_class(d, tiny);
    EXPECT_FALSE(cls.complete);
    // a diagram of another size is a definite No; a far one under starvation is Unknown
    EXPECT_EQ(same_class(d, trefoil(), tiny), Decision::No);
    auto far = from_key(exchange_class(d).members.back());
    auto dec = same_class(d, far, tiny);
    EXPECT_NE(dec, Decision::No);
}

TEST(Explorer, DifferentTbMeansDifferentClass) {
    auto d = roomy();
    auto s = stabilize(d, StabType::IIRight, 0, Role::X);
    auto t = stabilize(d, StabType::IRight, 0, Role::X);
    EXPECT_EQ(same_class(s, t), Decision::No);
}

TEST(Explorer, StabClassDoesNotDependOnSite) {
    // stabilizations of one type at any vertex are exchange equivalent
    std::mt19937_64 rng(12);
    for (int i = 0; i < 40; ++i) {
        auto d = testkit::random_diagram(rng, 3, 5);
        for (auto t : kAllStabTypes) {
            auto cls = stab_class(d, t);
            ASSERT_TRUE(cls.complete);
            for (int c = 0; c < d.size(); ++c)
                for (Role r : {Role::X, Role::O})
                    ASSERT_TRUE(cls.contains(stabilize(d, t, c, r)))
                        << serialize(d) << to_string(Stabilize{t, c, r});
        }
    }
}

TEST(Explorer, StabClaims) {
    auto d = roomy();
    auto e = from_key(exchange_class(d).members.front());
    auto ok = verify_stab_claim({"same", d, StabType::ILeft, e, StabType::ILeft});
    EXPECT_EQ(ok.verdict, Decision::Yes);
    EXPECT_TRUE(ok.lhs_complete && ok.rhs_complete);
    auto bad = verify_stab_claim({"types", d, StabType::ILeft, d, StabType::IIRight});
    EXPECT_EQ(bad.verdict, Decision::No);
}

TEST(Explorer, LegendrianSearchFindsReplayablePaths) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        auto d = testkit::random_diagram(rng, 3, 6);
        // move away with an exchange and a type I stabilization elsewhere, then back
        auto s1 = stabilize(d, StabType::IRight, 0, Role::X);
        auto s2 = stabilize(d, StabType::IRight, d.size() - 1, Role::O);
        auto v = legendrian_equiv_bounded(s1, s2, ContactSign::Plus, s1.size() + 1, 200000);
        ASSERT_TRUE(v.found);
        EXPECT_TRUE(equivalent(replay(s1, v.path), s2));
    }
}

TEST(Explorer, SearchNeverRefutes) {
    // type II stabilization changes tb+, so no xi_+ path exists; the search
    // reports "not found", which is not a refutation
    auto d = roomy();
    auto v = legendrian_equiv_bounded(d, stabilize(d, StabType::IIRight, 0, Role::X), ContactSign::Plus, 7, 5000);
    EXPECT_FALSE(v.found);
    EXPECT_TRUE(v.path.empty());
}

TEST(Explorer, LegendrianMovesRespectSign) {
    auto d = roomy();
    for (auto sign : {ContactSign::Plus, ContactSign::Minus})
        for (auto &m : legendrian_moves(d, sign, 7)) {
            auto e = apply_move(d, m);
            if (sign == ContactSign::Plus) {
                ASSERT_EQ(tb_plus(e), tb_plus(d)) << to_string(m);
                ASSERT_EQ(rotation_plus(e), rotation_plus(d)) << to_string(m);
            } else {
                ASSERT_EQ(tb_minus(e), tb_minus(d)) << to_string(m);
                ASSERT_EQ(rotation_minus(e), rotation_minus(d)) << to_string(m);
            }
        }
    // at the cap only exchanges and destabilizations remain
    for (auto &m : legendrian_moves(d, ContactSign::Plus, d.size()))
        EXPECT_FALSE(std::holds_alternative<Stabilize>(m));
}
