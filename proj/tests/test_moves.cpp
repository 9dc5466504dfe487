#include "support.hpp"

#include <legendrid/invariants.hpp>
#include <legendrid/moves.hpp>

#include <gtest/gtest.h>

using namespace legendrid;

namespace {

struct Law {
    StabType type;
    int dtbp, dtbm, drotp, drotm;
};

// Expected change of (tb+, tb-, rot+, rot-) under each stabilization type.
constexpr Law kLaws[] = {
    {StabType::IRight, 0, -1, 0, +1},
    {StabType::ILeft, 0, -1, 0, -1},
    {StabType::IIRight, -1, 0, -1, 0},
    {StabType::IILeft, -1, 0, +1, 0},
};

std::array<int, 4> summarize_classical(const OrientedGridDiagram &d) {
    return {tb_plus(d), tb_minus(d), rotation_plus(d), rotation_minus(d)};
}

OrientedGridDiagram trefoil() { return OrientedGridDiagram::validate(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}); }

} // namespace

TEST(Moves, DescriptorRoundTrip) {
    std::vector<MoveDescriptor> ms{ExchangeColumns{3}, ExchangeRows{0}, Stabilize{StabType::IILeft, 4, Role::O},
                                   Destabilize{StabType::IRight, 2, 5}};
    for (auto &m : ms)
        EXPECT_EQ(parse_move(to_string(m)), m) << to_string(m);
    EXPECT_EQ(to_string(Stabilize{StabType::IRight, 1, Role::X}), "stab:I>,X,NE@1");
    EXPECT_THROW(parse_move("stab:I>,X,SW@1"), GridError);
    EXPECT_THROW(parse_move("swap:1"), GridError);
}

TEST(Moves, StabTypeNames) {
    for (auto t : kAllStabTypes)
        EXPECT_EQ(parse_stab_type(to_string(t)), t);
    EXPECT_FALSE(parse_stab_type("III>"));
    // the dictionary is a bijection for each role
    for (auto r : {Role::X, Role::O})
        for (auto t : kAllStabTypes)
            EXPECT_EQ(stab_type_for(r, compass_for(t, r)), t);
}

TEST(Moves, InterleavedPairsBlockExchange) {
    // every pair of adjacent columns or rows of this trefoil interleaves
    EXPECT_TRUE(applicable_exchanges(trefoil()).empty());
    EXPECT_THROW(apply_exchange(trefoil(), ExchangeColumns{0}), GridError);
    EXPECT_TRUE(applicable_exchanges(minimal_unknot()).empty());
}

TEST(Moves, NestedColumnsExchange) {
    // columns 2 and 3 hold rows {1,2} and {0,3}: nested
    auto d = OrientedGridDiagram::validate(5, {0, 1, 2, 3, 4}, {2, 4, 1, 0, 3});
    EXPECT_TRUE(exchange_legal(d.base(), ExchangeColumns{2}));
    EXPECT_FALSE(exchange_legal(d.base(), ExchangeColumns{1})); // shared row 1
    EXPECT_FALSE(exchange_legal(d.base(), ExchangeColumns{0})); // {0,2} and {1,4} interleave
    auto e = apply_exchange(d, ExchangeColumns{2});
    EXPECT_EQ(e.base().x(2), 3);
    EXPECT_EQ(e.base().o(2), 0);
    EXPECT_EQ(e.base().x(3), 2);
}

TEST(Moves, ExchangePropertySuite) {
    std::mt19937_64 rng(1);
    int applied = 0;
    for (int i = 0; i < testkit::kPropertyInstances; ++i) {
        auto d = testkit::random_diagram(rng, 3, 8);
        const auto before = summarize_classical(d);
        for (auto &m : applicable_exchanges(d)) {
            auto e = apply_exchange(d, m);
            ASSERT_EQ(summarize_classical(e), before) << serialize(d) << to_string(m);
            ASSERT_EQ(apply_exchange(e, m), d); // an exchange undoes itself
            ++applied;
        }
    }
    EXPECT_GT(applied, 1000);
}

TEST(Moves, ExchangeKeepsAlexander) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        auto d = testkit::random_diagram(rng, 3, 8);
        const auto a = alexander(d);
        for (auto &m : applicable_exchanges(d))
            ASSERT_EQ(alexander(apply_exchange(d, m)), a);
    }
}

TEST(Moves, StabilizationLaws) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < testkit::kPropertyInstances; ++i) {
        auto d = testkit::random_diagram(rng, 2, 8);
        const auto &law = kLaws[rng() % 4];
        const int col = static_cast<int>(rng() % static_cast<unsigned>(d.size()));
        const Role role = rng() & 1 ? Role::X : Role::O;
        auto s = stabilize(d, law.type, col, role);
        ASSERT_EQ(s.size(), d.size() + 1);
        ASSERT_EQ(s.base().components(), 1);
        ASSERT_EQ(tb_plus(s) - tb_plus(d), law.dtbp) << to_string(law.type);
        ASSERT_EQ(tb_minus(s) - tb_minus(d), law.dtbm) << to_string(law.type);
        ASSERT_EQ(rotation_plus(s) - rotation_plus(d), law.drotp) << to_string(law.type);
        ASSERT_EQ(rotation_minus(s) - rotation_minus(d), law.drotm) << to_string(law.type);

        // some destabilization of the result recovers the input and names the type
        bool found = false;
        for (auto &site : destabilizations(s))
            if (site.type == law.type && equivalent(site.result, d)) {
                found = true;
                ASSERT_TRUE(equivalent(stabilize(site.result, site.inverse), s));
            }
        ASSERT_TRUE(found) << serialize(d) << to_string(Stabilize{law.type, col, role});
    }
}

TEST(Moves, DestabilizationsRespectLaws) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 2000; ++i) {
        auto d = testkit::random_diagram(rng, 3, 8);
        for (auto &site : destabilizations(d)) {
            const auto &law = kLaws[static_cast<int>(site.type)];
            ASSERT_EQ(tb_plus(d) - tb_plus(site.result), law.dtbp);
            ASSERT_EQ(tb_minus(d) - tb_minus(site.result), law.dtbm);
            ASSERT_EQ(rotation_plus(d) - rotation_plus(site.result), law.drotp);
            ASSERT_EQ(rotation_minus(d) - rotation_minus(site.result), law.drotm);
            ASSERT_EQ(apply_destabilize(d, site.move), site.result);
        }
    }
}
