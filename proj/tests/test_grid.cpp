#include "support.hpp"

#include <legendrid/grid.hpp>

#include <gtest/gtest.h>

using namespace legendrid;

namespace {

GridError::Kind parse_error(const std::string &text) {
    try {
        parse(text);
    } catch (const GridError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for\n" << text;
    return GridError::Kind::Syntax;
}

} // namespace

TEST(Grid, ParseSerializeRoundTrip) {
    const std::string text = "n=5\nX=2,3,4,0,1\nO=0,1,2,3,4\norient=OtoX\n";
    auto d = parse(text);
    EXPECT_EQ(d.size(), 5);
    EXPECT_EQ(d.direction(), Direction::OtoX);
    EXPECT_EQ(serialize(d), text);
    EXPECT_EQ(parse("# comment\n\n n = 5 \nX=2, 3,4,0,1\nO=0,1,2,3,4\norient=OtoX"), d);
}

TEST(Grid, Validation) {
    EXPECT_EQ(parse_error("n=1\nX=0\nO=0\norient=XtoO"), GridError::Kind::InvalidSize);
    EXPECT_EQ(parse_error("n=3\nX=0,0,1\nO=1,2,0\norient=XtoO"), GridError::Kind::NotAPermutation);
    EXPECT_EQ(parse_error("n=3\nX=0,1,2\nO=0,2,1\norient=XtoO"), GridError::Kind::VertexCollision);
    // two components
    EXPECT_EQ(parse_error("n=4\nX=0,1,2,3\nO=1,0,3,2\norient=XtoO"), GridError::Kind::NotAKnot);
    EXPECT_EQ(parse_error("n=3\nX=1,2,0\nO=0,1,2"), GridError::Kind::Syntax);
    EXPECT_EQ(parse_error("n=3\nX=1,2,0\nO=0,1,2\norient=up"), GridError::Kind::Syntax);
    EXPECT_EQ(parse_error("n=3\nO=1,2,0\nX=0,1,2\norient=XtoO"), GridError::Kind::Syntax);
    EXPECT_EQ(parse_error("n=3\nX=1,2,x\nO=0,1,2\norient=XtoO"), GridError::Kind::Syntax);
}

TEST(Grid, CanonicalFormIgnoresTranslation) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        auto d = testkit::random_diagram(rng, 2, 8);
        const int dc = static_cast<int>(rng() % 11), dr = static_cast<int>(rng() % 13);
        EXPECT_TRUE(equivalent(d, d.shifted(dc, dr)));
        EXPECT_EQ(canonical_form(canonical_form(d)), canonical_form(d));
        EXPECT_EQ(from_key(canonical_key(d)), canonical_form(d));
    }
}

TEST(Grid, CanonicalFormSeparatesDiagrams) {
    // the 5 x 5 trefoil and its vertical reflection are different diagrams
    auto d = OrientedGridDiagram::validate(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4});
    EXPECT_FALSE(equivalent(d, reflect_vertical(d)));
    EXPECT_TRUE(equivalent(minimal_unknot(), reflect_vertical(minimal_unknot())));
}

TEST(Grid, SymmetriesAreInvolutions) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        auto d = testkit::random_diagram(rng, 2, 8);
        EXPECT_EQ(reflect_vertical(reflect_vertical(d)), d);
        EXPECT_EQ(rotate_pi(rotate_pi(d)), d);
        EXPECT_EQ(reverse(reverse(d)), d);
        EXPECT_EQ(flip_rows(flip_rows(d)), d);
    }
}

TEST(Grid, NormalizedSwapsRoles) {
    auto d = OrientedGridDiagram::validate(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}, Direction::OtoX);
    auto n = d.normalized();
    EXPECT_EQ(n.direction(), Direction::XtoO);
    EXPECT_EQ(std::vector<int>(n.base().x().begin(), n.base().x().end()), (std::vector<int>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(equivalent(d, n));
}

TEST(Grid, ConnectedSumIsAKnot) {
    auto a = GridDiagram::validate(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4});
    auto b = GridDiagram::validate(2, {1, 0}, {0, 1});
    auto s = connected_sum(a, b);
    EXPECT_EQ(s.size(), 7);
    EXPECT_EQ(s.components(), 1);
}

TEST(Grid, CompassHelpers) {
    for (auto c : kAllCompass)
        EXPECT_EQ(diagonal(diagonal(c)), c);
    EXPECT_EQ(diagonal(Compass::NE), Compass::SW);
    EXPECT_EQ(diagonal(Compass::NW), Compass::SE);
}
