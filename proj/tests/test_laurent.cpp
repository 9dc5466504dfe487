#include <legendrid/laurent.hpp>

#include <gtest/gtest.h>

#include <limits>

using legendrid::LaurentPolynomial;

namespace {

LaurentPolynomial T(int e, std::int64_t c = 1) { return LaurentPolynomial::monomial(c, e); }

} // namespace

TEST(Laurent, ZeroAndConstants) {
    LaurentPolynomial z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.to_string(), "0");
    EXPECT_EQ(LaurentPolynomial(0), z);
    EXPECT_EQ(LaurentPolynomial(3).to_string(), "3");
    EXPECT_EQ(T(-2, 0), z);
}

TEST(Laurent, Printing) {
    EXPECT_EQ((T(1) - 1 + T(-1)).to_string(), "t - 1 + t^-1");
    EXPECT_EQ((-T(2) + T(1, 5) - 7).to_string(), "-t^2 + 5t - 7");
}

TEST(Laurent, Arithmetic) {
    auto a = T(1) - 1 + T(-1);
    auto b = -T(1) + 3 - T(-1);
    // trefoil times figure eight
    EXPECT_EQ(a * b, -T(2) + T(1, 4) - 5 + T(-1, 4) - T(-2));
    EXPECT_EQ(a - a, LaurentPolynomial{});
    EXPECT_EQ((a * b).eval(1), 1);
    EXPECT_EQ(a.span(), 2);
    EXPECT_EQ(a.low(), -1);
    EXPECT_EQ(a.high(), 1);
}

TEST(Laurent, ExactDivisionAndGcd) {
    auto a = T(1) - 1 + T(-1);
    auto b = T(1, 2) - 3 + T(-1, 2);
    auto c = T(3) + 1;
    EXPECT_EQ(divexact(a * b, a), b);
    auto g = gcd(a * c, b * c);
    // gcd is defined up to units
    EXPECT_EQ(legendrid::normalize_alexander(g), legendrid::normalize_alexander(c));
    EXPECT_EQ(gcd(a, b).span(), 0);
}

TEST(Laurent, NormalizeUpToUnits) {
    auto delta = -T(2) + T(1, 5) - 7 + T(-1, 5) - T(-2);
    EXPECT_EQ(legendrid::normalize_alexander(delta.shifted(3)), delta);
    EXPECT_EQ(legendrid::normalize_alexander(-delta.shifted(-4)), delta);
    EXPECT_TRUE(legendrid::is_symmetric(delta));
    EXPECT_FALSE(legendrid::is_symmetric(T(1) + 1));
}

TEST(Laurent, OverflowIsReported) {
    LaurentPolynomial big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
    EXPECT_THROW(big * LaurentPolynomial(4), std::overflow_error);
    EXPECT_THROW(big + big, std::overflow_error);
}
