#include <sbcoinv/poly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace sbcoinv;

namespace {

Poly random_poly(int n, int maxdeg, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
    Poly p(n);
    for (int t = 0; t < terms; ++t) {
        Mono m(n);
        int budget = maxdeg;
        for (int i = 0; i < n && budget > 0; ++i) {
            int a = std::uniform_int_distribution<int>(0, budget)(rng);
            m.e[i] = static_cast<std::uint8_t>(a);
            budget -= a;
        }
        p.add_term(m, make_rational(c(rng), 1 + std::abs(c(rng))));
    }
    return p;
}

SubsetJ random_subset(int n, std::mt19937_64& rng) {
    return SubsetJ::from_mask(n, std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng));
}

}  // namespace

TEST(Poly, PartialExamples) {
    const int n = 4;
    EXPECT_EQ(parse_poly("x1^2", 1).partial(1), parse_poly("2*x1", 1));
    EXPECT_TRUE(parse_poly("x1", 2).partial(2).is_zero());
    EXPECT_EQ(parse_poly("x2^2*x4^4", n).partial(4), parse_poly("4*x2^2*x4^3", n));
    EXPECT_EQ(parse_poly("x1^5", 1).partial(1, 3), parse_poly("60*x1^2", 1));
}

TEST(Poly, RankMismatchRejected) {
    EXPECT_THROW(Poly::var(2, 1) + Poly::var(3, 1), std::invalid_argument);
    EXPECT_THROW(Poly::var(2, 1) * Poly::var(3, 1), std::invalid_argument);
}

TEST(Poly, PrintAndParse) {
    Poly p = parse_poly("2*x2*x4^2 + 4*x2^3 + 2*x2*x3^2", 4);
    EXPECT_EQ(p.to_string(), "4*x2^3 + 2*x2*x3^2 + 2*x2*x4^2");
    EXPECT_EQ(parse_poly("  -  x1 *x2 +1/2 ", 2).to_string(), "1/2 - x1*x2");
    EXPECT_EQ(Poly(3).to_string(), "0");
    EXPECT_EQ(parse_poly("0", 3), Poly(3));
    EXPECT_THROW(parse_poly("x4", 3), std::invalid_argument);
    EXPECT_THROW(parse_poly("x1 x2", 3), std::invalid_argument);
    EXPECT_THROW(parse_poly("x1^", 3), std::invalid_argument);
    EXPECT_THROW(parse_poly("t1", 3), std::invalid_argument);
}

TEST(Poly, RoundTripRandom) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + t % 5;
        Poly p = random_poly(n, 6, 6, rng);
        EXPECT_EQ(parse_poly(p.to_string(), n), p);
    }
}

TEST(Poly, RingAxioms) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + t % 5;
        Poly a = random_poly(n, 6, 5, rng), b = random_poly(n, 6, 5, rng), c = random_poly(n, 6, 5, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Poly, HomogeneityAndDegree) {
    Poly p = parse_poly("x1^2 + x1*x2", 2);
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.degree(), 2);
    EXPECT_FALSE(parse_poly("x1^2 + x2", 2).is_homogeneous());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        Poly q(3);
        for (const Mono& m : monomials_of_degree(3, 4)) q.add_term(m, std::uniform_int_distribution<int>(-2, 2)(rng));
        for (int i = 1; i <= 3; ++i) {
            Poly d = q.partial(i);
            EXPECT_TRUE(d.is_zero() || (d.is_homogeneous() && d.degree() == 3));
        }
    }
}

TEST(Poly, DivideExact) {
    Poly a = parse_poly("x1^2 - x2^2", 2);
    Poly b = parse_poly("x1 + x2", 2);
    auto q = a.divide_exact(b);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, parse_poly("x1 - x2", 2));
    EXPECT_FALSE(parse_poly("x1^2 + x2^2", 2).divide_exact(b));
    EXPECT_TRUE(Poly(2).divide_exact(b));
}

TEST(Poly, Substitute) {
    Poly p = parse_poly("x1^2*x2 + x1", 2);
    EXPECT_EQ(p.substitute(1, 2, -1), parse_poly("x2^3 - x2", 2));
    EXPECT_EQ(p.substitute(1, 0, 1), Poly(2));
}

TEST(Monomials, CountAndOrder) {
    auto ms = monomials_of_degree(3, 4);
    EXPECT_EQ(ms.size(), 15u);
    for (std::size_t t = 1; t < ms.size(); ++t) EXPECT_TRUE(ms[t - 1] < ms[t]);
    // x_1 < x_2 < x_3: the last variable dominates.
    EXPECT_TRUE(Mono(3, {4, 0, 0}) < Mono(3, {0, 0, 1}));
}

TEST(HComplete, Examples) {
    EXPECT_EQ(h_complete(0, SubsetJ(3, {1, 2})), Poly::constant(3, 1));
    EXPECT_EQ(h_complete(0, SubsetJ(3, {})), Poly::constant(3, 1));
    EXPECT_TRUE(h_complete(-2, SubsetJ(3, {1, 2})).is_zero());
    EXPECT_EQ(h_complete(1, SubsetJ(3, {2, 3})), parse_poly("x2 + x3", 3));
    EXPECT_EQ(h_complete(2, SubsetJ(2, {1, 2})), parse_poly("x1^2 + x1*x2 + x2^2", 2));
}

TEST(H2, Examples) {
    EXPECT_EQ(h2(2, SubsetJ(4, {2, 3, 4})), parse_poly("x2^4 + x3^4 + x4^4 + x2^2*x3^2 + x3^2*x4^2 + x2^2*x4^2", 4));
    EXPECT_EQ(h2(1, SubsetJ(4, {1, 2, 3, 4})), parse_poly("x1^2 + x2^2 + x3^2 + x4^2", 4));
    EXPECT_EQ(h2(0, SubsetJ(4, {})), Poly::constant(4, 1));
    EXPECT_TRUE(h2(-1, SubsetJ(4, {1})).is_zero());
}

TEST(H2, CountsMonomials) {
    // h_r in k variables has C(r + k - 1, k - 1) terms.
    EXPECT_EQ(h2(3, SubsetJ(5, {1, 3, 5})).size(), 10u);
    EXPECT_EQ(h2(4, SubsetJ(5, {1, 2, 3, 4, 5})).size(), 70u);
}

TEST(PowerSum, Examples) {
    EXPECT_EQ(power_sum(2, 1), parse_poly("x1^2", 1));
    EXPECT_EQ(power_sum(2, 2), parse_poly("x1^2 + x2^2", 2));
    EXPECT_EQ(power_sum(4, 2), parse_poly("x1^4 + x2^4", 2));
    EXPECT_THROW(power_sum(0, 2), std::invalid_argument);
}

TEST(H2, DerivativeIdentity) {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 80; ++t) {
        int n = 2 + t % 4;
        SubsetJ S = random_subset(n, rng);
        if (S.empty() || S.size() == static_cast<std::size_t>(n)) continue;
        auto inside = S.elems();
        auto outside = S.complement().elems();
        int a = inside[rng() % inside.size()];
        int b = outside[rng() % outside.size()];
        int r = 2 + static_cast<int>(rng() % 3);
        SubsetJ Sb = S.with(b);
        Poly lhs = h2(r, S).partial(a);
        Poly rhs = (Poly::var(n, a).pow(2) - Poly::var(n, b).pow(2)) * h2(r - 1, Sb).partial(a) +
                   Poly::constant(n, 2) * Poly::var(n, a) * h2(r - 1, Sb);
        EXPECT_EQ(lhs, rhs) << S.to_string() << " a=" << a << " b=" << b << " r=" << r;
        ++checked;
    }
    EXPECT_GT(checked, 40);
}

TEST(HComplete, ExchangeIdentity) {
    std::mt19937_64 rng(9);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 80; ++t) {
        int n = 2 + t % 4;
        SubsetJ S = random_subset(n, rng);
        if (S.empty() || S.size() == static_cast<std::size_t>(n)) continue;
        auto inside = S.elems();
        auto outside = S.complement().elems();
        int a = inside[rng() % inside.size()];
        int b = outside[rng() % outside.size()];
        int r = 1 + static_cast<int>(rng() % 4);
        SubsetJ Sb = S.with(b);
        Poly lhs = h_complete(r, S) + Poly::var(n, b) * h_complete(r - 1, Sb);
        Poly rhs = h_complete(r, Sb.without(a)) + Poly::var(n, a) * h_complete(r - 1, Sb);
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(lhs, h_complete(r, Sb));
        ++checked;
    }
    EXPECT_GT(checked, 40);
}

TEST(Odot, Examples) {
    EXPECT_EQ(odot(parse_poly("x1", 1), parse_poly("x1^2", 1)), parse_poly("2*x1", 1));
    EXPECT_EQ(odot(parse_poly("x1*x2", 2), parse_poly("x1^2*x2^3", 2)), parse_poly("6*x1*x2^2", 2));
    EXPECT_TRUE(odot(parse_poly("x2", 2), parse_poly("x1^3", 2)).is_zero());
}

TEST(Odot, DiagonalPairing) {
    for (int d = 0; d <= 4; ++d) {
        auto ms = monomials_of_degree(3, d);
        for (const auto& a : ms)
            for (const auto& b : ms) {
                Poly r = odot(Poly::monomial(a), Poly::monomial(b));
                EXPECT_EQ(!r.is_zero(), a == b);
            }
    }
}

TEST(PolyDet, SmallCases) {
    const int n = 2;
    std::vector<std::vector<Poly>> m{{Poly::var(n, 1), Poly::var(n, 2)}, {Poly::var(n, 2), Poly::var(n, 1)}};
    EXPECT_EQ(poly_det(m, n), parse_poly("x1^2 - x2^2", n));
    EXPECT_EQ(poly_det({}, n), Poly::constant(n, 1));
    EXPECT_EQ(sign_relation(Poly::var(n, 1), -Poly::var(n, 1)), -1);
    EXPECT_EQ(sign_relation(Poly::var(n, 1), Poly::var(n, 2)), 0);
}
