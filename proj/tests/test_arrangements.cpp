#include <sbcoinv/arrangements.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace sbcoinv;

namespace {

Poly P(const char* text, int n) { return parse_poly(text, n); }

QPoly exponent_series(const std::vector<int>& exps) {
    QPoly out{1};
    for (int e : exps) out *= q_int(e + 1);
    return out;
}

}  // namespace

TEST(LinearForm, Canonical) {
    EXPECT_EQ(LinearForm::minus(3, 1), LinearForm::minus(1, 3));
    EXPECT_EQ(LinearForm::plus(2, 1).to_poly(2), P("x1 + x2", 2));
    EXPECT_EQ(LinearForm::minus(1, 2).to_poly(2), P("x1 - x2", 2));
    EXPECT_EQ(LinearForm::coord(2).to_poly(3), P("x2", 3));
    EXPECT_THROW(LinearForm::minus(2, 2), std::invalid_argument);
}

TEST(Arrangement, RootArrangementSizes) {
    EXPECT_EQ(b_phi_plus(1).size(), 1u);
    EXPECT_TRUE(b_phi_plus(1).contains(LinearForm::coord(1)));
    EXPECT_EQ(b_phi_plus(2).size(), 4u);
    EXPECT_EQ(b_phi_plus(3).size(), 9u);
    EXPECT_EQ(b_phi_plus(3).defining_poly(), delta_b(3));
}

TEST(Arrangement, SubarrangementExamples) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(b_j(SubsetJ(n, {})).forms(), b_phi_plus(n).forms());
    Arrangement a = b_j(SubsetJ(2, {1}));
    EXPECT_EQ(a.size(), 1u);
    EXPECT_TRUE(a.contains(LinearForm::coord(2)));
    for (int n = 1; n <= 4; ++n)
        for (const auto& J : all_subsets(n)) EXPECT_EQ(b_tilde_j(J).size() - b_j(J).size(), J.size());
}

TEST(Arrangement, SizeInvariants) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& J : all_subsets(n)) {
            auto st = staircase(J);
            EXPECT_EQ(static_cast<int>(b_j(J).size()), std::accumulate(st.begin(), st.end(), 0));
            int bs = 0;
            for (int i = 1; i <= n; ++i) bs += b_exponent(J, i);
            EXPECT_EQ(static_cast<int>(b_tilde_j(J).size()), bs);
        }
}

TEST(InDer, Examples) {
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(in_der(Derivation::euler(n), b_phi_plus(n)));
    std::vector<Poly> d1{Poly::constant(1, 1)};
    Arrangement x1(1);
    x1.add(LinearForm::coord(1));
    EXPECT_FALSE(in_der(Derivation(d1), x1));
}

TEST(Derivation, Examples) {
    EXPECT_EQ(rho_j(SubsetJ(1, {}), 1).coeffs(), Derivation::euler(1).coeffs());
    EXPECT_EQ(mu_j(SubsetJ(1, {}), 1).coeffs(), Derivation::euler(1).coeffs());
    Derivation r = rho_j(SubsetJ(2, {2}), 2);
    EXPECT_TRUE(r.coeff(1).is_zero());
    EXPECT_EQ(r.coeff(2), P("x1^2 - x2^2", 2));
    EXPECT_EQ(Derivation(std::vector<Poly>{P("x1", 2), P("x2^2", 2)}).degree(), -1);
    EXPECT_EQ(Derivation::euler(3).apply(P("x1^2*x3", 3)), P("3*x1^2*x3", 3));
}

TEST(Derivation, Degrees) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& J : all_subsets(n)) {
            auto st = staircase(J);
            for (int i = 1; i <= n; ++i) {
                EXPECT_EQ(rho_j(J, i).degree(), st[i - 1]);
                EXPECT_EQ(mu_j(J, i).degree(), b_exponent(J, i));
                if (!J.contains(i)) EXPECT_EQ(mu_j(J, i).coeffs(), rho_j(J, i).coeffs());
            }
        }
}

TEST(Saito, RootArrangement) {
    for (int n = 1; n <= 4; ++n) {
        Verdict v = saito_check(rho_basis(SubsetJ(n, {})), b_phi_plus(n));
        EXPECT_TRUE(v.ok) << v.witness;
    }
}

TEST(Saito, AllSubarrangements) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& J : all_subsets(n)) {
            Verdict a = saito_check(rho_basis(J), b_j(J));
            EXPECT_TRUE(a.ok) << J.to_string() << ": " << a.witness;
            Verdict b = saito_check(mu_basis(J), b_tilde_j(J));
            EXPECT_TRUE(b.ok) << J.to_string() << ": " << b.witness;
        }
}

TEST(Saito, RejectsWrongCandidates) {
    EXPECT_FALSE(saito_check({Derivation::euler(2)}, b_phi_plus(2)).ok);
    SubsetJ J(3, {2});
    EXPECT_FALSE(saito_check(mu_basis(J), b_j(J)).ok);
    std::vector<Derivation> bad = rho_basis(SubsetJ(2, {}));
    bad[1] = Derivation(std::vector<Poly>{P("x1^3 + x1*x2^2", 2), P("x1^2*x2 + x2^3", 2)});
    EXPECT_FALSE(saito_check(bad, b_phi_plus(2)).ok);
}

TEST(SolomonTerao, EulerImage) {
    EXPECT_EQ(st_image(Derivation::euler(3)), P("x1^2 + x2^2 + x3^2", 3));
    IdealSpec st = st_ideal(rho_basis(SubsetJ(2, {})));
    ASSERT_EQ(st.generators.size(), 2u);
}

TEST(SolomonTerao, FreeArrangementSeries) {
    // A free arrangement with exponents e has ST series prod [e_i + 1]_q.
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> exps;
        for (int i = 1; i <= n; ++i) exps.push_back(2 * i - 1);
        EXPECT_EQ(st_hilbert(b_phi_plus(n), n * n + 2), exponent_series(exps));
        for (const auto& J : all_subsets(n)) EXPECT_EQ(st_hilbert(b_j(J), n * n + 2), staircase_product(J)) << J.to_string();
    }
}

TEST(SolomonTerao, DerPieceIsTangent) {
    Arrangement a = b_j(SubsetJ(3, {2}));
    for (int e = 0; e <= 3; ++e)
        for (const auto& d : der_piece(a, e)) EXPECT_TRUE(in_der(d, a));
}

TEST(SolomonTerao, RootIdealIsPolynomialCoinvariantIdeal) {
    for (int n = 1; n <= 3; ++n) {
        IdealSpec st = st_ideal(rho_basis(SubsetJ(n, {})));
        IdealSpec ib = ib_generators(n);
        for (int d = 0; d <= n * n + 2; ++d) {
            GradedMatrix both = ideal_piece(ib, d, 0);
            const GradedMatrix mine = ideal_piece(st, d, 0);
            int r = rank(both);
            for (const auto& row : mine.rows()) both.add_row(row);
            EXPECT_EQ(rank(mine), r);
            EXPECT_EQ(rank(both), r);
        }
    }
}

TEST(BasisSets, Examples) {
    SubsetJ J(4, {2, 4});
    auto s = s_set(J, 3);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0], Poly::constant(4, 1));
    EXPECT_EQ(s[1], P("x3", 4));
    EXPECT_EQ(s[2], P("x1*x3 + x3^2", 4));
    EXPECT_EQ(s[3], P("x1^2*x3 - x3^3", 4));
    auto t = t_set(SubsetJ(3, {}), 1);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(s_set(SubsetJ(3, {}), 1).size(), 2u);
}

TEST(BasisSets, SizesMatchStaircase) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& J : all_subsets(n)) {
            auto st = staircase(J);
            for (int i = 1; i <= n; ++i) {
                if (J.contains(i)) EXPECT_EQ(static_cast<int>(t_set(J, i).size()), st[i - 1] + 1);
                else EXPECT_EQ(static_cast<int>(s_set(J, i).size()), st[i - 1] + 1);
            }
        }
}

TEST(MBasis, Examples) {
    auto m1 = m_basis(1);
    ASSERT_EQ(m1.size(), 3u);
    EXPECT_EQ(m1[0], parse_super("1", 1));
    EXPECT_EQ(m1[1], parse_super("x1", 1));
    EXPECT_EQ(m1[2], parse_super("t1", 1));
    EXPECT_EQ(m_basis(2).size(), 17u);
}

TEST(MBasis, CensusMatchesClosedForm) {
    for (int n = 1; n <= 4; ++n) EXPECT_FALSE(first_difference(census(m_basis(n)), closed_hilbert(n))) << n;
}

TEST(MBasis, IsBasisUpToThree) {
    for (int n = 1; n <= 3; ++n) {
        Verdict v = verify_m_basis(n);
        EXPECT_TRUE(v.ok) << n << ": " << v.witness;
    }
}

TEST(MJ, ColonBasisExamples) {
    EXPECT_EQ(m_j(SubsetJ(2, {})).size(), 8u);
    auto full = m_j(SubsetJ(3, {1, 2, 3}));
    ASSERT_EQ(full.size(), 1u);
    EXPECT_EQ(full[0], Poly::constant(3, 1));
}

TEST(MJ, ColonBasisSweep) {
    for (int n = 1; n <= 3; ++n) {
        MembershipOracle ib(ib_generators(n));
        for (const auto& J : all_subsets(n)) {
            Verdict a = verify_mj_colon_basis(J, ib);
            EXPECT_TRUE(a.ok) << a.witness;
            Verdict b = verify_injection(J);
            EXPECT_TRUE(b.ok) << b.witness;
            Verdict c = verify_st_colon(J, ib);
            EXPECT_TRUE(c.ok) << c.witness;
        }
    }
}

TEST(DeletionRestriction, Examples) {
    EXPECT_EQ(drop_last(SubsetJ(3, {1, 3})), SubsetJ(2, {1}));
    auto seq = deletion_sequence(SubsetJ(3, {2}));
    ASSERT_EQ(seq.size(), 3u);
    EXPECT_EQ(seq[0], LinearForm::coord(3));
}

TEST(DeletionRestriction, SweepUpToThree) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& J : all_subsets(n)) {
            Verdict v = verify_deletion_restriction(J);
            EXPECT_TRUE(v.ok) << v.witness;
        }
}

TEST(LeadingMonomials, Report) {
    auto r1 = leading_monomial_report(1);
    EXPECT_TRUE(r1.matches);
    EXPECT_EQ(r1.entries.size(), 3u);
    for (int n = 2; n <= 3; ++n) EXPECT_EQ(leading_monomial_report(n).entries.size(), static_cast<std::size_t>(staircase_count(n)));
}
