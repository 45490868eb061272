#include <gtest/gtest.h>

#include "brute_mn.hpp"
#include "oracle.hpp"
#include "reference_data.hpp"
#include "qtrin/errors.hpp"
#include "qtrin/fermionic.hpp"

using qtrin::AlgebraName;
using qtrin::CharFamily;

TEST(FPoly, E7AtMThreeMatchesExpansion) {
    EXPECT_EQ(oracle::from_qpoly(qtrin::f_poly({AlgebraName::E7, 3, 0})), reference::f_e7_3_0());
    EXPECT_EQ(oracle::from_qpoly(qtrin::f_poly({AlgebraName::E7, 3, 1})), reference::f_e7_3_1());
}

TEST(FPoly, ConstantTermIffSigmaZero) {
    for (auto g : {AlgebraName::A5, AlgebraName::D6, AlgebraName::E7}) {
        EXPECT_EQ(qtrin::f_poly({g, 0, 0}), qtrin::QPoly::constant(1));
        EXPECT_TRUE(qtrin::f_poly({g, 0, 1}).is_zero());
        for (std::int64_t M = 1; M <= 4; ++M) {
            for (int sigma = 0; sigma <= 1; ++sigma) {
                const auto f = qtrin::f_poly({g, M, sigma});
                EXPECT_TRUE(f.all_coefficients_nonnegative());
                EXPECT_EQ(f.coefficient(0), qtrin::Integer(sigma == 0 ? 1 : 0)) << qtrin::to_string(g) << M;
            }
        }
    }
}

TEST(FPoly, UnsupportedAlgebraThrows) {
    EXPECT_THROW(qtrin::f_poly({AlgebraName::E8, 1, 0}), qtrin::PreconditionViolation);
}

TEST(FermionicCharSum, E8MatchesIsingOracle) {
    // the E8 sum is the vacuum Ising character: distinct half-odd parts, even count
    const auto s = qtrin::fermionic_char_sum(CharFamily::kE8, 0, 14);
    EXPECT_EQ(oracle::from_qpoly(s.poly()), oracle::distinct_half_odd(14, 0));
}

TEST(FermionicCharSum, BoxDoublingChangesNothing) {
    for (auto f : {CharFamily::kE8, CharFamily::kE7, CharFamily::kE6, CharFamily::kD6B46, CharFamily::kA5B68}) {
        for (int sigma = 0; sigma <= 1; ++sigma) {
            EXPECT_EQ(qtrin::fermionic_char_sum(f, sigma, 7), qtrin::fermionic_char_sum(f, sigma, 7, 2))
                << qtrin::to_string(f) << sigma;
        }
    }
}

TEST(FermionicCharSum, CoefficientsArePositive) {
    for (auto f : {CharFamily::kE8, CharFamily::kE7, CharFamily::kE6, CharFamily::kD6B46, CharFamily::kA5B68}) {
        EXPECT_TRUE(qtrin::fermionic_char_sum(f, 0, 10).poly().all_coefficients_nonnegative());
    }
}

TEST(PrimedRestriction, ImpliedForE8AndE6) {
    for (std::int64_t N = 0; N <= 8; ++N) {
        for (const auto& s : brute::solve(qtrin::algebra("E8"), N, 1)) {
            EXPECT_TRUE(qtrin::primed_m_restriction(1, s.m, N)) << N;
        }
        for (const auto& s : brute::solve(qtrin::algebra("E6"), N, 6)) {
            EXPECT_TRUE(qtrin::primed_m_restriction(3, s.m, N)) << N;
        }
    }
}

TEST(PrimedRestriction, EquivalentToParityForE7) {
    for (std::int64_t N = 0; N <= 8; ++N) {
        for (const auto& s : brute::solve(qtrin::algebra("E7"), N, 6)) {
            EXPECT_EQ(qtrin::primed_m_restriction(2, s.m, N), (s.n[0] + s.n[2] + s.n[6]) % 2 == 0) << N;
        }
    }
}

TEST(KSeries, FamilyNamesRoundTrip) {
    for (auto f : {qtrin::KFamily::kFlower, qtrin::KFamily::kFlower2, qtrin::KFamily::kMonster}) {
        EXPECT_EQ(qtrin::parse_kfamily(qtrin::to_string(f)), f);
    }
    for (auto f : {CharFamily::kE8, CharFamily::kE7, CharFamily::kE6, CharFamily::kD6B46, CharFamily::kA5B68}) {
        EXPECT_EQ(qtrin::parse_char_family(qtrin::to_string(f)), f);
    }
    EXPECT_THROW(qtrin::parse_kfamily("tulip"), qtrin::PreconditionViolation);
}

TEST(KSeries, RhsIsPositive) {
    for (auto f : {qtrin::KFamily::kFlower, qtrin::KFamily::kFlower2, qtrin::KFamily::kMonster}) {
        for (std::int64_t L = 0; L <= 2; ++L) {
            EXPECT_TRUE(qtrin::kseries_rhs({f, 2, L, 2}).all_coefficients_nonnegative());
        }
    }
}

TEST(XSeries, NeedsKAtLeastTwo) {
    EXPECT_THROW(qtrin::x_series_lhs(1, 1, 5), qtrin::PreconditionViolation);
    EXPECT_THROW(qtrin::primed_m_restriction(4, {0}, 0), qtrin::PreconditionViolation);
}
