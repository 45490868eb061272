#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qtrin/errors.hpp"
#include "qtrin/qcomb.hpp"

using oracle::from_qpoly;

TEST(QBinomial, MatchesPascalRecurrence) {
    for (std::int64_t n = 0; n <= 14; ++n) {
        for (std::int64_t k = -1; k <= n + 1; ++k) {
            EXPECT_EQ(from_qpoly(qtrin::qbinomial(n, k)), oracle::gauss(n, k)) << n << "," << k;
        }
    }
}

TEST(QBinomial, ValueAtOneIsBinomial) {
    std::int64_t row[32] = {1};
    for (std::int64_t n = 0; n <= 30; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            EXPECT_EQ(qtrin::qbinomial(n, k).eval_at_one(), qtrin::Integer(row[k]));
        }
        for (std::int64_t k = n + 1; k > 0; --k) row[k] += row[k - 1];
    }
}

TEST(QBinomial, LargeArgumentsStayExact) {
    // central coefficient of [60,30] at q=1 is C(60,30)
    EXPECT_EQ(qtrin::qbinomial(60, 30).eval_at_one().to_string(), "118264581564861424");
    EXPECT_EQ(qtrin::qbinomial(80, 40).eval_at_one().to_string(), "107507208733336176461620");
}

TEST(QBinomial, VectorFormIsProduct) {
    const std::vector<std::int64_t> m{1, 2, 0}, n{2, 1, 3};
    EXPECT_EQ(qtrin::qbinomial_vector(m, n), qtrin::qbinomial(3, 2) * qtrin::qbinomial(3, 1));
    const std::vector<std::int64_t> shorter{1};
    EXPECT_THROW(qtrin::qbinomial_vector(m, shorter), qtrin::DimensionMismatch);
}

TEST(QTrinomial, WorkedExample) {
    EXPECT_EQ(qtrin::qtrinomial_T(4, 2).to_string(), "1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6");
}

TEST(QTrinomial, MatchesOracleAndTrinomialNumbers) {
    for (std::int64_t L = 0; L <= 10; ++L) {
        for (std::int64_t a = -L - 1; a <= L + 1; ++a) {
            const auto T = qtrin::qtrinomial_T(L, a, qtrin::CrossCheck::kOn);
            const auto t2 = qtrin::qtrinomial2(L, a);
            EXPECT_EQ(from_qpoly(T), oracle::trinomial_T(L, a)) << L << "," << a;
            EXPECT_EQ(from_qpoly(t2), oracle::trinomial2(L, a)) << L << "," << a;
            const qtrin::Integer count(oracle::trinomial_number(L, a));
            EXPECT_EQ(T.eval_at_one(), count);
            EXPECT_EQ(t2.eval_at_one(), count);
            EXPECT_EQ(T, qtrin::qtrinomial_T(L, -a));
        }
    }
}

TEST(QTrinomial, NegativeLengthThrows) {
    EXPECT_THROW(qtrin::qtrinomial_T(-1, 0), qtrin::PreconditionViolation);
    EXPECT_THROW(qtrin::qtrinomial2(-1, 0), qtrin::PreconditionViolation);
}

TEST(RefinedT, MatchesOracle) {
    for (std::int64_t L = 0; L <= 6; ++L) {
        for (std::int64_t M = 0; M <= 5; ++M) {
            for (std::int64_t a = -L; a <= L; ++a) {
                for (std::int64_t b = -M; b <= M; ++b) {
                    EXPECT_EQ(from_qpoly(qtrin::refined_T(L, M, a, b)), oracle::refined_T(L, M, a, b))
                        << L << "," << M << "," << a << "," << b;
                }
            }
        }
    }
}

TEST(RefinedT, DualitySymmetryAndVanishing) {
    for (std::int64_t L = 0; L <= 6; ++L) {
        for (std::int64_t M = 0; M <= 6; ++M) {
            for (std::int64_t a = -L - 2; a <= L + 2; ++a) {
                for (std::int64_t b = -M - 2; b <= M + 2; ++b) {
                    const auto t = qtrin::refined_T(L, M, a, b);
                    if (std::abs(a) > L || std::abs(b) > M) {
                        EXPECT_TRUE(t.is_zero());
                        continue;
                    }
                    EXPECT_TRUE(qtrin::refined_T_dual_check({L, M, a, b}));
                    EXPECT_EQ(t, qtrin::refined_T(L, M, -a, -b));
                    EXPECT_TRUE(t.all_coefficients_nonnegative());
                }
            }
        }
    }
}

TEST(RefinedT, LargeMApproachesTOverPochhammer) {
    // low coefficients of T(L,M,a,b) agree with T(L,a)/(q)_L once M is large
    const std::int64_t L = 4, a = 2, b = 1, M = 12;
    const auto lhs = qtrin::QSeries(qtrin::refined_T(L, M, a, b), M - L);
    const auto rhs = qtrin::qtrinomial_T(L, a) * qtrin::inverse_q_pochhammer(L, M - L);
    EXPECT_EQ(lhs, rhs);
}
