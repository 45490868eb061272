#pragma once

#include <cstdint>
#include <vector>

#include "qtrin/fermionic.hpp"
#include "qtrin/qpoly.hpp"

namespace qtrin {

/// One alternating family sign * q^{e(j)} 𝒯(L, M, a(j), b(j)) with
/// e(j) = e2 j^2 + e1 j + e0, a(j) = a1 j + a0, b(j) = b1 j + b0 (b1 > 0).
struct ThetaTerm {
    int sign = 1;
    Rational e2, e1, e0;
    std::int64_t a1 = 0, a0 = 0;
    std::int64_t b1 = 1, b0 = 0;
};

/// The theta terms of conjecture 1..3 (which) or of a k-series family.
std::vector<ThetaTerm> conj_theta_terms(int which);
std::vector<ThetaTerm> kseries_theta_terms(KFamily family, std::int64_t k);

/// sum_j sum_terms; j covers exactly the values with |b(j)| <= M, widened by
/// `widen` on both sides.
QPoly theta_sum(const std::vector<ThetaTerm>& terms, std::int64_t L, std::int64_t M,
                std::int64_t widen = 0);

QPoly conj_lhs(int which, std::int64_t L, std::int64_t M, std::int64_t widen = 0);
QPoly kseries_lhs(const KSeriesArgs& args, std::int64_t widen = 0);

/// sum_{i=|b|}^{min(L-|a|, M)} q^{i^2/2} [L+M-i, L] 𝒯(L-i, i, a, b) == q^{b^2/2} 𝒯(L, M, a+b, b).
/// Throws PreconditionViolation when a and b have strictly opposite signs.
bool theorem1_check(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b);
QPoly theorem1_lhs(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b);
QPoly theorem1_rhs(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b);

/// (q)_inf c_sigma = sum_{n = sigma mod 2} q^{n^2/2}/(q)_n, which is also chi^{(3,4)}_{sigma+1,1}.
QSeries string_function_numerator(int sigma, const QExponent& order);

/// Level-1 string function c_sigma, the large-L limit of T(L, a) with
/// L + a + sigma even, through its three representations.
QSeries string_function_sum(int sigma, const QExponent& order);
QSeries string_function_pochhammer(int sigma, const QExponent& order);
QSeries string_function_product(int sigma, const QExponent& order);
/// Returns the n-sum form; throws RepresentationMismatch unless all three agree.
QSeries string_function(int sigma, const QExponent& order);

struct CharParams {
    std::int64_t p = 0, pp = 0, r = 0, s = 0;
};

/// chi^{(p,p')}_{r,s}. Labels with p > p' are read as the swapped
/// (p', p, s, r), under which the defining sum is invariant.
/// Throws InvalidCharLabel on invalid labels.
QSeries virasoro_char(const CharParams& c, const QExponent& order, std::int64_t widen = 0);

struct BranchParams {
    std::int64_t p = 0, pp = 0, r = 0, s = 0;
    int sigma = 0;
};

enum class ThetaExponents { kHalved, kLiteral };

/// B^{(p,p')}_{r,s;sigma}. The theta exponents are j(pp'j + p'r - ps)/2 and
/// (pj + r)(p'j + s)/2, each multiplied by (q)_inf c_j rather than c_j;
/// kLiteral drops the halving and exists only to show that form is
/// inconsistent. The string-function index is taken mod 2.
/// Throws InvalidBranchLabel on invalid labels.
QSeries branching_function(const BranchParams& b, const QExponent& order,
                           ThetaExponents form = ThetaExponents::kHalved);

/// sum_i q^{i^2/2} T(i, b)/(q)_i against q^{b^2/2}/(q)_inf.
QSeries abp_lhs(std::int64_t b, const QExponent& order);
QSeries abp_rhs(std::int64_t b, const QExponent& order);
bool abp_series_check(std::int64_t b, const QExponent& order);

/// sum_i q^{i^2/2} [L, i] T(i, b) against q^{b^2/2} [2L, L-b].
QPoly con_lhs(std::int64_t L, std::int64_t b);
QPoly con_rhs(std::int64_t L, std::int64_t b);
bool con_identity_check(std::int64_t L, std::int64_t b);

/// 1/((q^3,q^4,q^5;q^8)_inf (q^2,q^14;q^16)_inf).
QSeries e8_product(const QExponent& order);

/// The two closed forms of B^{(4,6)}_{1,1;sigma}: for sigma = 0 the theta
/// series, for sigma = 1 both the theta series and the product (checked equal).
QSeries b46_simplified(int sigma, const QExponent& order);
QSeries b46_simplified_product(const QExponent& order);

/// Bosonic sides of the F-sum families and X-series.
QSeries fsum_family_rhs(int family, std::int64_t k, int sigma, const QExponent& order);
QSeries x_series_rhs(int family, std::int64_t k, const QExponent& order);

}  // namespace qtrin
