#include "qtrin/bosonic.hpp"

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <utility>

#include "qtrin/qcomb.hpp"

namespace qtrin {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

void require_sigma(int sigma) {
    if (sigma != 0 && sigma != 1) throw PreconditionViolation("sigma must be 0 or 1");
}

/// Every coefficient divided by 2; the division must be exact.
QPoly halve(const QPoly& p) {
    std::vector<std::pair<QExponent, Integer>> out;
    for (const auto& t : p.terms()) {
        mpz_class c = t.coeff.to_mpz();
        if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) {
            throw RepresentationMismatch("odd coefficient where an even one was expected");
        }
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
        out.emplace_back(t.exponent, Integer(c));
    }
    return QPoly::from_terms(out);
}

/// Largest j >= 1 (or smallest j <= -1 for dir = -1) such that some
/// exponent in `exps(j)` is below `bound`, given that both quadratics are
/// monotone away from j = 0. Returns 0 when no such j exists.
template <typename F>
std::int64_t window_edge(F&& exps, const Rational& bound, int dir) {
    std::int64_t last = 0;
    for (std::int64_t j = dir;; j += dir) {
        const auto [x, y] = exps(j);
        if (x >= bound && y >= bound) return last;
        last = j;
    }
}

QSeries inverse_q_inf(const QExponent& order) { return inverse_q_pochhammer(std::nullopt, order); }

}  // namespace

std::vector<ThetaTerm> kseries_theta_terms(KFamily family, std::int64_t k) {
    if (k < 0) throw PreconditionViolation("k-series need k >= 0");
    const std::int64_t d = family == KFamily::kFlower ? 5 : family == KFamily::kFlower2 ? 6 : 8;
    const std::int64_t A = d * k + d - 2;
    std::vector<ThetaTerm> t;
    // q^{j(dAj+2)/2} 𝒯(L,M,Aj,dj) - q^{(dj+1)(Aj+k+1)/2} 𝒯(L,M,Aj+k+1,dj+1)
    t.push_back({1, Rational(d * A, 2), Rational(1), Rational(0), A, 0, d, 0});
    t.push_back({-1, Rational(d * A, 2), Rational(d * (k + 1) + A, 2), Rational(k + 1, 2), A, k + 1, d, 1});
    if (family == KFamily::kMonster) {
        const Rational P(3 * (3 * k + 2), 2);
        t.push_back({1, Rational(4 * A), Rational(24 * k + 17), P, A, 3 * k + 2, 8, 3});
        t.push_back({-1, Rational(4 * A), Rational(8 * (k + 1) + 7 * A, 2), P + Rational(7 * (k + 1), 2), A,
                     4 * k + 3, 8, 4});
    }
    return t;
}

std::vector<ThetaTerm> conj_theta_terms(int which) {
    switch (which) {
        case 1: return kseries_theta_terms(KFamily::kFlower, 0);
        case 2: return kseries_theta_terms(KFamily::kFlower2, 0);
        case 3: return kseries_theta_terms(KFamily::kMonster, 0);
        default: throw PreconditionViolation("conjecture index must be 1, 2 or 3");
    }
}

QPoly theta_sum(const std::vector<ThetaTerm>& terms, std::int64_t L, std::int64_t M, std::int64_t widen) {
    if (L < 0 || M < 0) throw PreconditionViolation("theta sums need L, M >= 0");
    QPoly out;
    for (const auto& t : terms) {
        const std::int64_t lo = ceil_div(-M - t.b0, t.b1) - widen;
        const std::int64_t hi = floor_div(M - t.b0, t.b1) + widen;
        for (std::int64_t j = lo; j <= hi; ++j) {
            const QPoly r = refined_T(L, M, t.a1 * j + t.a0, t.b1 * j + t.b0);
            if (r.is_zero()) continue;
            const Rational jj(j);
            out.add_scaled(r, t.e2 * jj * jj + t.e1 * jj + t.e0, Integer(t.sign));
        }
    }
    return out;
}

QPoly conj_lhs(int which, std::int64_t L, std::int64_t M, std::int64_t widen) {
    return theta_sum(conj_theta_terms(which), L, M, widen);
}

QPoly kseries_lhs(const KSeriesArgs& args, std::int64_t widen) {
    if (args.k < 1) throw PreconditionViolation("k-series need k >= 1");
    return theta_sum(kseries_theta_terms(args.family, args.k), args.L, args.M, widen);
}

QPoly theorem1_lhs(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b) {
    QPoly out;
    const std::int64_t top = std::min(L - iabs(a), M);
    for (std::int64_t i = iabs(b); i <= top; ++i) {
        QPoly t = refined_T(L - i, i, a, b);
        if (t.is_zero()) continue;
        t *= qbinomial(L + M - i, L);
        out.add_scaled(t, Rational(i * i, 2));
    }
    return out;
}

QPoly theorem1_rhs(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b) {
    return refined_T(L, M, a + b, b).shifted(Rational(b * b, 2));
}

bool theorem1_check(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b) {
    if ((a > 0 && b < 0) || (a < 0 && b > 0)) {
        throw PreconditionViolation("the invariance summation needs a, b >= 0 or a, b <= 0");
    }
    if (L < 0 || M < 0) throw PreconditionViolation("the invariance summation needs L, M >= 0");
    return theorem1_lhs(L, M, a, b) == theorem1_rhs(L, M, a, b);
}

QSeries string_function_numerator(int sigma, const QExponent& order) {
    require_sigma(sigma);
    QPoly out;
    for (std::int64_t n = sigma; Rational(n * n, 2) < order; n += 2) {
        out += inverse_q_pochhammer(n, order - Rational(n * n, 2)).poly().shifted(Rational(n * n, 2));
    }
    return {std::move(out), order};
}

QSeries string_function_sum(int sigma, const QExponent& order) {
    return string_function_numerator(sigma, order) * inverse_q_inf(order);
}

QSeries string_function_pochhammer(int sigma, const QExponent& order) {
    require_sigma(sigma);
    const Rational half(1, 2);
    const QSeries plus = pochhammer(half, -1, Rational(1), std::nullopt, order);   // (-q^{1/2}; q)_inf
    const QSeries minus = pochhammer(half, 1, Rational(1), std::nullopt, order);   // (q^{1/2}; q)_inf
    const QSeries num = sigma == 0 ? plus + minus : plus - minus;
    return QSeries(halve(num.poly()), order) * inverse_q_inf(order);
}

QSeries string_function_product(int sigma, const QExponent& order) {
    require_sigma(sigma);
    const Rational lead(sigma, 2);
    const Rational o = order - lead;
    const auto inf = std::nullopt;
    QSeries den = pochhammer(Rational(1), 1, Rational(1), inf, o);
    den *= pochhammer(Rational(3 - 2 * sigma), 1, Rational(8), inf, o);
    den *= pochhammer(Rational(4), 1, Rational(8), inf, o);
    den *= pochhammer(Rational(5 + 2 * sigma), 1, Rational(8), inf, o);
    den *= pochhammer(Rational(2 + 4 * sigma), 1, Rational(16), inf, o);
    den *= pochhammer(Rational(14 - 4 * sigma), 1, Rational(16), inf, o);
    return series_inverse(den).shifted(lead);
}

QSeries string_function(int sigma, const QExponent& order) {
    QSeries a = string_function_sum(sigma, order);
    if (!(a == string_function_pochhammer(sigma, order)) || !(a == string_function_product(sigma, order))) {
        throw RepresentationMismatch("string function representations disagree for sigma=" +
                                     std::to_string(sigma));
    }
    return a;
}

QSeries virasoro_char(const CharParams& c0, const QExponent& order, std::int64_t widen) {
    CharParams c = c0;
    if (c.p > c.pp) {
        std::swap(c.p, c.pp);
        std::swap(c.r, c.s);
    }
    const auto [p, pp, r, s] = c;
    if (p < 2 || p >= pp || std::gcd(p, pp) != 1 || r < 1 || r > p - 1 || s < 1 || s > pp - 1) {
        throw InvalidCharLabel("invalid character label (" + std::to_string(c0.p) + "," + std::to_string(c0.pp) +
                               ")_{" + std::to_string(c0.r) + "," + std::to_string(c0.s) + "}");
    }
    const std::int64_t d = pp * r - p * s;
    const Rational pre(d * d - 1, 4 * p * pp);
    auto exps = [&](std::int64_t j) {
        return std::make_pair(pre + Rational(j * (p * pp * j + d)), pre + Rational((p * j + r) * (pp * j + s)));
    };
    const std::int64_t lo = window_edge(exps, order, -1) - widen;
    const std::int64_t hi = window_edge(exps, order, 1) + widen;
    QPoly theta;
    for (std::int64_t j = lo; j <= hi; ++j) {
        const auto [e1, e2] = exps(j);
        theta.add_scaled(QPoly::constant(1), e1);
        theta.add_scaled(QPoly::constant(1), e2, Integer(-1));
    }
    return QSeries(std::move(theta), order) * inverse_q_inf(order);
}

QSeries branching_function(const BranchParams& bp, const QExponent& order, ThetaExponents form) {
    const auto [p, pp, r, s, sigma] = bp;
    if (p < 2 || p >= pp || r < 1 || r > p - 1 || s < 1 || s > pp - 1 || (pp - p) % 2 != 0 ||
        (r - s) % 2 != 0 || std::gcd((pp - p) / 2, pp) != 1 || (sigma != 0 && sigma != 1)) {
        throw InvalidBranchLabel("invalid branching label (" + std::to_string(p) + "," + std::to_string(pp) +
                                 ")_{" + std::to_string(r) + "," + std::to_string(s) + ";" +
                                 std::to_string(sigma) + "}");
    }
    const std::int64_t d = pp * r - p * s;
    const Rational pre(d * d - 4, 8 * p * pp);
    const Rational scale = form == ThetaExponents::kHalved ? Rational(1, 2) : Rational(1);
    auto exps = [&](std::int64_t j) {
        return std::make_pair(pre + scale * Rational(j * (p * pp * j + d)),
                              pre + scale * Rational((p * j + r) * (pp * j + s)));
    };
    const std::int64_t lo = window_edge(exps, order, -1);
    const std::int64_t hi = window_edge(exps, order, 1);
    Rational min_e(0);
    for (std::int64_t j = lo; j <= hi; ++j) {
        const auto [e1, e2] = exps(j);
        min_e = std::min(min_e, std::min(e1, e2));
    }
    const Rational wide = order - min_e;
    const QSeries c[2] = {string_function_numerator(0, wide), string_function_numerator(1, wide)};
    auto index = [&](std::int64_t v) { return static_cast<std::size_t>(((v % 2) + 2) % 2); };
    QPoly theta;
    for (std::int64_t j = lo; j <= hi; ++j) {
        const auto [e1, e2] = exps(j);
        theta.add_scaled(c[index(p * j + (r - s) / 2 + sigma)].poly(), e1);
        theta.add_scaled(c[index(p * j + (r + s) / 2 + sigma)].poly(), e2, Integer(-1));
    }
    QSeries out = QSeries(theta.truncated(order), wide) * inverse_q_inf(wide);
    return out.truncated(order);
}

QSeries abp_lhs(std::int64_t b, const QExponent& order) {
    QPoly out;
    for (std::int64_t i = iabs(b); Rational(i * i, 2) < order; ++i) {
        const Rational e(i * i, 2);
        const QPoly t = qtrinomial_T(i, b).shifted(e).truncated(order);
        out += multiply_truncated(t, inverse_q_pochhammer(i, order).poly(), &order);
    }
    return {std::move(out), order};
}

QSeries abp_rhs(std::int64_t b, const QExponent& order) {
    const Rational e(b * b, 2);
    if (e >= order) return QSeries::zero(order);
    return inverse_q_inf(order - e).shifted(e);
}

bool abp_series_check(std::int64_t b, const QExponent& order) { return abp_lhs(b, order) == abp_rhs(b, order); }

QPoly con_lhs(std::int64_t L, std::int64_t b) {
    if (L < 0) throw PreconditionViolation("con identity needs L >= 0");
    QPoly out;
    for (std::int64_t i = 0; i <= L; ++i) {
        QPoly t = qtrinomial_T(i, b);
        if (t.is_zero()) continue;
        t *= qbinomial(L, i);
        out.add_scaled(t, Rational(i * i, 2));
    }
    return out;
}

QPoly con_rhs(std::int64_t L, std::int64_t b) {
    if (L < 0) throw PreconditionViolation("con identity needs L >= 0");
    return qbinomial(2 * L, L - b).shifted(Rational(b * b, 2));
}

bool con_identity_check(std::int64_t L, std::int64_t b) { return con_lhs(L, b) == con_rhs(L, b); }

QSeries e8_product(const QExponent& order) {
    const auto inf = std::nullopt;
    QSeries den = pochhammer(Rational(3), 1, Rational(8), inf, order);
    den *= pochhammer(Rational(4), 1, Rational(8), inf, order);
    den *= pochhammer(Rational(5), 1, Rational(8), inf, order);
    den *= pochhammer(Rational(2), 1, Rational(16), inf, order);
    den *= pochhammer(Rational(14), 1, Rational(16), inf, order);
    return series_inverse(den);
}

QSeries b46_simplified(int sigma, const QExponent& order) {
    require_sigma(sigma);
    QPoly theta;
    if (sigma == 0) {
        for (std::int64_t j = 0; Rational(j * j) < order; ++j) {
            theta.add_scaled(QPoly::constant(1), Rational(j * j), Integer(j % 2 == 0 ? 1 : -1));
        }
        for (std::int64_t j = 1; Rational(6 * j * j) < order; ++j) {
            theta.add_scaled(QPoly::constant(1), Rational(6 * j * j));
        }
        return QSeries(std::move(theta), order) * inverse_q_inf(order);
    }
    const Rational lead(3, 2);
    const Rational o = order - lead;
    for (std::int64_t j = 0; Rational(6 * j * (j + 1)) < o; ++j) {
        theta.add_scaled(QPoly::constant(1), Rational(6 * j * (j + 1)));
    }
    return (QSeries(std::move(theta), o) * inverse_q_inf(o)).shifted(lead);
}

QSeries b46_simplified_product(const QExponent& order) {
    const Rational lead(3, 2);
    const Rational o = order - lead;
    const auto inf = std::nullopt;
    QSeries den = pochhammer(Rational(12), 1, Rational(24), inf, o);
    den *= pochhammer(Rational(1), 1, Rational(1), inf, o);
    const QSeries num = pochhammer(Rational(24), 1, Rational(24), inf, o);
    return (num * series_inverse(den)).shifted(lead);
}

QSeries fsum_family_rhs(int family, std::int64_t k, int sigma, const QExponent& order) {
    require_sigma(sigma);
    if (k < 1) throw PreconditionViolation("F-sum families need k >= 1");
    if (k % 2 == 1) {
        const std::int64_t h = (k + 1) / 2;
        const QSeries c1 = virasoro_char({3, 4, sigma + 1, 1}, order);
        switch (family) {
            case 1: return c1 * virasoro_char({5, (5 * k + 3) / 2, 1, h}, order);
            case 2: return c1 * virasoro_char({6, 3 * k + 2, 1, h}, order);
            case 3: {
                const QSeries c2 = virasoro_char({3, 4, 2 - sigma, 1}, order);
                return c1 * virasoro_char({8, 4 * k + 3, 1, h}, order) +
                       c2 * virasoro_char({8, 4 * k + 3, 7, h}, order);
            }
            default: break;
        }
    } else {
        // Every family carries the label sigma + k/2 (mod 2) for even k.
        const int s = static_cast<int>((sigma + k / 2) % 2);
        switch (family) {
            case 1: return branching_function({5, 5 * k + 3, 1, k + 1, s}, order);
            case 2: return branching_function({6, 6 * k + 4, 1, k + 1, s}, order);
            case 3:
                return branching_function({8, 8 * k + 6, 1, k + 1, s}, order) +
                       branching_function({8, 8 * k + 6, 7, k + 1, 1 - s}, order);
            default: break;
        }
    }
    throw PreconditionViolation("F-sum family must be 1, 2 or 3");
}

QSeries x_series_rhs(int family, std::int64_t k, const QExponent& order) {
    if (k < 2) throw PreconditionViolation("X-series need k >= 2");
    const bool odd = k % 2 == 1;
    switch (family) {
        case 1:
            return odd ? virasoro_char({(5 * k + 3) / 2, 5 * k - 2, (k + 1) / 2, k}, order)
                       : virasoro_char({5 * k / 2 - 1, 5 * k + 3, k / 2, k + 1}, order);
        case 2:
            return odd ? virasoro_char({3 * k + 2, 6 * k - 2, (k + 1) / 2, k}, order)
                       : virasoro_char({3 * k - 1, 6 * k + 4, k / 2, k + 1}, order);
        case 3:
            return odd ? virasoro_char({4 * k + 3, 8 * k - 2, (k + 1) / 2, k}, order) +
                             virasoro_char({4 * k + 3, 8 * k - 2, (k + 1) / 2, 7 * k - 2}, order)
                       : virasoro_char({4 * k - 1, 8 * k + 6, k / 2, k + 1}, order) +
                             virasoro_char({4 * k - 1, 8 * k + 6, 7 * k / 2 - 1, k + 1}, order);
        default:
            throw PreconditionViolation("X family must be 1, 2 or 3");
    }
}

}  // namespace qtrin
