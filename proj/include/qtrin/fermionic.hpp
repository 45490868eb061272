#pragma once

#include <cstdint>
#include <string_view>

#include "qtrin/liealg.hpp"
#include "qtrin/mnsys.hpp"
#include "qtrin/qpoly.hpp"

namespace qtrin {

/// F^g_{M;sigma} for g in {A5, D6, E7}.
struct FPolyArgs {
    AlgebraName g = AlgebraName::E7;
    std::int64_t M = 0;
    int sigma = 0;
};

/// The n-filter of F^g_{M;sigma}. The parity form n1+n3+n5 (n1+n3+n7 for E7)
/// carries `parity_offset`.
NFilter f_poly_filter(AlgebraName g, std::int64_t parity_offset);

/// sum over the system m+n = (I m + 2M e_p)/2 of q^{n C^-1 n} [m+n, n].
QPoly f_poly(const FPolyArgs& args);

/// Right-hand side of conjecture 1 (E7), 2 (D6) or 3 (A5).
QPoly conj_rhs(int which, std::int64_t L, std::int64_t M);

enum class KFamily { kFlower, kFlower2, kMonster };
std::string_view to_string(KFamily f);
KFamily parse_kfamily(std::string_view name);  // "flower", "flower2", "monster"

struct KSeriesArgs {
    KFamily family = KFamily::kFlower;
    std::int64_t k = 1;
    std::int64_t L = 0;
    std::int64_t M = 0;
};

/// Algebra data of a k-series: E8 with e1; E7 with e6 and n1+n3+n7 even;
/// E6 with e6 and the mod-3 class constraint. `bullet` is the m-component
/// entering [r_{k-2} - m_bullet/2, r_{k-1}].
struct KFamilyData {
    AlgebraName g;
    int vertex;
    int bullet;
    NFilter filter;
};
KFamilyData kfamily_data(KFamily f);

/// Fermionic side of the iterated identities, k >= 1.
QPoly kseries_rhs(const KSeriesArgs& args);

enum class CharFamily { kE8, kE7, kE6, kD6B46, kA5B68 };
std::string_view to_string(CharFamily f);
CharFamily parse_char_family(std::string_view name);  // "E8", "E7", "E6", "D6-B46", "A5-B68"

/// sum over filtered n of q^{n C^-1 n} / (q)_n up to `order`. sigma selects
/// the parity class for E7, D6-B46 and A5-B68 and is ignored otherwise.
///
/// Coordinates are bounded by n_j^2 <= box_scale^2 * order / (C^-1)_jj. With
/// box_scale == 1 the search also prunes on partial quadratic forms; larger
/// scales enumerate the plain box, which is how completeness is rechecked.
QSeries fermionic_char_sum(CharFamily family, int sigma, const QExponent& order,
                           int box_scale = 1);

/// sum_{n_1..n_k} q^{(N_1^2+...+N_k^2)/2} F_{n_k; m_sigma} / ((q)_{n_1}...(q)_{n_{k-1}} (q)_{2 n_k})
/// with F = F^{E7}, F^{D6}, F^{A5} for family 1, 2, 3.
QSeries fsum_family_lhs(int family, std::int64_t k, int sigma, const QExponent& order);

/// The r- and m-sums of the E8 (1), E7 (2) and E6 (3) families, k >= 2.
QSeries x_series_lhs(int family, std::int64_t k, const QExponent& order);

/// The primed restriction on m: components in the odd set are congruent to
/// `parity` mod 2, all others even.
bool primed_m_restriction(int family, const std::vector<std::int64_t>& m, std::int64_t parity);

}  // namespace qtrin
