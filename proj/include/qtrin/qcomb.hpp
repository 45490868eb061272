#pragma once

#include <cstdint>
#include <span>

#include "qtrin/qpoly.hpp"

namespace qtrin {

/// Arguments of the refined trinomial T(L, M, a, b).
struct RefinedArgs {
    std::int64_t L = 0;
    std::int64_t M = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
};

/// Gaussian polynomial [n, a]; zero unless 0 <= a <= n. Memoized.
QPoly qbinomial(std::int64_t n, std::int64_t a);

/// prod_j [m_j + n_j, n_j].
QPoly qbinomial_vector(std::span<const std::int64_t> m, std::span<const std::int64_t> n);

/// Round-bracket q-trinomial (L a)_2 = sum_k q^{k(k+a)} [L,k] [L-k,k+a].
QPoly qtrinomial2(std::int64_t L, std::int64_t a);

enum class CrossCheck { kOff, kOn };

/// T(L, a) from its parity-restricted explicit sum. With CrossCheck::kOn the
/// result is also rebuilt as q^{(L-a)(L+a)/2} (L a)_2(1/q) and a mismatch
/// throws RepresentationMismatch.
QPoly qtrinomial_T(std::int64_t L, std::int64_t a, CrossCheck check = CrossCheck::kOff);

/// T(L, a) via the duality route q^{(L-a)(L+a)/2} (L a)_2 evaluated at 1/q.
QPoly qtrinomial_T_via_duality(std::int64_t L, std::int64_t a);

/// The refined coefficient 𝒯(L, M, a, b), evaluated from its defining n-sum.
QPoly refined_T(const RefinedArgs& args);
inline QPoly refined_T(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b) {
    return refined_T(RefinedArgs{L, M, a, b});
}

/// 𝒯(L,M,a,b; 1/q) == q^{ab-ML} 𝒯(L,M,a,b; q).
bool refined_T_dual_check(const RefinedArgs& args);

}  // namespace qtrin
