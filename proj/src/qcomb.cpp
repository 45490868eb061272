#include "qtrin/qcomb.hpp"

#include <cassert>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace qtrin {

namespace {

/// [n, k] as a dense coefficient list, built as prod_{i<=k} (1-q^{n-k+i})/(1-q^i).
/// After step i the working polynomial is exactly [n-k+i, i], so intermediate
/// values never exceed the final coefficients' scale.
QPoly gaussian_dense(std::int64_t n, std::int64_t k) {
    if (k > n - k) k = n - k;
    const std::int64_t base = n - k;
    std::vector<Integer> c(static_cast<std::size_t>(k * (base + 1) + 1));
    c[0] = 1;
    std::int64_t deg = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
        const std::int64_t up = base + i;
        // multiply by (1 - q^up)
        for (std::int64_t j = deg + up; j >= up; --j) {
            c[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j - up)];
        }
        deg += up;
        // divide by (1 - q^i): exact, c'_j = c_j + c'_{j-i}
        for (std::int64_t j = i; j <= deg; ++j) {
            c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - i)];
        }
        deg -= i;
    }
    return QPoly::from_dense(0, std::span<const Integer>(c.data(), static_cast<std::size_t>(deg + 1)));
}

class BinomialCache {
public:
    QPoly get(std::int64_t n, std::int64_t k) {
        if (k > n - k) k = n - k;
        const auto key = std::make_pair(n, k);
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        QPoly p = gaussian_dense(n, k);
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(p)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<std::int64_t, std::int64_t>, QPoly> table_;
};

BinomialCache& binomial_cache() {
    static BinomialCache cache;
    return cache;
}

}  // namespace

QPoly qbinomial(std::int64_t n, std::int64_t a) {
    if (a < 0 || n < 0 || a > n) return {};
    if (a == 0 || a == n) return QPoly::constant(1);
    return binomial_cache().get(n, a);
}

QPoly qbinomial_vector(std::span<const std::int64_t> m, std::span<const std::int64_t> n) {
    if (m.size() != n.size()) throw DimensionMismatch("qbinomial_vector: m and n differ in length");
    QPoly r = QPoly::constant(1);
    for (std::size_t j = 0; j < m.size(); ++j) {
        r *= qbinomial(m[j] + n[j], n[j]);
        if (r.is_zero()) return r;
    }
    return r;
}

QPoly qtrinomial2(std::int64_t L, std::int64_t a) {
    if (L < 0) throw PreconditionViolation("qtrinomial2 needs L >= 0");
    QPoly r;
    if (std::llabs(a) > L) return r;
    for (std::int64_t k = std::max<std::int64_t>(0, -a); 2 * k + a <= L; ++k) {
        r.add_scaled(qbinomial(L, k) * qbinomial(L - k, k + a), QExponent(k * (k + a)));
    }
    return r;
}

QPoly qtrinomial_T_via_duality(std::int64_t L, std::int64_t a) {
    return qtrinomial2(L, a).substituted_qinv().shifted(QExponent((L - a) * (L + a), 2));
}

QPoly qtrinomial_T(std::int64_t L, std::int64_t a, CrossCheck check) {
    if (L < 0) throw PreconditionViolation("qtrinomial_T needs L >= 0");
    QPoly r;
    for (std::int64_t n = 0; n <= L - std::llabs(a); ++n) {
        if ((n + a + L) % 2 != 0) continue;
        // (q)_L / ((q)_{(L-a-n)/2} (q)_{(L+a-n)/2} (q)_n) = [L, n] [L-n, (L-a-n)/2]
        r.add_scaled(qbinomial(L, n) * qbinomial(L - n, (L - a - n) / 2), QExponent(n * n, 2));
    }
    if (check == CrossCheck::kOn && r != qtrinomial_T_via_duality(L, a)) {
        throw RepresentationMismatch("T(" + std::to_string(L) + "," + std::to_string(a) +
                                     "): explicit sum and duality route disagree");
    }
    return r;
}

QPoly refined_T(const RefinedArgs& args) {
    const auto [L, M, a, b] = args;
    QPoly r;
    const std::int64_t top = std::min<std::int64_t>(L - (a < 0 ? -a : a), M);
    for (std::int64_t n = 0; n <= top; ++n) {
        if ((n + a + L) % 2 != 0) continue;
        assert((L - a - n) % 2 == 0 && (L + a - n) % 2 == 0);
        QPoly t = qbinomial(M, n);
        if (t.is_zero()) continue;
        t *= qbinomial(M + b + (L - a - n) / 2, M + b);
        if (t.is_zero()) continue;
        t *= qbinomial(M - b + (L + a - n) / 2, M - b);
        r.add_scaled(t, QExponent(n * n, 2));
    }
    return r;
}

bool refined_T_dual_check(const RefinedArgs& args) {
    const QPoly t = refined_T(args);
    return t.substituted_qinv() == t.shifted(QExponent(args.a * args.b - args.M * args.L));
}

}  // namespace qtrin
