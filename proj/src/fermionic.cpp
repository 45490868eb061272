#include "qtrin/fermionic.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qtrin/qcomb.hpp"

namespace qtrin {

namespace {

const std::int64_t kTwo = 2;

void require_sigma(int sigma) {
    if (sigma != 0 && sigma != 1) throw PreconditionViolation("sigma must be 0 or 1");
}

void require_positive(const QPoly& p, const char* what) {
    if (!p.all_coefficients_nonnegative()) {
        throw std::logic_error(std::string(what) + " produced a negative coefficient");
    }
}

/// 1/(q)_n truncated at a fixed order, computed once per n.
class InversePochhammers {
public:
    explicit InversePochhammers(QExponent order) : order_(std::move(order)) {}

    const QPoly& operator()(std::int64_t n) {
        auto it = cache_.find(n);
        if (it == cache_.end()) {
            it = cache_.emplace(n, inverse_q_pochhammer(n, order_).poly()).first;
        }
        return it->second;
    }

private:
    QExponent order_;
    std::map<std::int64_t, QPoly> cache_;
};

Rational quarter_mcm(const LieAlgebra& g, const std::vector<std::int64_t>& m) {
    return quad_form_cartan(g, m) / Rational(4);
}

std::int64_t even_half(std::int64_t v, const char* what) {
    if (v % 2 != 0) throw std::logic_error(std::string(what) + ": odd component where the filter implies even");
    return v / 2;
}

}  // namespace

NFilter f_poly_filter(AlgebraName g, std::int64_t parity_offset) {
    const int rank = algebra(g).rank;
    switch (g) {
        case AlgebraName::A5:
            return {mod3_class_constraint(rank), parity_of({1, 3, 5}, parity_offset, rank)};
        case AlgebraName::D6:
            return {parity_of({1, 3, 6}, 0, rank), parity_of({1, 3, 5}, parity_offset, rank)};
        case AlgebraName::E7:
            return {parity_of({1, 3, 7}, parity_offset, rank)};
        default:
            throw PreconditionViolation("F-polynomials exist for A5, D6 and E7 only");
    }
}

QPoly f_poly(const FPolyArgs& args) {
    require_sigma(args.sigma);
    if (args.M < 0) throw PreconditionViolation("F-polynomial needs M >= 0");
    const LieAlgebra& g = algebra(args.g);
    const NFilter filter = f_poly_filter(args.g, args.sigma);
    const MNSystem sys{&g, kTwo * args.M, *g.distinguished_vertex};
    QPoly out;
    for (const auto& s : solve_mn_filtered(sys, filter)) {
        out.add_scaled(qbinomial_vector(s.m, s.n), quad_form_invcartan(g, s.n));
    }
    return out;
}

QPoly conj_rhs(int which, std::int64_t L, std::int64_t M) {
    if (L < 0 || M < 0) throw PreconditionViolation("conjecture sides need L, M >= 0");
    AlgebraName name;
    switch (which) {
        case 1: name = AlgebraName::E7; break;
        case 2: name = AlgebraName::D6; break;
        case 3: name = AlgebraName::A5; break;
        default: throw PreconditionViolation("conjecture index must be 1, 2 or 3");
    }
    const LieAlgebra& g = algebra(name);
    const int p = *g.distinguished_vertex;
    const MNSystem sys{&g, kTwo * M, p};
    QPoly out;
    for (const auto& s : solve_mn_filtered(sys, f_poly_filter(name, L))) {
        const std::int64_t top = even_half(L + M + s.m[static_cast<std::size_t>(p - 1)], "conj_rhs");
        QPoly t = qbinomial(top, kTwo * M);
        if (t.is_zero()) continue;
        t *= qbinomial_vector(s.m, s.n);
        out.add_scaled(t, quad_form_invcartan(g, s.n));
    }
    require_positive(out, "conj_rhs");
    return out;
}

std::string_view to_string(KFamily f) {
    switch (f) {
        case KFamily::kFlower: return "flower";
        case KFamily::kFlower2: return "flower2";
        case KFamily::kMonster: return "monster";
    }
    return "?";
}

KFamily parse_kfamily(std::string_view name) {
    if (name == "flower") return KFamily::kFlower;
    if (name == "flower2") return KFamily::kFlower2;
    if (name == "monster") return KFamily::kMonster;
    throw PreconditionViolation("unknown k-series family '" + std::string(name) + "'");
}

KFamilyData kfamily_data(KFamily f) {
    switch (f) {
        case KFamily::kFlower:
            return {AlgebraName::E8, 1, 1, {}};
        case KFamily::kFlower2:
            return {AlgebraName::E7, 6, 6, {parity_of({1, 3, 7}, 0, 7)}};
        case KFamily::kMonster:
            return {AlgebraName::E6, 6, 6, {mod3_class_constraint(6)}};
    }
    throw PreconditionViolation("unknown k-series family");
}

QPoly kseries_rhs(const KSeriesArgs& args) {
    if (args.k < 1) throw PreconditionViolation("k-series needs k >= 1");
    if (args.L < 0 || args.M < 0) throw PreconditionViolation("k-series needs L, M >= 0");
    const KFamilyData fam = kfamily_data(args.family);
    const LieAlgebra& g = algebra(fam.g);
    const auto bullet = static_cast<std::size_t>(fam.bullet - 1);

    // sum over the (m,n)-system with N = r_{k-1}, weighted by [top - m_bullet/2, N].
    std::map<std::pair<std::int64_t, std::int64_t>, QPoly> inner_cache;
    auto inner = [&](std::int64_t top, std::int64_t N) -> const QPoly& {
        const auto key = std::make_pair(top, N);
        auto it = inner_cache.find(key);
        if (it != inner_cache.end()) return it->second;
        QPoly acc;
        for (const auto& s : solve_mn_filtered(MNSystem{&g, N, fam.vertex}, fam.filter)) {
            QPoly t = qbinomial(top - even_half(s.m[bullet], "kseries_rhs"), N);
            if (t.is_zero()) continue;
            t *= qbinomial_vector(s.m, s.n);
            acc.add_scaled(t, quarter_mcm(g, s.m));
        }
        return inner_cache.emplace(key, std::move(acc)).first->second;
    };

    // rs[x + 1] holds r_x: r_{-1} = L + M, r_0 = L, then r_1 .. r_{k-1}.
    // Nonvanishing of [r_{k-2} - m/2, r_{k-1}] and of every factor
    // [r_{a-1} - r_a + r_{a+1}, r_a] forces r_a <= r_{a-1}, so each r_a runs
    // over 0..r_{a-1}.
    const auto k = static_cast<std::size_t>(args.k);
    std::vector<std::int64_t> rs{args.L + args.M, args.L};
    QPoly out;
    auto recurse = [&](auto&& self, const QPoly& weight) -> void {
        if (rs.size() == k + 1) {
            const QPoly& in = inner(rs[k - 1], rs[k]);
            if (!in.is_zero()) out += weight * in;
            return;
        }
        const std::size_t a = rs.size() - 2;  // factor index once r_{a+1} is fixed
        for (std::int64_t v = 0; v <= rs.back(); ++v) {
            rs.push_back(v);
            const std::int64_t rm = rs[a], ra = rs[a + 1], rp = rs[a + 2];
            QPoly f = qbinomial(rm - ra + rp, ra);
            if (!f.is_zero()) {
                const std::int64_t d = ra - rp;
                self(self, (weight * f).shifted(Rational(d * d, 2)));
            }
            rs.pop_back();
        }
    };
    recurse(recurse, QPoly::constant(1));
    require_positive(out, "kseries_rhs");
    return out;
}

std::string_view to_string(CharFamily f) {
    switch (f) {
        case CharFamily::kE8: return "E8";
        case CharFamily::kE7: return "E7";
        case CharFamily::kE6: return "E6";
        case CharFamily::kD6B46: return "D6-B46";
        case CharFamily::kA5B68: return "A5-B68";
    }
    return "?";
}

CharFamily parse_char_family(std::string_view name) {
    if (name == "E8") return CharFamily::kE8;
    if (name == "E7") return CharFamily::kE7;
    if (name == "E6") return CharFamily::kE6;
    if (name == "D6-B46") return CharFamily::kD6B46;
    if (name == "A5-B68") return CharFamily::kA5B68;
    throw PreconditionViolation("unknown fermionic family '" + std::string(name) + "'");
}

QSeries fermionic_char_sum(CharFamily family, int sigma, const QExponent& order, int box_scale) {
    require_sigma(sigma);
    if (box_scale < 1) throw PreconditionViolation("box_scale must be >= 1");
    AlgebraName name = AlgebraName::E8;
    NFilter filter;
    switch (family) {
        case CharFamily::kE8: name = AlgebraName::E8; break;
        case CharFamily::kE7:
            name = AlgebraName::E7;
            filter = {parity_of({1, 3, 7}, sigma, 7)};
            break;
        case CharFamily::kE6:
            name = AlgebraName::E6;
            filter = {mod3_class_constraint(6)};
            break;
        case CharFamily::kD6B46:
            name = AlgebraName::D6;
            filter = f_poly_filter(name, sigma);
            break;
        case CharFamily::kA5B68:
            name = AlgebraName::A5;
            filter = f_poly_filter(name, sigma);
            break;
    }
    const LieAlgebra& g = algebra(name);
    const auto r = static_cast<std::size_t>(g.rank);
    const auto& S = g.inverse_cartan_scaled;
    const Rational den(g.inverse_cartan_den);

    // Largest v with (C^-1)_jj v^2 <= scale^2 * order.
    std::vector<std::int64_t> box(r, 0);
    const Rational limit = order * Rational(box_scale) * Rational(box_scale);
    for (std::size_t j = 0; j < r; ++j) {
        while (g.inverse_cartan[j][j] * Rational((box[j] + 1) * (box[j] + 1)) <= limit) ++box[j];
    }
    const bool prune = box_scale == 1;

    InversePochhammers inv(order);
    std::vector<std::int64_t> n(r, 0);
    QPoly out;
    auto recurse = [&](auto&& self, std::size_t k, std::int64_t scaled_q) -> void {
        if (k == r) {
            for (const auto& c : filter) {
                if (!c.holds(n)) return;
            }
            const Rational e = Rational(scaled_q) / den;
            if (e >= order) return;
            QPoly t = QPoly::monomial(e);
            for (std::size_t j = 0; j < r && !t.is_zero(); ++j) {
                if (n[j] > 0) t = multiply_truncated(t, inv(n[j]), &order);
            }
            out += t;
            return;
        }
        std::int64_t cross = 0;  // sum_{i<k} S_ik n_i
        for (std::size_t i = 0; i < k; ++i) cross += S[i][k] * n[i];
        for (std::int64_t v = 0; v <= box[k]; ++v) {
            const std::int64_t q = scaled_q + 2 * v * cross + S[k][k] * v * v;
            if (prune && Rational(q) / den >= order) break;
            n[k] = v;
            self(self, k + 1, q);
        }
        n[k] = 0;
    };
    recurse(recurse, 0, 0);
    require_positive(out, "fermionic_char_sum");
    return {std::move(out), order};
}

QSeries fsum_family_lhs(int family, std::int64_t k, int sigma, const QExponent& order) {
    require_sigma(sigma);
    if (k < 1) throw PreconditionViolation("F-sum families need k >= 1");
    AlgebraName name;
    switch (family) {
        case 1: name = AlgebraName::E7; break;
        case 2: name = AlgebraName::D6; break;
        case 3: name = AlgebraName::A5; break;
        default: throw PreconditionViolation("F-sum family must be 1, 2 or 3");
    }
    InversePochhammers inv(order);
    std::map<std::pair<std::int64_t, int>, QPoly> fcache;
    auto fpoly = [&](std::int64_t M, int s) -> const QPoly& {
        const auto key = std::make_pair(M, s);
        auto it = fcache.find(key);
        if (it == fcache.end()) it = fcache.emplace(key, f_poly({name, M, s})).first;
        return it->second;
    };

    const auto kk = static_cast<std::size_t>(k);
    std::vector<std::int64_t> ns;
    QPoly out;
    // (1/2) sum_a (n_a + ... + n_len)^2 over the prefix only grows as entries
    // are appended or increased, so it bounds every completion from below.
    auto prefix_bound = [&]() {
        std::int64_t total = 0, tail = 0;
        for (std::size_t a = ns.size(); a-- > 0;) {
            tail += ns[a];
            total += tail * tail;
        }
        return Rational(total, 2);
    };
    auto recurse = [&](auto&& self) -> void {
        if (ns.size() == kk) {
            std::int64_t odd = 0;
            for (std::size_t a = 0; a < kk; a += 2) odd += ns[a];
            const int m_sigma = static_cast<int>((sigma + odd) % 2);
            const Rational e = prefix_bound();
            QPoly t = fpoly(ns.back(), m_sigma).shifted(e).truncated(order);
            for (std::size_t a = 0; a + 1 < kk && !t.is_zero(); ++a) {
                if (ns[a] > 0) t = multiply_truncated(t, inv(ns[a]), &order);
            }
            if (!t.is_zero() && ns.back() > 0) t = multiply_truncated(t, inv(2 * ns.back()), &order);
            out += t;
            return;
        }
        for (std::int64_t v = 0;; ++v) {
            ns.push_back(v);
            const bool live = prefix_bound() < order;
            if (live) self(self);
            ns.pop_back();
            if (!live) break;
        }
    };
    recurse(recurse);
    require_positive(out, "fsum_family_lhs");
    return {std::move(out), order};
}

bool primed_m_restriction(int family, const std::vector<std::int64_t>& m, std::int64_t parity) {
    std::vector<int> odd_set;
    switch (family) {
        case 1: odd_set = {2, 4, 8}; break;
        case 2:
        case 3: odd_set = {1, 3, 5}; break;
        default: throw PreconditionViolation("X family must be 1, 2 or 3");
    }
    const std::int64_t want = ((parity % 2) + 2) % 2;
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool in_set = false;
        for (int v : odd_set) in_set = in_set || static_cast<std::size_t>(v - 1) == i;
        if ((m[i] % 2 + 2) % 2 != (in_set ? want : 0)) return false;
    }
    return true;
}

QSeries x_series_lhs(int family, std::int64_t k, const QExponent& order) {
    if (k < 2) throw PreconditionViolation("X-series need k >= 2");
    AlgebraName name;
    int vertex;
    switch (family) {
        case 1: name = AlgebraName::E8; vertex = 1; break;
        case 2: name = AlgebraName::E7; vertex = 6; break;
        case 3: name = AlgebraName::E6; vertex = 6; break;
        default: throw PreconditionViolation("X family must be 1, 2 or 3");
    }
    const LieAlgebra& g = algebra(name);
    const auto bullet = static_cast<std::size_t>(vertex - 1);
    InversePochhammers inv(order);

    const auto kk = static_cast<std::size_t>(k);
    std::vector<std::int64_t> rs{0};  // r_0 .. r_{len-1}
    QPoly out;
    auto leaf = [&](const Rational& e) {
        const std::int64_t N = rs.back();
        for (const auto& s : solve_mn(MNSystem{&g, N, vertex})) {
            if (!primed_m_restriction(family, s.m, N)) continue;
            const Rational shift = e + quarter_mcm(g, s.m);
            if (shift >= order) continue;
            std::vector<std::int64_t> full = rs;
            full.push_back(N - even_half(s.m[bullet], "x_series_lhs"));
            QPoly t = QPoly::monomial(shift);
            t = multiply_truncated(t, inv(rs[1]), &order);
            for (std::size_t a = 2; a < kk && !t.is_zero(); ++a) {
                t = multiply_truncated(t, qbinomial(full[a - 1] - full[a] + full[a + 1], full[a]), &order);
            }
            if (!t.is_zero()) t = multiply_truncated(t, qbinomial_vector(s.m, s.n), &order);
            out += t;
        }
    };
    // Returns false when the exponent (1/2) sum (r_a - r_{a-1})^2 of the
    // current prefix already reaches the order; it is convex in the last
    // entry with minimum at the previous one.
    auto recurse = [&](auto&& self) -> bool {
        std::int64_t twice = 0;
        for (std::size_t a = 1; a < rs.size(); ++a) twice += (rs[a] - rs[a - 1]) * (rs[a] - rs[a - 1]);
        const Rational e(twice, 2);
        if (e >= order) return false;
        if (rs.size() == kk) {
            leaf(e);
            return true;
        }
        const std::int64_t prev = rs.back();
        for (std::int64_t v = 0;; ++v) {
            rs.push_back(v);
            const bool ok = self(self);
            rs.pop_back();
            if (!ok && v >= prev) break;
        }
        return true;
    };
    recurse(recurse);
    require_positive(out, "x_series_lhs");
    return {std::move(out), order};
}

}  // namespace qtrin
