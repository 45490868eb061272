#include "qtrin/mnsys.hpp"

#include <cctype>
#include <stdexcept>

namespace qtrin {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void check_system(const MNSystem& sys) {
    if (sys.algebra == nullptr) throw PreconditionViolation("(m,n)-system without an algebra");
    if (sys.N < 0) throw PreconditionViolation("(m,n)-system needs N >= 0");
    if (sys.vertex < 1 || sys.vertex > sys.algebra->rank) {
        throw PreconditionViolation("vertex " + std::to_string(sys.vertex) + " outside 1.." +
                                    std::to_string(sys.algebra->rank));
    }
}

/// Depth-first search over n. With S = den * C^{-1} (positive integers),
/// den * m_j = N S_{j,i} - 2 sum_k S_{j,k} n_k must stay >= 0, and the partial
/// sums over assigned coordinates only grow, so any violation prunes the subtree.
class Enumerator {
public:
    Enumerator(const MNSystem& sys, const NFilter& filter)
        : g_(*sys.algebra), filter_(filter), r_(static_cast<std::size_t>(g_.rank)) {
        budget_.resize(r_);
        const auto col = static_cast<std::size_t>(sys.vertex - 1);
        for (std::size_t j = 0; j < r_; ++j) budget_[j] = sys.N * g_.inverse_cartan_scaled[j][col];
        n_.assign(r_, 0);
    }

    std::vector<MNSolution> run() {
        recurse(0, budget_);
        return std::move(out_);
    }

private:
    void recurse(std::size_t k, const std::vector<std::int64_t>& rest) {
        if (k == r_) {
            emit(rest);
            return;
        }
        std::vector<std::int64_t> next = rest;
        for (std::int64_t v = 0;; ++v) {
            if (v > 0) {
                bool ok = true;
                for (std::size_t j = 0; j < r_; ++j) {
                    next[j] -= 2 * g_.inverse_cartan_scaled[j][k];
                    ok = ok && next[j] >= 0;
                }
                if (!ok) break;
            }
            n_[k] = v;
            recurse(k + 1, next);
        }
        n_[k] = 0;
    }

    void emit(const std::vector<std::int64_t>& scaled_m) {
        MNSolution s;
        s.m.resize(r_);
        for (std::size_t j = 0; j < r_; ++j) {
            if (scaled_m[j] % g_.inverse_cartan_den != 0) return;
            s.m[j] = scaled_m[j] / g_.inverse_cartan_den;
        }
        for (const auto& c : filter_) {
            if (!c.holds(n_)) return;
        }
        s.n = n_;
        out_.push_back(std::move(s));
    }

    const LieAlgebra& g_;
    const NFilter& filter_;
    std::size_t r_;
    std::vector<std::int64_t> budget_;
    std::vector<std::int64_t> n_;
    std::vector<MNSolution> out_;
};

}  // namespace

bool LinearCongruence::holds(const std::vector<std::int64_t>& n) const {
    std::int64_t s = offset;
    for (std::size_t i = 0; i < coefficients.size() && i < n.size(); ++i) s += coefficients[i] * n[i];
    return floor_mod(s, modulus) == 0;
}

LinearCongruence parity_of(std::initializer_list<int> vertices, std::int64_t offset, int rank) {
    LinearCongruence c;
    c.coefficients.assign(static_cast<std::size_t>(rank), 0);
    for (int v : vertices) c.coefficients.at(static_cast<std::size_t>(v - 1)) += 1;
    c.offset = offset;
    c.modulus = 2;
    return c;
}

LinearCongruence mod3_class_constraint(int rank) {
    if (rank < 5) throw DimensionMismatch("mod-3 constraint needs rank >= 5");
    LinearCongruence c;
    c.coefficients.assign(static_cast<std::size_t>(rank), 0);
    c.coefficients[0] = 1;
    c.coefficients[3] = 1;
    c.coefficients[1] = -1;
    c.coefficients[4] = -1;
    c.modulus = 3;
    return c;
}

LinearCongruence parse_linear_form(std::string_view text, std::int64_t modulus, int rank) {
    LinearCongruence c;
    c.coefficients.assign(static_cast<std::size_t>(rank), 0);
    c.modulus = modulus;
    std::size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("bad linear form '" + std::string(text) + "'"); };
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> std::int64_t {
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail();
        return std::stoll(std::string(text.substr(start, i - start)));
    };
    skip_space();
    if (i == text.size()) fail();
    bool first = true;
    while (true) {
        skip_space();
        if (i == text.size()) break;
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_space();
        } else if (!first) {
            fail();
        }
        first = false;
        if (i < text.size() && text[i] == 'n') {
            ++i;
            const std::int64_t v = read_int();
            if (v < 1 || v > rank) fail();
            c.coefficients[static_cast<std::size_t>(v - 1)] += sign;
        } else {
            c.offset += sign * read_int();
        }
    }
    return c;
}

std::vector<MNSolution> solve_mn(const MNSystem& sys) { return solve_mn_filtered(sys, {}); }

std::vector<MNSolution> solve_mn_filtered(const MNSystem& sys, const NFilter& filter) {
    check_system(sys);
    return Enumerator(sys, filter).run();
}

bool satisfies_system(const MNSystem& sys, const MNSolution& s) {
    check_system(sys);
    const LieAlgebra& g = *sys.algebra;
    const auto r = static_cast<std::size_t>(g.rank);
    if (s.m.size() != r || s.n.size() != r) return false;
    for (std::size_t j = 0; j < r; ++j) {
        if (s.m[j] < 0 || s.n[j] < 0) return false;
        // 2n = N e_i - C m
        std::int64_t cm = 0;
        for (std::size_t k = 0; k < r; ++k) cm += g.cartan[j][k] * s.m[k];
        const std::int64_t rhs = (static_cast<int>(j) == sys.vertex - 1 ? sys.N : 0) - cm;
        if (2 * s.n[j] != rhs) return false;
        // m = C^{-1}(N e_i - 2n)
        Rational mj;
        for (std::size_t k = 0; k < r; ++k) {
            const std::int64_t v = (static_cast<int>(k) == sys.vertex - 1 ? sys.N : 0) - 2 * s.n[k];
            mj += g.inverse_cartan[j][k] * Rational(v);
        }
        if (mj != Rational(s.m[j])) return false;
    }
    return true;
}

std::string format_basis_vector(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += v[i] > 0 ? "+" : "-";
        else if (v[i] < 0) out += "-";
        const std::int64_t mag = v[i] < 0 ? -v[i] : v[i];
        if (mag != 1) out += std::to_string(mag);
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace qtrin
