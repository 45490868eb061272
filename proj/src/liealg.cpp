#include "qtrin/liealg.hpp"

#include <array>
#include <numeric>
#include <utility>

namespace qtrin {

namespace {

struct Diagram {
    AlgebraName name;
    int rank;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> marked;
    std::optional<int> distinguished;
};

const std::array<Diagram, 5>& diagrams() {
    static const std::array<Diagram, 5> table = {{
        {AlgebraName::A5, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, {3}, 3},
        {AlgebraName::D6, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}, {5}, 5},
        {AlgebraName::E6, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}, {6}, std::nullopt},
        {AlgebraName::E7, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}}, {1, 6}, 1},
        {AlgebraName::E8, 8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}}, {1}, std::nullopt},
    }};
    return table;
}

LieAlgebra build(const Diagram& d) {
    LieAlgebra g;
    g.name = d.name;
    g.rank = d.rank;
    const auto r = static_cast<std::size_t>(d.rank);
    g.incidence.assign(r, std::vector<int>(r, 0));
    for (auto [a, b] : d.edges) {
        g.incidence[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 1;
        g.incidence[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = 1;
    }
    g.cartan.assign(r, std::vector<int>(r, 0));
    std::vector<std::vector<Rational>> c(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            g.cartan[i][j] = (i == j ? 2 : 0) - g.incidence[i][j];
            c[i][j] = g.cartan[i][j];
        }
    }
    g.inverse_cartan = invert_matrix(c);

    // validate C * C^{-1} = I and positivity
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Rational s;
            for (std::size_t k = 0; k < r; ++k) s += Rational(g.cartan[i][k]) * g.inverse_cartan[k][j];
            if (s != Rational(i == j ? 1 : 0)) throw Error("inverse Cartan matrix failed validation");
            if (g.inverse_cartan[i][j].sign() <= 0) throw Error("inverse Cartan matrix is not positive");
        }
    }

    std::int64_t den = 1;
    for (const auto& row : g.inverse_cartan) {
        for (const auto& x : row) den = std::lcm(den, x.denominator().to_int64());
    }
    g.inverse_cartan_den = den;
    g.inverse_cartan_scaled.assign(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            g.inverse_cartan_scaled[i][j] = (g.inverse_cartan[i][j] * Rational(den)).numerator().to_int64();
        }
    }
    g.marked_vertices = d.marked;
    g.distinguished_vertex = d.distinguished;
    return g;
}

}  // namespace

std::string_view to_string(AlgebraName name) {
    switch (name) {
        case AlgebraName::A5: return "A5";
        case AlgebraName::D6: return "D6";
        case AlgebraName::E6: return "E6";
        case AlgebraName::E7: return "E7";
        case AlgebraName::E8: return "E8";
    }
    return "?";
}

AlgebraName parse_algebra_name(std::string_view name) {
    for (const auto& d : diagrams()) {
        if (to_string(d.name) == name) return d.name;
    }
    throw UnknownAlgebra("unknown algebra '" + std::string(name) + "' (expected A5, D6, E6, E7 or E8)");
}

const LieAlgebra& algebra(AlgebraName name) {
    static const std::array<LieAlgebra, 5> tables = [] {
        std::array<LieAlgebra, 5> t;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = build(diagrams()[i]);
        return t;
    }();
    return tables[static_cast<std::size_t>(name)];
}

const LieAlgebra& algebra(std::string_view name) { return algebra(parse_algebra_name(name)); }

Rational quad_form_invcartan(const LieAlgebra& g, std::span<const std::int64_t> n) {
    if (n.size() != static_cast<std::size_t>(g.rank)) {
        throw DimensionMismatch("vector length " + std::to_string(n.size()) + " != rank " +
                                std::to_string(g.rank));
    }
    Integer acc;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        Integer row;
        for (std::size_t j = 0; j < n.size(); ++j) {
            row.add_product(Integer(g.inverse_cartan_scaled[i][j]), Integer(n[j]));
        }
        acc.add_product(row, Integer(n[i]));
    }
    return {acc, Integer(g.inverse_cartan_den)};
}

Rational quad_form_cartan(const LieAlgebra& g, std::span<const std::int64_t> m) {
    if (m.size() != static_cast<std::size_t>(g.rank)) {
        throw DimensionMismatch("vector length " + std::to_string(m.size()) + " != rank " +
                                std::to_string(g.rank));
    }
    Integer acc;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (g.cartan[i][j] == 0) continue;
            acc.add_product(Integer(g.cartan[i][j]) * Integer(m[i]), Integer(m[j]));
        }
    }
    return Rational(acc, Integer(1));
}

std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
        w[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w[pivot][col].sign() == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(w[col], w[pivot]);
        const Rational pv = w[col][col];
        for (auto& x : w[col]) x /= pv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col].sign() == 0) continue;
            const Rational f = w[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
    }
    return inv;
}

}  // namespace qtrin
