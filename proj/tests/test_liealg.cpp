#include <gtest/gtest.h>

#include <algorithm>

#include "qtrin/errors.hpp"
#include "qtrin/liealg.hpp"

using qtrin::AlgebraName;
using qtrin::Rational;

namespace {

const AlgebraName kAll[] = {AlgebraName::A5, AlgebraName::D6, AlgebraName::E6, AlgebraName::E7, AlgebraName::E8};

// fraction-free Gaussian elimination; exact for integer matrices
std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a) {
    const std::size_t n = a.size();
    std::int64_t prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<std::vector<std::int64_t>> cartan64(const qtrin::LieAlgebra& g) {
    std::vector<std::vector<std::int64_t>> c;
    for (const auto& row : g.cartan) c.emplace_back(row.begin(), row.end());
    return c;
}

std::vector<std::vector<int>> without_vertex(const std::vector<std::vector<int>>& m, int v) {
    std::vector<std::vector<int>> r;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(i) == v - 1) continue;
        std::vector<int> row;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (static_cast<int>(j) != v - 1) row.push_back(m[i][j]);
        }
        r.push_back(row);
    }
    return r;
}

}  // namespace

TEST(LieAlgebra, RanksAndDeterminants) {
    const std::pair<AlgebraName, std::pair<int, std::int64_t>> expect[] = {
        {AlgebraName::A5, {5, 6}}, {AlgebraName::D6, {6, 4}}, {AlgebraName::E6, {6, 3}},
        {AlgebraName::E7, {7, 2}}, {AlgebraName::E8, {8, 1}}};
    for (const auto& [name, rd] : expect) {
        const auto& g = qtrin::algebra(name);
        EXPECT_EQ(g.rank, rd.first);
        EXPECT_EQ(bareiss_det(cartan64(g)), rd.second) << qtrin::to_string(name);
    }
}

TEST(LieAlgebra, InverseIsPositiveAndExact) {
    for (auto name : kAll) {
        const auto& g = qtrin::algebra(name);
        const auto r = static_cast<std::size_t>(g.rank);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                Rational s;
                for (std::size_t k = 0; k < r; ++k) s += Rational(g.inverse_cartan[i][k]) * Rational(g.cartan[k][j]);
                EXPECT_EQ(s, Rational(i == j ? 1 : 0));
                EXPECT_GT(g.inverse_cartan[i][j], Rational(0));
                EXPECT_EQ(g.inverse_cartan[i][j], g.inverse_cartan[j][i]);
                EXPECT_EQ(g.inverse_cartan[i][j] * Rational(g.inverse_cartan_den),
                          Rational(g.inverse_cartan_scaled[i][j]));
            }
        }
    }
}

TEST(LieAlgebra, DegreeSequencesAndArms) {
    // sorted degrees; the branch vertex (degree 3) has arms of lengths (1,1,k) for D, (1,2,k) for E
    const std::pair<AlgebraName, std::vector<int>> degrees[] = {
        {AlgebraName::A5, {1, 1, 2, 2, 2}},       {AlgebraName::D6, {1, 1, 1, 2, 2, 3}},
        {AlgebraName::E6, {1, 1, 1, 2, 2, 3}},    {AlgebraName::E7, {1, 1, 1, 2, 2, 2, 3}},
        {AlgebraName::E8, {1, 1, 1, 2, 2, 2, 2, 3}}};
    for (const auto& [name, want] : degrees) {
        const auto& g = qtrin::algebra(name);
        std::vector<int> got;
        for (const auto& row : g.incidence) got.push_back(std::count(row.begin(), row.end(), 1));
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, want) << qtrin::to_string(name);
        for (std::size_t i = 0; i < g.incidence.size(); ++i) EXPECT_EQ(g.incidence[i][i], 0);
    }
}

TEST(LieAlgebra, VertexRemovalGivesSmallerAlgebra) {
    EXPECT_EQ(without_vertex(qtrin::algebra("E8").cartan, 1), qtrin::algebra("E7").cartan);
    EXPECT_EQ(without_vertex(qtrin::algebra("E7").cartan, 6), qtrin::algebra("D6").cartan);
    EXPECT_EQ(without_vertex(qtrin::algebra("E6").cartan, 6), qtrin::algebra("A5").cartan);
}

TEST(LieAlgebra, MarkedVertices) {
    EXPECT_EQ(qtrin::algebra("A5").distinguished_vertex, 3);
    EXPECT_EQ(qtrin::algebra("D6").distinguished_vertex, 5);
    EXPECT_EQ(qtrin::algebra("E7").distinguished_vertex, 1);
}

TEST(LieAlgebra, QuadraticForms) {
    const auto& g = qtrin::algebra("E7");
    const std::vector<std::int64_t> e1{1, 0, 0, 0, 0, 0, 0}, v{1, 2, 0, 1, 0, 0, 3};
    EXPECT_EQ(qtrin::quad_form_invcartan(g, e1), g.inverse_cartan[0][0]);
    EXPECT_EQ(qtrin::quad_form_cartan(g, e1), Rational(2));
    Rational want;
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) want += Rational(g.cartan[i][j] * v[i] * v[j]);
    }
    EXPECT_EQ(qtrin::quad_form_cartan(g, v), want);
    const std::vector<std::int64_t> shorter{1, 2};
    EXPECT_THROW(qtrin::quad_form_cartan(g, shorter), qtrin::DimensionMismatch);
}

TEST(LieAlgebra, UnknownNameThrows) {
    EXPECT_THROW(qtrin::algebra("G2"), qtrin::UnknownAlgebra);
    EXPECT_THROW(qtrin::parse_algebra_name(""), qtrin::UnknownAlgebra);
}
