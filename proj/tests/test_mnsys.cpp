#include <gtest/gtest.h>

#include <algorithm>

#include "brute_mn.hpp"
#include "reference_data.hpp"
#include "qtrin/errors.hpp"
#include "qtrin/mnsys.hpp"

using qtrin::MNSolution;
using qtrin::MNSystem;
using Vec = std::vector<std::int64_t>;

namespace {

bool same_set(std::vector<MNSolution> a, std::vector<MNSolution> b) {
    auto less = [](const MNSolution& x, const MNSolution& y) { return std::tie(x.n, x.m) < std::tie(y.n, y.m); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

}  // namespace

TEST(MNSystem, E7WorkedExample) {
    const auto& g = qtrin::algebra("E7");
    const auto all = qtrin::solve_mn({&g, 6, 1});
    std::vector<MNSolution> both = reference::e7_even();
    both.insert(both.end(), reference::e7_odd().begin(), reference::e7_odd().end());
    EXPECT_EQ(all.size(), 11U);
    EXPECT_TRUE(same_set(all, both));
    const auto even = qtrin::solve_mn_filtered({&g, 6, 1}, {qtrin::parity_of({1, 3, 7}, 0, 7)});
    const auto odd = qtrin::solve_mn_filtered({&g, 6, 1}, {qtrin::parity_of({1, 3, 7}, 1, 7)});
    EXPECT_TRUE(same_set(even, reference::e7_even()));
    EXPECT_TRUE(same_set(odd, reference::e7_odd()));
}

TEST(MNSystem, ZeroDriveHasOnlyTrivialSolution) {
    for (const char* name : {"A5", "D6", "E6", "E7", "E8"}) {
        const auto& g = qtrin::algebra(name);
        for (int v = 1; v <= g.rank; ++v) {
            const auto s = qtrin::solve_mn({&g, 0, v});
            ASSERT_EQ(s.size(), 1U);
            EXPECT_EQ(s[0].m, Vec(static_cast<std::size_t>(g.rank), 0));
            EXPECT_EQ(s[0].n, Vec(static_cast<std::size_t>(g.rank), 0));
        }
    }
}

TEST(MNSystem, CompleteAgainstBoxBruteForce) {
    // small drives here; the acceptance run covers N up to 8
    for (const char* name : {"A5", "D6", "E6", "E7", "E8"}) {
        const auto& g = qtrin::algebra(name);
        for (int v = 1; v <= g.rank; ++v) {
            for (std::int64_t N = 0; N <= 5; ++N) {
                const auto got = qtrin::solve_mn({&g, N, v});
                EXPECT_EQ(got, brute::solve(g, N, v)) << name << " N=" << N << " v=" << v;
                for (const auto& s : got) EXPECT_TRUE(qtrin::satisfies_system({&g, N, v}, s));
            }
        }
    }
}

TEST(MNSystem, SatisfiesRejectsPerturbedSolution) {
    const auto& g = qtrin::algebra("E7");
    MNSolution s = reference::e7_even().front();
    EXPECT_TRUE(qtrin::satisfies_system({&g, 6, 1}, s));
    s.n[0] += 1;
    EXPECT_FALSE(qtrin::satisfies_system({&g, 6, 1}, s));
}

TEST(MNSystem, PreconditionsAreChecked) {
    const auto& g = qtrin::algebra("E7");
    EXPECT_THROW(qtrin::solve_mn({&g, -1, 1}), qtrin::PreconditionViolation);
    EXPECT_THROW(qtrin::solve_mn({&g, 2, 0}), qtrin::PreconditionViolation);
    EXPECT_THROW(qtrin::solve_mn({&g, 2, 8}), qtrin::PreconditionViolation);
    EXPECT_THROW(qtrin::solve_mn({nullptr, 2, 1}), qtrin::PreconditionViolation);
}

TEST(LinearForm, ParsesSignsAndOffsets) {
    const auto c = qtrin::parse_linear_form("n1+n4-n2-n5", 3, 5);
    EXPECT_EQ(c.coefficients, (Vec{1, -1, 0, 1, -1}));
    EXPECT_EQ(c.modulus, 3);
    EXPECT_TRUE(c.holds({1, 1, 0, 0, 0}));
    EXPECT_FALSE(c.holds({1, 0, 0, 0, 0}));
    EXPECT_TRUE(c.holds({3, 0, 0, 0, 0}));
    EXPECT_FALSE(c.holds({0, 0, 0, 1, 2}));

    const auto p = qtrin::parse_linear_form("n1+n3+n5+1", 2, 5);
    EXPECT_EQ(p.offset, 1);
    EXPECT_TRUE(p.holds({1, 0, 0, 0, 0}));
    EXPECT_FALSE(p.holds({0, 0, 0, 0, 0}));
    EXPECT_EQ(qtrin::parse_linear_form("n1+n3+n7", 2, 7).coefficients,
              qtrin::parity_of({1, 3, 7}, 0, 7).coefficients);
    EXPECT_EQ(qtrin::parse_linear_form("n1+n4-n2-n5", 3, 5).coefficients,
              qtrin::mod3_class_constraint(5).coefficients);
}

TEST(LinearForm, RejectsMalformedInput) {
    EXPECT_THROW(qtrin::parse_linear_form("n9", 2, 7), std::invalid_argument);
    EXPECT_THROW(qtrin::parse_linear_form("m1+n2", 2, 7), std::invalid_argument);
    EXPECT_THROW(qtrin::parse_linear_form("", 2, 7), std::invalid_argument);
}

TEST(LinearForm, FiltersAgreeWithPostFiltering) {
    const auto& g = qtrin::algebra("D6");
    const qtrin::NFilter f{qtrin::parity_of({1, 3, 6}, 0, 6), qtrin::parity_of({1, 3, 5}, 1, 6)};
    for (std::int64_t N = 0; N <= 8; ++N) {
        std::vector<MNSolution> want;
        for (const auto& s : qtrin::solve_mn({&g, N, 5})) {
            if (f[0].holds(s.n) && f[1].holds(s.n)) want.push_back(s);
        }
        EXPECT_EQ(qtrin::solve_mn_filtered({&g, N, 5}, f), want);
    }
}

TEST(BasisVector, TextForm) {
    EXPECT_EQ(qtrin::format_basis_vector({5, 4, 0, 0, 0, 0, 1}), "5e1+4e2+e7");
    EXPECT_EQ(qtrin::format_basis_vector({0, 0}), "0");
}
