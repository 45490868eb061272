#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtrin/liealg.hpp"

namespace qtrin {

/// m + n = (I m + N e_vertex) / 2 over nonnegative integer vectors.
struct MNSystem {
    const LieAlgebra* algebra = nullptr;
    std::int64_t N = 0;
    int vertex = 1;  // 1-based
};

struct MNSolution {
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> n;
    friend bool operator==(const MNSolution&, const MNSolution&) = default;
};

/// sum_i coefficients[i] * n_{i+1} + offset == 0 (mod modulus).
struct LinearCongruence {
    std::vector<std::int64_t> coefficients;
    std::int64_t offset = 0;
    std::int64_t modulus = 2;

    [[nodiscard]] bool holds(const std::vector<std::int64_t>& n) const;
};

/// Conjunction of congruences on n; empty accepts everything.
using NFilter = std::vector<LinearCongruence>;

/// n_{v1} + n_{v2} + ... + offset even. Vertices are 1-based.
LinearCongruence parity_of(std::initializer_list<int> vertices, std::int64_t offset, int rank);
/// n1 + n4 - n2 - n5 == 0 (mod 3), the A5/E6 class constraint.
LinearCongruence mod3_class_constraint(int rank);

/// Parses a linear form such as "n1+n3+n7", "n1+n4-n2-n5" or "n1+n3+n5+1".
LinearCongruence parse_linear_form(std::string_view text, std::int64_t modulus, int rank);

/// All solutions, lexicographic in n. Throws PreconditionViolation on a
/// negative N or a vertex outside 1..rank.
std::vector<MNSolution> solve_mn(const MNSystem& sys);
std::vector<MNSolution> solve_mn_filtered(const MNSystem& sys, const NFilter& filter);

/// Checks n = (N e_i - C m)/2 and m = C^{-1}(N e_i - 2n) exactly.
bool satisfies_system(const MNSystem& sys, const MNSolution& s);

/// "5e1+4e2+e7" style, "0" for the zero vector.
std::string format_basis_vector(const std::vector<std::int64_t>& v);

}  // namespace qtrin
