#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtrin/errors.hpp"
#include "qtrin/rational.hpp"

namespace qtrin {

enum class AlgebraName { A5, D6, E6, E7, E8 };

std::string_view to_string(AlgebraName name);
AlgebraName parse_algebra_name(std::string_view name);  // throws UnknownAlgebra

/// Simply-laced Lie algebra data with the vertex labelling used throughout
/// the library. Vertices are numbered 1..rank.
///
///   A5: 1-2-3-4-5
///   D6: 1-2-3-4-5, 6 attached to 4
///   E6: 1-2-3-4-5, 6 attached to 3
///   E7: 1-2-3-4-5-6, 7 attached to 4
///   E8: 1-2-3-4-5-6-7, 8 attached to 5
///
/// Removing vertex 1 of E8, vertex 6 of E7 or vertex 6 of E6 leaves E7, D6
/// and A5 respectively (with the remaining vertices relabelled in order).
struct LieAlgebra {
    AlgebraName name;
    int rank = 0;
    std::vector<std::vector<int>> incidence;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<Rational>> inverse_cartan;
    /// inverse_cartan == inverse_cartan_scaled / inverse_cartan_den, entrywise.
    std::vector<std::vector<std::int64_t>> inverse_cartan_scaled;
    std::int64_t inverse_cartan_den = 1;
    std::vector<int> marked_vertices;
    /// p of the F-polynomials: 3 for A5, 5 for D6, 1 for E7.
    std::optional<int> distinguished_vertex;
};

/// Validated, immutable table for one of the five algebras.
const LieAlgebra& algebra(AlgebraName name);
const LieAlgebra& algebra(std::string_view name);

/// n C^{-1} n, exact.
Rational quad_form_invcartan(const LieAlgebra& g, std::span<const std::int64_t> n);
/// m C m (callers apply the 1/4).
Rational quad_form_cartan(const LieAlgebra& g, std::span<const std::int64_t> m);

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& a);

}  // namespace qtrin
