#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtrin/qpoly.hpp"

namespace qtrin {

enum class IdentityKind { kPolynomialExact, kSeriesTruncated };
enum class IdentityStatus { kProved, kConjectured, kDerivedChain };

std::string_view to_string(IdentityKind k);
std::string_view to_string(IdentityStatus s);
IdentityKind parse_identity_kind(std::string_view s);
IdentityStatus parse_identity_status(std::string_view s);

struct Axis {
    std::string name;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    friend bool operator==(const Axis&, const Axis&) = default;
};

/// Cartesian product of integer ranges; the first axis varies slowest.
struct Grid {
    std::vector<Axis> axes;

    /// "L=0..8,M=0..8" ("" for a grid without axes).
    [[nodiscard]] std::string to_string() const;
    /// Parses "var=lo..hi" or "var=v" entries separated by commas.
    static Grid parse(std::string_view spec);
    /// Replaces the ranges of the axes named in `over`; unknown names throw
    /// PreconditionViolation.
    [[nodiscard]] Grid overridden(const Grid& over) const;
    friend bool operator==(const Grid&, const Grid&) = default;
};

using Point = std::vector<std::pair<std::string, std::int64_t>>;

/// Value of `name` in `p`; throws std::out_of_range when absent.
std::int64_t at(const Point& p, std::string_view name);
std::string format_point(const Point& p);

/// Both sides of one equation at one grid point. Series sides compare on
/// exponents below `order`; polynomial sides compare exactly.
struct Comparison {
    std::string label;
    QPoly lhs;
    QPoly rhs;
    std::optional<QExponent> order;
};

struct IdentityDescriptor {
    std::string name;
    IdentityKind kind = IdentityKind::kPolynomialExact;
    IdentityStatus status = IdentityStatus::kProved;
    std::string summary;
    Grid default_grid;
    Grid quick_grid;
    std::optional<std::int64_t> default_order;
    std::optional<std::int64_t> quick_order;
    std::function<bool(const Point&)> admissible;
    std::function<std::vector<Comparison>(const Point&, const std::optional<QExponent>&)> evaluate;
};

struct Failure {
    Point params;
    std::string comparison;
    QExponent exponent;
    Integer lhs;
    Integer rhs;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    std::string identity;
    IdentityStatus status = IdentityStatus::kProved;
    IdentityKind kind = IdentityKind::kPolynomialExact;
    std::string grid;
    std::optional<std::int64_t> order;
    std::int64_t points = 0;
    std::vector<Failure> failures;
    std::int64_t millis = 0;

    [[nodiscard]] bool passed() const { return failures.empty(); }
    [[nodiscard]] std::string to_json() const;
    static VerificationReport from_json(std::string_view text);
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Adds `delta` to one coefficient of one side, to test that the engine
/// notices. The exponent defaults to the lowest term of that side (or 0).
struct Mutation {
    std::size_t point_index = 0;
    std::size_t comparison_index = 0;
    bool lhs_side = true;
    std::optional<QExponent> exponent;
    std::int64_t delta = 1;
};

struct VerifyOptions {
    std::optional<Grid> grid;
    std::optional<std::int64_t> order;
    unsigned threads = 1;  // 0: hardware concurrency
    /// A point whose sides together hold more terms than this throws RunawayGuard.
    std::size_t term_ceiling = 5'000'000;
    std::optional<Mutation> mutation;
};

enum class VerifyLevel { kQuick, kFull };

/// The fixed registry, in a stable order.
const std::vector<IdentityDescriptor>& identity_registry();
/// Throws UnknownIdentity.
const IdentityDescriptor& find_identity(std::string_view name);

/// Points of a grid admitted by the descriptor, in iteration order.
std::vector<Point> grid_points(const IdentityDescriptor& d, const Grid& g);

VerificationReport verify_identity(std::string_view name, const VerifyOptions& opts = {});
VerificationReport verify_identity(const IdentityDescriptor& d, const VerifyOptions& opts);
std::vector<VerificationReport> verify_all(VerifyLevel level, const VerifyOptions& opts = {});

/// Pass iff every report passes; with strict_conjectures off, failures of
/// conjectured identities are reported but do not fail the aggregate.
bool aggregate_pass(const std::vector<VerificationReport>& reports, bool strict_conjectures = true);

std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace qtrin
