#include <gtest/gtest.h>

#include <set>

#include "qtrin/errors.hpp"
#include "qtrin/verify.hpp"

using qtrin::Grid;
using qtrin::VerificationReport;
using qtrin::VerifyOptions;

TEST(Registry, HoldsTheFullIdentitySet) {
    const std::set<std::string> want = {
        "dual", "symmetry", "vanish", "mTtoT", "mTtot", "thm1", "con10", "abp", "conj1", "conj2", "conj3",
        "flower-k1", "flower-k2", "flower2-k1", "flower2-k2", "monster-k1", "monster-k2", "E8", "E7conj-s0",
        "E7conj-s1", "E6", "B35-eq-chi45", "B46-simplification-s0", "B46-simplification-s1", "D6-B46-fermionic",
        "A5-B68-fermionic", "fam1-k1", "fam1-k2", "fam2-k1", "fam2-k2", "fam3-k1", "fam3-k2", "X-k2", "X-k3",
        "X2-k2", "X2-k3", "X3-k2", "X3-k3", "limit-tlim", "limit-Tlim", "limit-mTlim"};
    std::set<std::string> got;
    for (const auto& d : qtrin::identity_registry()) {
        EXPECT_TRUE(got.insert(d.name).second) << "duplicate " << d.name;
        EXPECT_TRUE(d.evaluate) << d.name;
        EXPECT_TRUE(d.admissible) << d.name;
    }
    EXPECT_EQ(got, want);
    EXPECT_THROW(qtrin::find_identity("conj4"), qtrin::UnknownIdentity);
}

TEST(Registry, ConjecturesAreLabelled) {
    for (const char* n : {"conj1", "conj2", "conj3", "E7conj-s0", "E7conj-s1", "E6"}) {
        EXPECT_EQ(qtrin::find_identity(n).status, qtrin::IdentityStatus::kConjectured) << n;
    }
    EXPECT_EQ(qtrin::find_identity("thm1").status, qtrin::IdentityStatus::kProved);
    EXPECT_EQ(qtrin::find_identity("E8").kind, qtrin::IdentityKind::kSeriesTruncated);
}

TEST(GridSpec, ParseFormatAndOverride) {
    const Grid g = Grid::parse("L=0..8,M=3");
    EXPECT_EQ(g.to_string(), "L=0..8,M=3..3");
    const Grid o = g.overridden(Grid::parse("M=1..2"));
    EXPECT_EQ(o.to_string(), "L=0..8,M=1..2");
    EXPECT_THROW(g.overridden(Grid::parse("Q=1")), qtrin::PreconditionViolation);
    EXPECT_THROW(Grid::parse("L=3..1"), std::invalid_argument);
    EXPECT_THROW(Grid::parse("L"), std::invalid_argument);
    EXPECT_EQ(Grid::parse("").to_string(), "");
}

TEST(GridSpec, AdmissibilityFiltersPoints) {
    const auto& d = qtrin::find_identity("thm1");
    const auto pts = qtrin::grid_points(d, Grid::parse("L=1,M=1,a=-1..1,b=-1..1"));
    EXPECT_EQ(pts.size(), 7U);  // (a,b) with a*b >= 0
}

TEST(Engine, PassingReportRoundTripsThroughJson) {
    VerifyOptions opts;
    opts.grid = Grid::parse("L=0..3,M=0..3");
    const VerificationReport r = qtrin::verify_identity("conj1", opts);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.points, 16);
    EXPECT_EQ(VerificationReport::from_json(r.to_json()), r);
}

TEST(Engine, MutationIsDetectedAndReported) {
    for (const char* name : {"dual", "thm1", "conj2", "E8", "flower-k1"}) {
        VerifyOptions opts;
        opts.grid = qtrin::find_identity(name).quick_grid;
        opts.order = qtrin::find_identity(name).quick_order;
        ASSERT_TRUE(qtrin::verify_identity(name, opts).passed()) << name;
        for (bool lhs : {true, false}) {
            opts.mutation = qtrin::Mutation{0, 0, lhs, std::nullopt, 1};
            const auto r = qtrin::verify_identity(name, opts);
            ASSERT_EQ(r.failures.size(), 1U) << name;
            const auto& f = r.failures[0];
            EXPECT_EQ(f.lhs - f.rhs, qtrin::Integer(lhs ? 1 : -1)) << name;
            EXPECT_EQ(VerificationReport::from_json(r.to_json()), r);
        }
    }
}

TEST(Engine, MutationAtChosenExponentAndPoint) {
    VerifyOptions opts;
    opts.grid = Grid::parse("L=2..3,M=1..2,a=0..1,b=0..1");
    opts.mutation = qtrin::Mutation{3, 0, false, qtrin::QExponent(7), -2};
    const auto r = qtrin::verify_identity("dual", opts);
    ASSERT_EQ(r.failures.size(), 1U);
    EXPECT_EQ(r.failures[0].exponent, qtrin::QExponent(7));
    EXPECT_EQ(r.failures[0].rhs - r.failures[0].lhs, qtrin::Integer(-2));
}

TEST(Engine, ThreadedRunMatchesSingleThreaded) {
    VerifyOptions one, many;
    one.grid = many.grid = Grid::parse("L=0..5,M=0..4,a=-3..3,b=-3..3");
    many.threads = 4;
    one.mutation = many.mutation = qtrin::Mutation{17, 0, true, std::nullopt, 1};
    auto a = qtrin::verify_identity("thm1", one);
    auto b = qtrin::verify_identity("thm1", many);
    a.millis = b.millis = 0;
    EXPECT_EQ(a, b);
}

TEST(Engine, RunawayGuardTrips) {
    VerifyOptions opts;
    opts.grid = Grid::parse("L=6,M=6,a=0,b=0");
    opts.term_ceiling = 10;
    EXPECT_THROW(qtrin::verify_identity("thm1", opts), qtrin::RunawayGuard);
}

TEST(Engine, StrictConjecturesGateTheAggregate) {
    VerificationReport proved, conj;
    proved.identity = "thm1";
    conj.identity = "conj1";
    conj.status = qtrin::IdentityStatus::kConjectured;
    conj.failures.push_back({{{"L", 1}}, "lhs=rhs", qtrin::QExponent(0), qtrin::Integer(1), qtrin::Integer(0)});
    EXPECT_FALSE(qtrin::aggregate_pass({proved, conj}, true));
    EXPECT_TRUE(qtrin::aggregate_pass({proved, conj}, false));
    proved.failures = conj.failures;
    EXPECT_FALSE(qtrin::aggregate_pass({proved, conj}, false));
}

TEST(Engine, QuickLevelPassesEverything) {
    VerifyOptions opts;
    opts.threads = 0;
    const auto reports = qtrin::verify_all(qtrin::VerifyLevel::kQuick, opts);
    EXPECT_EQ(reports.size(), qtrin::identity_registry().size());
    for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.identity;
}

TEST(Enums, TextRoundTrip) {
    for (auto k : {qtrin::IdentityKind::kPolynomialExact, qtrin::IdentityKind::kSeriesTruncated}) {
        EXPECT_EQ(qtrin::parse_identity_kind(qtrin::to_string(k)), k);
    }
    for (auto s : {qtrin::IdentityStatus::kProved, qtrin::IdentityStatus::kConjectured,
                   qtrin::IdentityStatus::kDerivedChain}) {
        EXPECT_EQ(qtrin::parse_identity_status(qtrin::to_string(s)), s);
    }
}
