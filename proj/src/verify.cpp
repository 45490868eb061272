#include "qtrin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qtrin/bosonic.hpp"
#include "qtrin/qcomb.hpp"

namespace qtrin {

namespace {

using json = nlohmann::json;
using Opt = std::optional<QExponent>;

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

Comparison exact(std::string label, QPoly lhs, QPoly rhs) {
    return {std::move(label), std::move(lhs), std::move(rhs), std::nullopt};
}

Comparison series(std::string label, const QSeries& lhs, const QSeries& rhs) {
    const QExponent o = std::min(lhs.order(), rhs.order());
    return {std::move(label), lhs.poly(), rhs.poly(), o};
}

Grid grid(std::initializer_list<Axis> axes) { return Grid{std::vector<Axis>(axes)}; }

bool any_point(const Point&) { return true; }

// Refinement sums, both mirrored sign cases.
bool refinement_admissible(const Point& p) {
    const std::int64_t L = at(p, "L"), a = at(p, "a"), b = at(p, "b");
    const bool same = (a >= b && b >= 0) || (a <= b && b <= 0);
    return same && iabs(a) <= L;
}

QPoly mttot_lhs(std::int64_t L, std::int64_t a, std::int64_t b) {
    QPoly out;
    for (std::int64_t i = iabs(b); i <= L - iabs(a - b); ++i) {
        out.add_scaled(refined_T(i, L - i, b, a - b), Rational(i * i - b * b, 2));
    }
    return out;
}

QPoly mttoT_lhs(std::int64_t L, std::int64_t a, std::int64_t b) {
    QPoly out;
    for (std::int64_t i = iabs(b); i <= L - iabs(a - b); ++i) {
        out.add_scaled(refined_T(L - i, i, a - b, b), Rational(i * i - b * b, 2));
    }
    return out;
}

IdentityDescriptor conj_descriptor(int which) {
    IdentityDescriptor d;
    d.name = "conj" + std::to_string(which);
    d.kind = IdentityKind::kPolynomialExact;
    d.status = IdentityStatus::kConjectured;
    d.summary = std::string("alternating refined-trinomial sum equals the ") +
                (which == 1 ? "E7" : which == 2 ? "D6" : "A5") + " fermionic sum";
    d.default_grid = grid({{"L", 0, 5}, {"M", 0, 5}});
    d.quick_grid = grid({{"L", 0, 3}, {"M", 0, 3}});
    d.admissible = any_point;
    d.evaluate = [which](const Point& p, const Opt&) {
        const auto L = at(p, "L"), M = at(p, "M");
        return std::vector<Comparison>{exact("lhs=rhs", conj_lhs(which, L, M), conj_rhs(which, L, M))};
    };
    return d;
}

IdentityDescriptor kseries_descriptor(KFamily fam, std::int64_t k) {
    IdentityDescriptor d;
    d.name = std::string(to_string(fam)) + "-k" + std::to_string(k);
    d.kind = IdentityKind::kPolynomialExact;
    d.status = IdentityStatus::kDerivedChain;
    d.summary = "iterated polynomial identity of the " + std::string(to_string(fam)) + " series";
    d.default_grid = grid({{"L", 0, 3}, {"M", 0, 3}});
    d.quick_grid = grid({{"L", 0, 2}, {"M", 0, 2}});
    d.admissible = any_point;
    d.evaluate = [fam, k](const Point& p, const Opt&) {
        const KSeriesArgs args{fam, k, at(p, "L"), at(p, "M")};
        return std::vector<Comparison>{exact("lhs=rhs", kseries_lhs(args), kseries_rhs(args))};
    };
    return d;
}

IdentityDescriptor series_descriptor(std::string name, IdentityStatus status, std::string summary,
                                     Grid g, std::int64_t order, std::int64_t quick_order,
                                     std::function<std::vector<Comparison>(const Point&, const QExponent&)> f) {
    IdentityDescriptor d;
    d.name = std::move(name);
    d.kind = IdentityKind::kSeriesTruncated;
    d.status = status;
    d.summary = std::move(summary);
    d.default_grid = g;
    d.quick_grid = g;
    d.default_order = order;
    d.quick_order = quick_order;
    d.admissible = any_point;
    d.evaluate = [f = std::move(f), order](const Point& p, const Opt& o) {
        return f(p, o ? *o : QExponent(order));
    };
    return d;
}

std::vector<IdentityDescriptor> build_registry() {
    std::vector<IdentityDescriptor> r;
    const auto proved = IdentityStatus::kProved;
    const auto conjectured = IdentityStatus::kConjectured;
    const auto derived = IdentityStatus::kDerivedChain;

    {
        IdentityDescriptor d;
        d.name = "dual";
        d.summary = "T(L,M,a,b; 1/q) = q^{ab-ML} T(L,M,a,b; q)";
        d.default_grid = grid({{"L", 0, 8}, {"M", 0, 8}, {"a", -4, 4}, {"b", -4, 4}});
        d.quick_grid = grid({{"L", 0, 5}, {"M", 0, 5}, {"a", -3, 3}, {"b", -3, 3}});
        d.admissible = any_point;
        d.evaluate = [](const Point& p, const Opt&) {
            const RefinedArgs a{at(p, "L"), at(p, "M"), at(p, "a"), at(p, "b")};
            const QPoly t = refined_T(a);
            return std::vector<Comparison>{
                exact("dual", t.substituted_qinv(), t.shifted(Rational(a.a * a.b - a.M * a.L)))};
        };
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.name = "symmetry";
        d.summary = "T(L,M,a,b) = T(L,M,-a,-b)";
        d.default_grid = grid({{"L", 0, 8}, {"M", 0, 8}, {"a", -8, 8}, {"b", -8, 8}});
        d.quick_grid = grid({{"L", 0, 5}, {"M", 0, 5}, {"a", -5, 5}, {"b", -5, 5}});
        d.admissible = [](const Point& p) {
            return iabs(at(p, "a")) <= at(p, "L") && iabs(at(p, "b")) <= at(p, "M");
        };
        d.evaluate = [](const Point& p, const Opt&) {
            const auto L = at(p, "L"), M = at(p, "M"), a = at(p, "a"), b = at(p, "b");
            return std::vector<Comparison>{exact("symmetry", refined_T(L, M, a, b), refined_T(L, M, -a, -b))};
        };
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.name = "vanish";
        d.summary = "T(L,M,a,b) = 0 when |a| > L or |b| > M";
        d.default_grid = grid({{"L", 0, 8}, {"M", 0, 8}, {"a", -10, 10}, {"b", -10, 10}});
        d.quick_grid = grid({{"L", 0, 4}, {"M", 0, 4}, {"a", -6, 6}, {"b", -6, 6}});
        d.admissible = [](const Point& p) {
            return iabs(at(p, "a")) > at(p, "L") || iabs(at(p, "b")) > at(p, "M");
        };
        d.evaluate = [](const Point& p, const Opt&) {
            return std::vector<Comparison>{
                exact("zero", refined_T(at(p, "L"), at(p, "M"), at(p, "a"), at(p, "b")), QPoly())};
        };
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.name = "mTtoT";
        d.summary = "sum_i q^{(i^2-b^2)/2} T(L-i,i,a-b,b) = T(L,a)";
        d.default_grid = grid({{"L", 0, 8}, {"a", -8, 8}, {"b", -8, 8}});
        d.quick_grid = grid({{"L", 0, 5}, {"a", -5, 5}, {"b", -5, 5}});
        d.admissible = refinement_admissible;
        d.evaluate = [](const Point& p, const Opt&) {
            const auto L = at(p, "L"), a = at(p, "a"), b = at(p, "b");
            return std::vector<Comparison>{exact("lhs=rhs", mttoT_lhs(L, a, b), qtrinomial_T(L, a))};
        };
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.name = "mTtot";
        d.summary = "sum_i q^{(i^2-b^2)/2} T(i,L-i,b,a-b) = (L a)_2";
        d.default_grid = grid({{"L", 0, 8}, {"a", -8, 8}, {"b", -8, 8}});
        d.quick_grid = grid({{"L", 0, 5}, {"a", -5, 5}, {"b", -5, 5}});
        d.admissible = refinement_admissible;
        d.evaluate = [](const Point& p, const Opt&) {
            const auto L = at(p, "L"), a = at(p, "a"), b = at(p, "b");
            return std::vector<Comparison>{exact("lhs=rhs", mttot_lhs(L, a, b), qtrinomial2(L, a))};
        };
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.name = "thm1";
        d.summary = "T-invariance summation";
        d.default_grid = grid({{"L", 0, 8}, {"M", 0, 8}, {"a", -4, 4}, {"b", -4, 4}});
        d.quick_grid = grid({{"L", 0, 5}, {"M", 0, 5}, {"a", -3, 3}, {"b", -3, 3}});
        d.admissible = [](const Point& p) {
            const auto a = at(p, "a"), b = at(p, "b");
            return (a >= 0 && b >= 0) || (a <= 0 && b <= 0);
        };
        d.evaluate = [](const Point& p, const Opt&) {
            const auto L = at(p, "L"), M = at(p, "M"), a = at(p, "a"), b = at(p, "b");
            return std::vector<Comparison>{exact("lhs=rhs", theorem1_lhs(L, M, a, b), theorem1_rhs(L, M, a, b))};
        };
        r.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.name = "con10";
        d.summary = "sum_i q^{i^2/2} [L,i] T(i,b) = q^{b^2/2} [2L, L-b]";
        d.default_grid = grid({{"L", 0, 8}, {"b", -8, 8}});
        d.quick_grid = grid({{"L", 0, 5}, {"b", -5, 5}});
        d.admissible = [](const Point& p) { return iabs(at(p, "b")) <= at(p, "L"); };
        d.evaluate = [](const Point& p, const Opt&) {
            const auto L = at(p, "L"), b = at(p, "b");
            return std::vector<Comparison>{exact("lhs=rhs", con_lhs(L, b), con_rhs(L, b))};
        };
        r.push_back(std::move(d));
    }
    r.push_back(series_descriptor("abp", proved, "sum_i q^{i^2/2} T(i,b)/(q)_i = q^{b^2/2}/(q)_inf",
                                  grid({{"b", -4, 4}}), 12, 8, [](const Point& p, const QExponent& o) {
                                      const auto b = at(p, "b");
                                      return std::vector<Comparison>{series("lhs=rhs", abp_lhs(b, o), abp_rhs(b, o))};
                                  }));
    for (int w = 1; w <= 3; ++w) r.push_back(conj_descriptor(w));
    for (auto fam : {KFamily::kFlower, KFamily::kFlower2, KFamily::kMonster}) {
        for (std::int64_t k = 1; k <= 2; ++k) r.push_back(kseries_descriptor(fam, k));
    }
    r.push_back(series_descriptor(
        "E8", proved, "E8 fermionic sum = chi^{(3,4)}_{1,1} = product", Grid{}, 12, 8,
        [](const Point&, const QExponent& o) {
            const QSeries chi = virasoro_char({3, 4, 1, 1}, o);
            return std::vector<Comparison>{series("fermionic=chi", fermionic_char_sum(CharFamily::kE8, 0, o), chi),
                                           series("chi=product", chi, e8_product(o))};
        }));
    for (int s = 0; s <= 1; ++s) {
        r.push_back(series_descriptor(
            "E7conj-s" + std::to_string(s), conjectured, "E7 fermionic sum = chi^{(4,5)}_{2s+1,1}", Grid{}, 12, 8,
            [s](const Point&, const QExponent& o) {
                return std::vector<Comparison>{series("fermionic=chi", fermionic_char_sum(CharFamily::kE7, s, o),
                                                      virasoro_char({4, 5, 2 * s + 1, 1}, o))};
            }));
    }
    r.push_back(series_descriptor(
        "E6", conjectured, "E6 fermionic sum = chi^{(6,7)}_{1,1} + chi^{(6,7)}_{5,1}", Grid{}, 12, 8,
        [](const Point&, const QExponent& o) {
            return std::vector<Comparison>{series("fermionic=chi", fermionic_char_sum(CharFamily::kE6, 0, o),
                                                  virasoro_char({6, 7, 1, 1}, o) + virasoro_char({6, 7, 5, 1}, o))};
        }));
    r.push_back(series_descriptor(
        "B35-eq-chi45", proved, "B^{(3,5)}_{1,1;s} = chi^{(4,5)}_{2s+1,1}", grid({{"sigma", 0, 1}}), 15, 10,
        [](const Point& p, const QExponent& o) {
            const int s = static_cast<int>(at(p, "sigma"));
            return std::vector<Comparison>{
                series("B=chi", branching_function({3, 5, 1, 1, s}, o), virasoro_char({4, 5, 2 * s + 1, 1}, o))};
        }));
    r.push_back(series_descriptor(
        "B46-simplification-s0", conjectured, "B^{(4,6)}_{1,1;0} closed form", Grid{}, 20, 12,
        [](const Point&, const QExponent& o) {
            return std::vector<Comparison>{
                series("B=closed", branching_function({4, 6, 1, 1, 0}, o), b46_simplified(0, o))};
        }));
    r.push_back(series_descriptor(
        "B46-simplification-s1", conjectured, "B^{(4,6)}_{1,1;1} closed and product forms", Grid{}, 20, 12,
        [](const Point&, const QExponent& o) {
            const QSeries closed = b46_simplified(1, o);
            return std::vector<Comparison>{series("B=closed", branching_function({4, 6, 1, 1, 1}, o), closed),
                                           series("closed=product", closed, b46_simplified_product(o))};
        }));
    r.push_back(series_descriptor(
        "D6-B46-fermionic", conjectured, "D6 fermionic sum = B^{(4,6)}_{1,1;s}", grid({{"sigma", 0, 1}}), 12, 8,
        [](const Point& p, const QExponent& o) {
            const int s = static_cast<int>(at(p, "sigma"));
            return std::vector<Comparison>{series("fermionic=B", fermionic_char_sum(CharFamily::kD6B46, s, o),
                                                  branching_function({4, 6, 1, 1, s}, o))};
        }));
    r.push_back(series_descriptor(
        "A5-B68-fermionic", conjectured, "A5 fermionic sum = B^{(6,8)}_{1,1;s} + B^{(6,8)}_{1,7;1-s}",
        grid({{"sigma", 0, 1}}), 12, 8, [](const Point& p, const QExponent& o) {
            const int s = static_cast<int>(at(p, "sigma"));
            return std::vector<Comparison>{
                series("fermionic=B", fermionic_char_sum(CharFamily::kA5B68, s, o),
                       branching_function({6, 8, 1, 1, s}, o) + branching_function({6, 8, 1, 7, 1 - s}, o))};
        }));
    for (int fam = 1; fam <= 3; ++fam) {
        for (std::int64_t k = 1; k <= 2; ++k) {
            r.push_back(series_descriptor(
                "fam" + std::to_string(fam) + "-k" + std::to_string(k), derived,
                "F-sum family " + std::to_string(fam) + " against its character side", grid({{"sigma", 0, 1}}), 8, 6,
                [fam, k](const Point& p, const QExponent& o) {
                    const int s = static_cast<int>(at(p, "sigma"));
                    return std::vector<Comparison>{
                        series("lhs=rhs", fsum_family_lhs(fam, k, s, o), fsum_family_rhs(fam, k, s, o))};
                }));
        }
    }
    const char* xnames[] = {"X", "X2", "X3"};
    for (int fam = 1; fam <= 3; ++fam) {
        for (std::int64_t k = 2; k <= 3; ++k) {
            r.push_back(series_descriptor(
                std::string(xnames[fam - 1]) + "-k" + std::to_string(k), derived,
                "r- and m-sum against Virasoro characters", Grid{}, 8, 6, [fam, k](const Point&, const QExponent& o) {
                    return std::vector<Comparison>{series("lhs=rhs", x_series_lhs(fam, k, o), x_series_rhs(fam, k, o))};
                }));
        }
    }
    r.push_back(series_descriptor(
        "limit-tlim", proved, "(L a)_2 -> 1/(q)_inf", grid({{"a", 0, 3}}), 10, 6,
        [](const Point& p, const QExponent& o) {
            const auto a = at(p, "a");
            const std::int64_t L = 2 * o.ceil().to_int64() + 2 * a + 2;
            const QSeries x = series_from_poly(qtrinomial2(L, a), o);
            const QSeries y = series_from_poly(qtrinomial2(L + 1, a), o);
            return std::vector<Comparison>{series("L=L+1", x, y),
                                           series("limit", x, inverse_q_pochhammer(std::nullopt, o))};
        }));
    r.push_back(series_descriptor(
        "limit-Tlim", proved, "T(L,a) -> c_sigma for L+a+sigma even", grid({{"a", 0, 3}, {"sigma", 0, 1}}), 10, 6,
        [](const Point& p, const QExponent& o) {
            const auto a = at(p, "a");
            const int s = static_cast<int>(at(p, "sigma"));
            std::int64_t L = 2 * o.ceil().to_int64() + 2 * a + 2;
            if ((L + a + s) % 2 != 0) ++L;
            const QSeries x = series_from_poly(qtrinomial_T(L, a), o);
            const QSeries y = series_from_poly(qtrinomial_T(L + 2, a), o);
            return std::vector<Comparison>{series("L=L+2", x, y), series("limit", x, string_function(s, o))};
        }));
    {
        IdentityDescriptor d = series_descriptor(
            "limit-mTlim", proved, "T(L,M,a,b) -> T(L,a)/(q)_L as M grows",
            grid({{"L", 0, 4}, {"a", -4, 4}, {"b", 0, 2}}), 10, 6, [](const Point& p, const QExponent& o) {
                const auto L = at(p, "L"), a = at(p, "a"), b = at(p, "b");
                const std::int64_t M = o.ceil().to_int64() + L + b + 2;
                const QSeries x = series_from_poly(refined_T(L, M, a, b), o);
                const QSeries y = series_from_poly(refined_T(L, M + 1, a, b), o);
                const QSeries lim = qtrinomial_T(L, a) * inverse_q_pochhammer(L, o);
                return std::vector<Comparison>{series("M=M+1", x, y), series("limit", x, lim)};
            });
        d.quick_grid = grid({{"L", 0, 3}, {"a", -3, 3}, {"b", 0, 1}});
        d.admissible = [](const Point& p) { return iabs(at(p, "a")) <= at(p, "L"); };
        r.push_back(std::move(d));
    }
    return r;
}

json rational_json(const QExponent& e) { return e.to_string(); }

}  // namespace

std::string_view to_string(IdentityKind k) {
    return k == IdentityKind::kPolynomialExact ? "polynomial-exact" : "series-truncated";
}

std::string_view to_string(IdentityStatus s) {
    switch (s) {
        case IdentityStatus::kProved: return "proved-in-paper";
        case IdentityStatus::kConjectured: return "conjectured-in-paper";
        case IdentityStatus::kDerivedChain: return "derived-chain";
    }
    return "?";
}

IdentityKind parse_identity_kind(std::string_view s) {
    if (s == "polynomial-exact") return IdentityKind::kPolynomialExact;
    if (s == "series-truncated") return IdentityKind::kSeriesTruncated;
    throw std::invalid_argument("unknown identity kind '" + std::string(s) + "'");
}

IdentityStatus parse_identity_status(std::string_view s) {
    if (s == "proved-in-paper") return IdentityStatus::kProved;
    if (s == "conjectured-in-paper") return IdentityStatus::kConjectured;
    if (s == "derived-chain") return IdentityStatus::kDerivedChain;
    throw std::invalid_argument("unknown identity status '" + std::string(s) + "'");
}

std::string Grid::to_string() const {
    std::string out;
    for (const auto& a : axes) {
        if (!out.empty()) out += ",";
        out += a.name + "=" + std::to_string(a.lo) + ".." + std::to_string(a.hi);
    }
    return out;
}

Grid Grid::parse(std::string_view spec) {
    Grid g;
    auto fail = [&] { throw std::invalid_argument("bad grid spec '" + std::string(spec) + "'"); };
    auto to_int = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto* end = s.data() + s.size();
        const auto res = std::from_chars(s.data(), end, v);
        if (res.ec != std::errc() || res.ptr != end) fail();
        return v;
    };
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) comma = spec.size();
        const std::string_view item = spec.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) fail();
        Axis a;
        a.name = std::string(item.substr(0, eq));
        const std::string_view range = item.substr(eq + 1);
        const std::size_t dots = range.find("..");
        if (dots == std::string_view::npos) {
            a.lo = a.hi = to_int(range);
        } else {
            a.lo = to_int(range.substr(0, dots));
            a.hi = to_int(range.substr(dots + 2));
        }
        if (a.lo > a.hi) fail();
        g.axes.push_back(std::move(a));
        pos = comma + 1;
    }
    return g;
}

Grid Grid::overridden(const Grid& over) const {
    Grid g = *this;
    for (const auto& o : over.axes) {
        auto it = std::find_if(g.axes.begin(), g.axes.end(), [&](const Axis& a) { return a.name == o.name; });
        if (it == g.axes.end()) throw PreconditionViolation("grid has no axis '" + o.name + "'");
        *it = o;
    }
    return g;
}

std::int64_t at(const Point& p, std::string_view name) {
    for (const auto& [k, v] : p) {
        if (k == name) return v;
    }
    throw std::out_of_range("point has no coordinate '" + std::string(name) + "'");
}

std::string format_point(const Point& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += ",";
        out += k + "=" + std::to_string(v);
    }
    return out;
}

std::string VerificationReport::to_json() const {
    json j;
    j["identity"] = identity;
    j["status"] = std::string(qtrin::to_string(status));
    j["kind"] = std::string(qtrin::to_string(kind));
    j["grid"] = grid;
    j["order"] = order ? json(*order) : json(nullptr);
    j["points"] = points;
    j["passed"] = passed();
    j["failures"] = json::array();
    for (const auto& f : failures) {
        json params = json::object();
        for (const auto& [k, v] : f.params) params[k] = v;
        // Object keys are sorted by the serializer; keep the original order too.
        json keys = json::array();
        for (const auto& kv : f.params) keys.push_back(kv.first);
        j["failures"].push_back({{"params", params},
                                 {"param_order", keys},
                                 {"comparison", f.comparison},
                                 {"exponent", rational_json(f.exponent)},
                                 {"lhs", f.lhs.to_string()},
                                 {"rhs", f.rhs.to_string()}});
    }
    j["millis"] = millis;
    return j.dump();
}

VerificationReport VerificationReport::from_json(std::string_view text) {
    const json j = json::parse(text);
    VerificationReport r;
    r.identity = j.at("identity").get<std::string>();
    r.status = parse_identity_status(j.at("status").get<std::string>());
    r.kind = parse_identity_kind(j.at("kind").get<std::string>());
    r.grid = j.at("grid").get<std::string>();
    if (j.contains("order") && !j.at("order").is_null()) r.order = j.at("order").get<std::int64_t>();
    r.points = j.at("points").get<std::int64_t>();
    for (const auto& f : j.at("failures")) {
        Failure x;
        for (const auto& k : f.at("param_order")) {
            const auto key = k.get<std::string>();
            x.params.emplace_back(key, f.at("params").at(key).get<std::int64_t>());
        }
        x.comparison = f.at("comparison").get<std::string>();
        x.exponent = Rational::parse(f.at("exponent").get<std::string>());
        x.lhs = Integer::from_string(f.at("lhs").get<std::string>());
        x.rhs = Integer::from_string(f.at("rhs").get<std::string>());
        r.failures.push_back(std::move(x));
    }
    r.millis = j.at("millis").get<std::int64_t>();
    return r;
}

const std::vector<IdentityDescriptor>& identity_registry() {
    static const std::vector<IdentityDescriptor> registry = build_registry();
    return registry;
}

const IdentityDescriptor& find_identity(std::string_view name) {
    for (const auto& d : identity_registry()) {
        if (d.name == name) return d;
    }
    throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

std::vector<Point> grid_points(const IdentityDescriptor& d, const Grid& g) {
    std::vector<Point> out;
    Point p;
    for (const auto& a : g.axes) p.emplace_back(a.name, a.lo);
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == g.axes.size()) {
            if (!d.admissible || d.admissible(p)) out.push_back(p);
            return;
        }
        for (std::int64_t v = g.axes[i].lo; v <= g.axes[i].hi; ++v) {
            p[i].second = v;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

namespace {

void apply_mutation(Comparison& c, const Mutation& m) {
    QPoly& side = m.lhs_side ? c.lhs : c.rhs;
    QExponent e = m.exponent ? *m.exponent : (side.is_zero() ? QExponent(0) : side.min_exponent());
    side += QPoly::monomial(e, Integer(m.delta));
}

std::vector<Failure> compare(const Point& p, const std::vector<Comparison>& cs) {
    std::vector<Failure> out;
    for (const auto& c : cs) {
        const QPoly lhs = c.order ? c.lhs.truncated(*c.order) : c.lhs;
        const QPoly rhs = c.order ? c.rhs.truncated(*c.order) : c.rhs;
        if (const auto e = first_difference(lhs, rhs)) {
            out.push_back({p, c.label, *e, lhs.coefficient(*e), rhs.coefficient(*e)});
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_identity(const IdentityDescriptor& d, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const Grid g = opts.grid ? d.default_grid.overridden(*opts.grid) : d.default_grid;
    const std::vector<Point> points = grid_points(d, g);
    Opt order;
    if (d.kind == IdentityKind::kSeriesTruncated) order = Rational(opts.order.value_or(d.default_order.value_or(12)));

    std::vector<std::vector<Failure>> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    auto run_point = [&](std::size_t i) {
        try {
            std::vector<Comparison> cs = d.evaluate(points[i], order);
            std::size_t terms = 0;
            for (const auto& c : cs) terms += c.lhs.size() + c.rhs.size();
            if (terms > opts.term_ceiling) {
                throw RunawayGuard(d.name + " at " + format_point(points[i]) + " produced " +
                                   std::to_string(terms) + " terms");
            }
            if (opts.mutation && opts.mutation->point_index == i && opts.mutation->comparison_index < cs.size()) {
                apply_mutation(cs[opts.mutation->comparison_index], *opts.mutation);
            }
            results[i] = compare(points[i], cs);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, points.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) run_point(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < points.size();) run_point(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    VerificationReport rep;
    rep.identity = d.name;
    rep.status = d.status;
    rep.kind = d.kind;
    rep.grid = g.to_string();
    if (order) rep.order = order->ceil().to_int64();
    rep.points = static_cast<std::int64_t>(points.size());
    for (auto& f : results) {
        for (auto& x : f) rep.failures.push_back(std::move(x));
    }
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_identity(std::string_view name, const VerifyOptions& opts) {
    return verify_identity(find_identity(name), opts);
}

std::vector<VerificationReport> verify_all(VerifyLevel level, const VerifyOptions& opts) {
    std::vector<VerificationReport> out;
    for (const auto& d : identity_registry()) {
        VerifyOptions o = opts;
        o.grid.reset();
        o.mutation.reset();
        if (level == VerifyLevel::kQuick) {
            o.grid = d.quick_grid;
            if (!opts.order && d.quick_order) o.order = d.quick_order;
        }
        out.push_back(verify_identity(d, o));
    }
    return out;
}

bool aggregate_pass(const std::vector<VerificationReport>& reports, bool strict_conjectures) {
    return std::all_of(reports.begin(), reports.end(), [&](const VerificationReport& r) {
        return r.passed() || (!strict_conjectures && r.status == IdentityStatus::kConjectured);
    });
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(json::parse(r.to_json()));
    return arr.dump(2);
}

}  // namespace qtrin
