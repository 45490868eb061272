#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "qtrin/bosonic.hpp"
#include "qtrin/qcomb.hpp"
#include "qtrin/verify.hpp"

namespace qtrin::cli {

namespace {

using json = nlohmann::json;

struct Output {
    std::string format = "text";
    std::ostream* out = nullptr;

    void poly(const std::string& what, const QPoly& p) const {
        if (format == "json") {
            *out << json{{"object", what}, {"value", p.to_string()}}.dump() << "\n";
        } else {
            *out << p.to_string() << "\n";
        }
    }

    void series(const std::string& what, const QSeries& s) const {
        if (format == "json") {
            *out << json{{"object", what}, {"value", s.poly().to_string()}, {"order", s.order().to_string()}}.dump()
                 << "\n";
        } else {
            *out << s.to_string() << "\n";
        }
    }
};

void add_format(CLI::App* cmd, Output& o) {
    cmd->add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"text", "json"}));
}

std::string matrix_text(const std::vector<std::vector<std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& r : rows) {
        for (const auto& c : r) width = std::max(width, c.size());
    }
    std::string out;
    for (const auto& r : rows) {
        out += " ";
        for (const auto& c : r) out += " " + std::string(width - c.size(), ' ') + c;
        out += "\n";
    }
    return out;
}

template <typename T>
std::vector<std::vector<std::string>> stringify(const std::vector<std::vector<T>>& m) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : m) {
        out.emplace_back();
        for (const auto& v : r) {
            if constexpr (std::is_same_v<T, Rational>) {
                out.back().push_back(v.to_string());
            } else {
                out.back().push_back(std::to_string(v));
            }
        }
    }
    return out;
}

std::string report_line(const VerificationReport& r) {
    std::string line = (r.passed() ? "PASS " : "FAIL ") + r.identity + " [" + std::string(to_string(r.status)) +
                       ", " + std::string(to_string(r.kind)) + "] points=" + std::to_string(r.points);
    if (r.order) line += " order=" + std::to_string(*r.order);
    if (!r.grid.empty()) line += " grid=" + r.grid;
    if (!r.passed()) {
        const Failure& f = r.failures.front();
        line += " failures=" + std::to_string(r.failures.size()) + " first: " + format_point(f.params) + " " +
                f.comparison + " q^(" + f.exponent.to_string() + ") lhs=" + f.lhs.to_string() +
                " rhs=" + f.rhs.to_string();
    }
    return line;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series toolkit for refined q-trinomial identities", "qtrin"};
    app.require_subcommand(1);
    Output o{"text", &out};

    // compute
    auto* compute = app.add_subcommand("compute", "Evaluate one object");
    compute->require_subcommand(1);
    std::int64_t n1 = 0, n2 = 0, n3 = 0, n4 = 0, k = 1, L = 0, M = 0, order = 12;
    int sigma = 0;
    std::string name;

    auto* qbin = compute->add_subcommand("qbin", "Gaussian polynomial [n, a]");
    qbin->add_option("n", n1)->required();
    qbin->add_option("a", n2)->required();
    auto* trin = compute->add_subcommand("trin", "Round-bracket q-trinomial (L a)_2");
    trin->add_option("L", n1)->required();
    trin->add_option("a", n2)->required();
    auto* tT = compute->add_subcommand("T", "q-trinomial T(L, a)");
    tT->add_option("L", n1)->required();
    tT->add_option("a", n2)->required();
    auto* rT = compute->add_subcommand("rT", "Refined trinomial T(L, M, a, b)");
    rT->add_option("L", n1)->required();
    rT->add_option("M", n2)->required();
    rT->add_option("a", n3)->required();
    rT->add_option("b", n4)->required();
    auto* fp = compute->add_subcommand("F", "F-polynomial F^g_{M;sigma}");
    fp->add_option("algebra", name)->required()->check(CLI::IsMember({"A5", "D6", "E7"}));
    fp->add_option("M", n1)->required();
    fp->add_option("sigma", sigma)->required()->check(CLI::Range(0, 1));
    auto* rhs = compute->add_subcommand("rhs", "Fermionic side of a polynomial identity");
    auto* lhs = compute->add_subcommand("lhs", "Bosonic side of a polynomial identity");
    for (auto* c : {rhs, lhs}) {
        c->add_option("name", name)
            ->required()
            ->check(CLI::IsMember({"conj1", "conj2", "conj3", "flower", "flower2", "monster"}));
        c->add_option("--k", k, "Iteration depth (k-series)")->check(CLI::Range(std::int64_t{1}, std::int64_t{64}));
        c->add_option("--L", L)->check(CLI::NonNegativeNumber);
        c->add_option("--M", M)->check(CLI::NonNegativeNumber);
    }
    auto* ferm = compute->add_subcommand("ferm", "Fermionic character sum");
    ferm->add_option("family", name)->required()->check(CLI::IsMember({"E8", "E7", "E6", "D6-B46", "A5-B68"}));
    ferm->add_option("--sigma", sigma)->check(CLI::Range(0, 1));
    auto* chi = compute->add_subcommand("chi", "Virasoro character chi^{(p,p')}_{r,s}");
    chi->add_option("p", n1)->required();
    chi->add_option("pp", n2)->required();
    chi->add_option("r", n3)->required();
    chi->add_option("s", n4)->required();
    auto* bf = compute->add_subcommand("B", "Branching function B^{(p,p')}_{r,s;sigma}");
    bf->add_option("p", n1)->required();
    bf->add_option("pp", n2)->required();
    bf->add_option("r", n3)->required();
    bf->add_option("s", n4)->required();
    bf->add_option("sigma", sigma)->required()->check(CLI::Range(0, 1));
    auto* cf = compute->add_subcommand("c", "String function c_sigma");
    cf->add_option("sigma", sigma)->required()->check(CLI::Range(0, 1));
    for (auto* c : {ferm, chi, bf, cf}) {
        c->add_option("--order", order, "Truncation order")->check(CLI::Range(std::int64_t{1}, std::int64_t{10000}));
    }
    for (auto* c : {qbin, trin, tT, rT, fp, rhs, lhs, ferm, chi, bf, cf}) add_format(c, o);

    // verify
    auto* verify = app.add_subcommand("verify", "Check identities on parameter grids");
    std::string identity, level = "full", json_path, grid_spec;
    std::optional<std::int64_t> vorder;
    unsigned threads = 1;
    bool strict = true;
    verify->add_option("identity", identity, "Identity name or 'all'")->required();
    verify->add_option("--level", level, "Grid level for 'all'")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--grid", grid_spec, "Grid override, e.g. L=0..6,M=0..6");
    verify->add_option("--order", vorder, "Series truncation order")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{10000}));
    verify->add_option("--json", json_path, "Write the JSON report here");
    verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
    verify->add_flag("--strict-conjectures,!--no-strict-conjectures", strict,
                     "Count conjecture failures against the exit status (default on)");

    // mn-solve
    auto* mn = app.add_subcommand("mn-solve", "Enumerate an (m,n)-system");
    std::int64_t N = 0;
    int vertex = 1;
    std::vector<std::string> parity, mod3;
    mn->add_option("algebra", name)->required()->check(CLI::IsMember({"A5", "D6", "E6", "E7", "E8"}));
    mn->add_option("N", N)->required()->check(CLI::NonNegativeNumber);
    mn->add_option("vertex", vertex)->required();
    mn->add_option("--parity", parity, "Linear form in n required to be even, e.g. n1+n3+n7+1");
    mn->add_option("--mod3", mod3, "Linear form in n required to vanish mod 3, e.g. n1+n4-n2-n5");
    add_format(mn, o);

    // algebra
    auto* alg = app.add_subcommand("algebra", "Lie algebra tables");
    alg->require_subcommand(1);
    auto* show = alg->add_subcommand("show", "Print incidence, Cartan and inverse Cartan matrices");
    show->add_option("name", name)->required()->check(CLI::IsMember({"A5", "D6", "E6", "E7", "E8"}));
    add_format(show, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*qbin) o.poly("qbin", qbinomial(n1, n2));
        if (*trin) o.poly("trin", qtrinomial2(n1, n2));
        if (*tT) o.poly("T", qtrinomial_T(n1, n2));
        if (*rT) o.poly("rT", refined_T(n1, n2, n3, n4));
        if (*fp) o.poly("F", f_poly({parse_algebra_name(name), n1, sigma}));
        if (*rhs || *lhs) {
            const bool is_rhs = static_cast<bool>(*rhs);
            QPoly v;
            if (name.rfind("conj", 0) == 0) {
                const int w = name.back() - '0';
                v = is_rhs ? conj_rhs(w, L, M) : conj_lhs(w, L, M);
            } else {
                const KSeriesArgs a{parse_kfamily(name), k, L, M};
                v = is_rhs ? kseries_rhs(a) : kseries_lhs(a);
            }
            o.poly(is_rhs ? "rhs" : "lhs", v);
        }
        if (*ferm) o.series("ferm", fermionic_char_sum(parse_char_family(name), sigma, Rational(order)));
        if (*chi) o.series("chi", virasoro_char({n1, n2, n3, n4}, Rational(order)));
        if (*bf) o.series("B", branching_function({n1, n2, n3, n4, sigma}, Rational(order)));
        if (*cf) o.series("c", string_function(sigma, Rational(order)));

        if (*verify) {
            VerifyOptions opts;
            opts.threads = threads;
            opts.order = vorder;
            std::vector<VerificationReport> reps;
            if (identity == "all") {
                if (!grid_spec.empty()) throw PreconditionViolation("--grid applies to a single identity");
                reps = verify_all(level == "quick" ? VerifyLevel::kQuick : VerifyLevel::kFull, opts);
            } else {
                if (!grid_spec.empty()) opts.grid = Grid::parse(grid_spec);
                reps.push_back(verify_identity(identity, opts));
            }
            for (const auto& r : reps) out << report_line(r) << "\n";
            const bool ok = aggregate_pass(reps, strict);
            out << (ok ? "OK" : "FAILED") << " " << reps.size() << " identities\n";
            if (!json_path.empty()) {
                std::ofstream f(json_path);
                if (!f) throw PreconditionViolation("cannot write " + json_path);
                f << reports_to_json(reps) << "\n";
            }
            return ok ? kOk : kVerificationFailed;
        }

        if (*mn) {
            const LieAlgebra& g = algebra(name);
            NFilter filter;
            for (const auto& p : parity) filter.push_back(parse_linear_form(p, 2, g.rank));
            for (const auto& p : mod3) filter.push_back(parse_linear_form(p, 3, g.rank));
            const auto sols = solve_mn_filtered({&g, N, vertex}, filter);
            if (o.format == "json") {
                json arr = json::array();
                for (const auto& s : sols) arr.push_back({{"m", s.m}, {"n", s.n}});
                out << arr.dump() << "\n";
            } else {
                for (const auto& s : sols) {
                    out << "m=" << format_basis_vector(s.m) << " n=" << format_basis_vector(s.n) << "\n";
                }
            }
        }

        if (*show) {
            const LieAlgebra& g = algebra(name);
            if (o.format == "json") {
                json inv = json::array();
                for (const auto& r : g.inverse_cartan) {
                    json row = json::array();
                    for (const auto& v : r) row.push_back(v.to_string());
                    inv.push_back(row);
                }
                out << json{{"name", std::string(to_string(g.name))},
                            {"rank", g.rank},
                            {"incidence", g.incidence},
                            {"cartan", g.cartan},
                            {"inverse_cartan", inv},
                            {"marked_vertices", g.marked_vertices}}
                           .dump()
                    << "\n";
            } else {
                out << to_string(g.name) << " (rank " << g.rank << ")\n";
                out << "incidence:\n" << matrix_text(stringify(g.incidence));
                out << "cartan:\n" << matrix_text(stringify(g.cartan));
                out << "inverse cartan:\n" << matrix_text(stringify(g.inverse_cartan));
                out << "marked vertices:";
                for (int v : g.marked_vertices) out << " " << v;
                out << "\n";
            }
        }
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace qtrin::cli
