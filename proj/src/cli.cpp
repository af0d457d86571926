#include "lwik/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lwik/analysis.hpp"

namespace lwik::cli {

namespace {

using nlohmann::json;
using rep::RepresentationId;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

json cjson(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_real(std::string_view text) {
    const std::string t = trim(text);
    if (t == "e" || t == "+e") return kE;
    if (t == "-e") return -kE;
    if (t == "1/e") return kInvE;
    if (t == "-1/e") return -kInvE;
    if (t == "pi") return kPi;
    if (t == "-pi") return -kPi;
    if (t.empty()) throw SpecError("empty number");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v)) throw SpecError("cannot parse '" + t + "' as a real number");
    return v;
}

std::vector<RepresentationId> parse_reps(const std::vector<std::string>& tags, bool given) {
    std::vector<RepresentationId> ids;
    for (const auto& t : tags)
        if (!trim(t).empty()) ids.push_back(rep::parse_representation(trim(t)));
    if (!given) {
        for (const auto& in : rep::all_representations()) ids.push_back(in.id);
    } else if (ids.empty()) {
        throw UsageError("--rep filter selects no representation");
    }
    return ids;
}

quad::QuadratureSpec make_spec(RepresentationId id, double tol, const std::optional<quad::Rule>& rule) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be a positive number");
    if (rule) return quad::default_spec(*rule, tol);
    return rep::default_spec(id, tol);
}

std::optional<quad::Rule> parse_rule_opt(const std::string& name) {
    if (name.empty()) return std::nullopt;
    return quad::parse_rule(name);
}

std::int64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        });
    for (auto& t : pool) t.join();
}

// Subcommand options.

struct Common {
    double tol = 1e-10;
    std::string format = "csv";
    std::string rule;
};

struct EvalOpts {
    std::string rep;
    std::string z;
    double c = rep::kDefaultBranchC;
};

struct CompareOpts {
    std::vector<std::string> reps;
    std::vector<std::string> zs;
    std::string grid;
    bool no_timing = false;
};

struct IdentityOpts {
    std::string only = "all";
    int nu = 0;
};

struct CmOpts {
    std::string fn;
    std::string params;
    int order = 6;
    std::string grid = "0.3:30:16:log";
};

struct BenchOpts {
    std::vector<std::string> reps;
    std::string z = "2";
    std::string tols = "1e-6,1e-8,1e-10,1e-12";
    bool no_timing = false;
};

int cmd_eval(const Common& c, const EvalOpts& o, std::ostream& out) {
    const RepresentationId id = rep::parse_representation(o.rep);
    const Complex z = parse_complex(o.z);
    const auto spec = make_spec(id, c.tol, parse_rule_opt(c.rule));
    const auto r = rep::evaluate(id, z, spec, o.c);
    const Complex ref = rep::oracle_value(r.target, z);
    const double abs_err = std::abs(r.value - ref);
    const auto& in = rep::info(id);
    if (c.format == "json") {
        json j{{"rep", in.tag},
               {"target", rep::target_name(r.target)},
               {"z", cjson(z)},
               {"value", cjson(r.value)},
               {"oracle", cjson(ref)},
               {"abs_err_vs_oracle", abs_err},
               {"err_estimate", r.err_estimate},
               {"nodes", r.nodes_used},
               {"converged", r.converged},
               {"rule", quad::rule_name(spec.rule)},
               {"tol", spec.tol}};
        out << j.dump(2) << '\n';
    } else {
        out << "rep,target,z_re,z_im,value_re,value_im,oracle_re,oracle_im,abs_err_vs_oracle,err_estimate,nodes,"
               "converged,rule,tol\n";
        out << in.tag << ',' << rep::target_name(r.target) << ',' << num(z.real()) << ',' << num(z.imag()) << ','
            << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << num(ref.real()) << ',' << num(ref.imag())
            << ',' << num(abs_err) << ',' << num(r.err_estimate) << ',' << r.nodes_used << ','
            << (r.converged ? "true" : "false") << ',' << quad::rule_name(spec.rule) << ',' << num(spec.tol) << '\n';
    }
    return r.converged ? kOk : kNotConverged;
}

void write_rows(const std::vector<ComparisonRow>& rows, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            const auto& in = rep::info(r.rep);
            json j{{"rep", in.tag},
                   {"target", rep::target_name(in.target)},
                   {"z", cjson(r.z)},
                   {"status", r.status}};
            if (r.status == "ok" || r.status == "not-converged") {
                j["value"] = cjson(r.value);
                j["oracle"] = cjson(r.oracle);
                j["abs_err_vs_oracle"] = r.abs_err_vs_oracle;
                j["err_estimate"] = r.err_estimate;
                j["nodes"] = r.nodes;
                j["wall_time_ns"] = r.wall_time_ns;
            } else {
                j["message"] = r.message;
            }
            arr.push_back(j);
        }
        out << json{{"rows", arr}}.dump(2) << '\n';
        return;
    }
    out << "rep,target,z_re,z_im,status,value_re,value_im,oracle_re,oracle_im,abs_err_vs_oracle,err_estimate,nodes,"
           "wall_time_ns\n";
    for (const auto& r : rows) {
        const auto& in = rep::info(r.rep);
        out << in.tag << ',' << rep::target_name(in.target) << ',' << num(r.z.real()) << ',' << num(r.z.imag()) << ','
            << r.status;
        if (r.status == "ok" || r.status == "not-converged")
            out << ',' << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << num(r.oracle.real()) << ','
                << num(r.oracle.imag()) << ',' << num(r.abs_err_vs_oracle) << ',' << num(r.err_estimate) << ','
                << r.nodes << ',' << r.wall_time_ns;
        else
            out << ",,,,,,,,";
        out << '\n';
    }
}

std::vector<Complex> gather_points(const std::vector<std::string>& zs, const std::string& grid, bool default_one) {
    std::vector<Complex> pts;
    for (const auto& s : zs) pts.push_back(parse_complex(s));
    if (!grid.empty())
        for (double x : parse_grid(grid)) pts.emplace_back(x, 0.0);
    if (pts.empty() && default_one) pts.emplace_back(1.0, 0.0);
    return pts;
}

int cmd_compare(const Common& c, const CompareOpts& o, bool reps_given, std::ostream& out) {
    const auto ids = parse_reps(o.reps, reps_given);
    const auto pts = gather_points(o.zs, o.grid, true);
    const auto rows = compare(ids, pts, c.tol, parse_rule_opt(c.rule), !o.no_timing);
    write_rows(rows, c.format, out);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        bool any = false;
        for (std::size_t i = 0; i < ids.size(); ++i) any = any || rows[i * pts.size() + k].status != "out-of-domain";
        if (!any) return kDomain;
    }
    return kOk;
}

int cmd_identities(const Common& c, const IdentityOpts& o, std::ostream& out) {
    if (o.only != "all" && o.only != "nuttall" && o.only != "closing")
        throw UsageError("--only must be one of all, nuttall, closing");
    if (!(c.tol > 0.0)) throw UsageError("--tol must be a positive number");
    const double qtol = std::max(1e-2 * c.tol, 1e-16);
    const quad::QuadratureSpec mid{quad::Rule::MidpointPeriodic, 16, qtol, 16};
    const quad::QuadratureSpec adapt{quad::Rule::Adaptive, 20, qtol, 60};

    struct Row {
        analysis::IdentityResult r;
        double residual;
        bool pass;
    };
    std::vector<Row> rows;
    if (o.only != "closing") {
        std::vector<int> nus;
        if (o.nu != 0) {
            if (o.nu < 1 || o.nu > 12) throw UsageError("--nu must lie in 1..12");
            nus.push_back(o.nu);
        } else {
            for (int nu = 1; nu <= 8; ++nu) nus.push_back(nu);
        }
        for (int nu : nus) {
            auto r = analysis::nuttall_identity(nu, mid);
            rows.push_back({r, r.rel_error(), r.rel_error() <= c.tol});
        }
    } else if (o.nu != 0) {
        throw UsageError("--nu applies to the nuttall identities only");
    }
    if (o.only != "nuttall")
        for (auto& r : analysis::closing_identities(adapt)) rows.push_back({r, r.abs_error(), r.abs_error() <= c.tol});

    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"name", r.r.name},
                           {"computed", r.r.computed},
                           {"expected", r.r.expected},
                           {"abs_error", r.r.abs_error()},
                           {"rel_error", r.r.rel_error()},
                           {"err_estimate", r.r.err_estimate},
                           {"residual", r.residual},
                           {"pass", r.pass}});
        out << json{{"tol", c.tol}, {"identities", arr}, {"passed", all}}.dump(2) << '\n';
    } else {
        out << "name,computed,expected,abs_error,rel_error,err_estimate,residual,pass\n";
        for (const auto& r : rows)
            out << r.r.name << ',' << num(r.r.computed) << ',' << num(r.r.expected) << ',' << num(r.r.abs_error())
                << ',' << num(r.r.rel_error()) << ',' << num(r.r.err_estimate) << ',' << num(r.residual) << ','
                << (r.pass ? "true" : "false") << '\n';
    }
    return all ? kOk : kCheckFailed;
}

std::string pade_name(int L, int M) { return "[" + std::to_string(L) + "/" + std::to_string(M) + "]"; }

int cmd_pade(const Common& c, int m_max, std::ostream& out) {
    if (m_max < 1 || m_max > 8) throw UsageError("--m-max must lie in 1..8");
    struct Entry {
        int L, M;
        std::optional<analysis::PadeApproximant> p;
        double condition = 0.0;
        bool real = false, below = false;
    };
    std::vector<Entry> entries;
    bool singular = false;
    bool ok = true;
    for (int M = 1; M <= m_max; ++M)
        for (int L : {M - 1, M}) {
            Entry e{L, M, std::nullopt};
            try {
                e.p = analysis::pade_w_over_z(L, M);
                e.condition = e.p->condition;
                e.real = e.p->poles_real(1e-8);
                e.below = true;
                for (const Complex& q : e.p->poles) e.below = e.below && q.real() <= -kInvE - 1e-6;
                ok = ok && e.real && e.below;
            } catch (const SingularSystemError& ex) {
                e.condition = ex.condition();
                singular = true;
            }
            entries.push_back(std::move(e));
        }
    auto find = [&](int L, int M) -> const Entry* {
        for (const auto& e : entries)
            if (e.L == L && e.M == M && e.p) return &e;
        return nullptr;
    };
    struct Pair {
        std::string fewer, more;
        bool pass;
    };
    std::vector<Pair> pairs;
    for (int M = 1; M < m_max; ++M)
        for (int d : {1, 0}) {
            const Entry* a = find(M - d, M);
            const Entry* b = find(M + 1 - d, M + 1);
            if (!a || !b) continue;
            const bool pass = analysis::strictly_interlace(a->p->real_poles(), b->p->real_poles());
            ok = ok && pass;
            pairs.push_back({pade_name(M - d, M), pade_name(M + 1 - d, M + 1), pass});
        }

    if (c.format == "json") {
        json apx = json::array();
        for (const auto& e : entries) {
            json j{{"name", pade_name(e.L, e.M)}, {"L", e.L}, {"M", e.M}, {"condition", e.condition}};
            if (e.p) {
                json poles = json::array();
                for (const Complex& q : e.p->poles) poles.push_back(cjson(q));
                j["poles"] = poles;
                j["poles_real"] = e.real;
                j["below_branch_point"] = e.below;
            } else {
                j["status"] = "singular";
            }
            apx.push_back(j);
        }
        json il = json::array();
        for (const auto& p : pairs) il.push_back({{"fewer", p.fewer}, {"more", p.more}, {"interlace", p.pass}});
        out << json{{"approximants", apx}, {"interlacing", il}, {"passed", ok && !singular}}.dump(2) << '\n';
    } else {
        out << "kind,approximant,other,index,re,im,condition,verdict\n";
        for (const auto& e : entries) {
            const std::string name = pade_name(e.L, e.M);
            if (!e.p) {
                out << "approximant," << name << ",,,,," << num(e.condition) << ",singular\n";
                continue;
            }
            out << "approximant," << name << ",,,,," << num(e.condition) << ','
                << (e.real && e.below ? "pass" : "fail") << '\n';
            for (std::size_t i = 0; i < e.p->poles.size(); ++i)
                out << "pole," << name << ",," << i << ',' << num(e.p->poles[i].real()) << ','
                    << num(e.p->poles[i].imag()) << ",,\n";
        }
        for (const auto& p : pairs)
            out << "interlace," << p.fewer << ',' << p.more << ",,,,," << (p.pass ? "pass" : "fail") << '\n';
    }
    if (singular) return kNotConverged;
    return ok ? kOk : kCheckFailed;
}

std::string join_params(const std::vector<double>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ";" : "") + num(p[i]);
    return s;
}

int cmd_cm(const Common& c, const CmOpts& o, std::ostream& out) {
    if (o.order < 0 || o.order > 8) throw UsageError("--order must lie in 0..8");
    std::vector<double> params;
    if (!o.params.empty()) params = parse_reals(o.params);
    const auto fn = analysis::cm_function(o.fn, params);
    const auto grid = parse_grid(o.grid);
    const auto rep = analysis::cm_check(fn.id, fn.f, o.order, grid);
    if (c.format == "json") {
        json v = json::array();
        for (const auto& x : rep.violations) v.push_back({{"order", x.order}, {"x", x.x}, {"value", x.value}});
        out << json{{"function", fn.id},
                    {"formula", fn.formula},
                    {"params", fn.params},
                    {"orders_checked", rep.orders_checked},
                    {"grid", rep.grid},
                    {"passed", rep.passed()},
                    {"first_failing_order", rep.first_failing_order()},
                    {"max_margin", rep.max_margin},
                    {"violations", v}}
                   .dump(2)
            << '\n';
    } else {
        out << "kind,function,formula,params,order,x,value,passed\n";
        out << "summary," << fn.id << ",\"" << fn.formula << "\"," << join_params(fn.params) << ','
            << rep.first_failing_order() << ",," << num(rep.max_margin) << ',' << (rep.passed() ? "true" : "false")
            << '\n';
        for (const auto& x : rep.violations)
            out << "violation," << fn.id << ",,," << x.order << ',' << num(x.x) << ',' << num(x.value) << ",false\n";
    }
    return rep.passed() ? kOk : kCheckFailed;
}

int cmd_bench(const Common& c, const BenchOpts& o, bool reps_given, std::ostream& out) {
    const auto ids = parse_reps(o.reps, reps_given);
    const Complex z = parse_complex(o.z);
    const auto tols = parse_reals(o.tols);
    for (double t : tols)
        if (!(t > 0.0)) throw UsageError("tolerances must be positive");
    const auto rule = parse_rule_opt(c.rule);

    struct Row {
        RepresentationId id;
        double tol;
        std::string status;
        long nodes = 0;
        double err = 0.0, abs_err = 0.0;
        std::int64_t ns = 0;
    };
    std::vector<Row> rows;
    for (auto id : ids)
        for (double t : tols) {
            Row r{id, t, "ok"};
            try {
                const auto spec = make_spec(id, t, rule);
                const auto t0 = std::chrono::steady_clock::now();
                const auto e = rep::evaluate(id, z, spec);
                r.ns = o.no_timing ? 0 : elapsed_ns(t0);
                r.nodes = e.nodes_used;
                r.err = e.err_estimate;
                r.abs_err = std::abs(e.value - rep::oracle_value(e.target, z));
                if (!e.converged) r.status = "not-converged";
            } catch (const DomainError&) {
                r.status = "out-of-domain";
            } catch (const Error&) {
                r.status = "error";
            }
            rows.push_back(r);
        }
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"rep", rep::info(r.id).tag},
                           {"tol", r.tol},
                           {"status", r.status},
                           {"nodes", r.nodes},
                           {"err_estimate", r.err},
                           {"abs_err_vs_oracle", r.abs_err},
                           {"wall_time_ns", r.ns}});
        out << json{{"z", cjson(z)}, {"rows", arr}}.dump(2) << '\n';
    } else {
        out << "rep,z_re,z_im,tol,status,nodes,err_estimate,abs_err_vs_oracle,wall_time_ns\n";
        for (const auto& r : rows)
            out << rep::info(r.id).tag << ',' << num(z.real()) << ',' << num(z.imag()) << ',' << num(r.tol) << ','
                << r.status << ',' << r.nodes << ',' << num(r.err) << ',' << num(r.abs_err) << ',' << r.ns << '\n';
    }
    return kOk;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string t = trim(text);
    if (t == "i" || t == "+i") return {0.0, 1.0};
    if (t == "-i") return {0.0, -1.0};
    const auto parts = split(t, ',');
    if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
    if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
    throw SpecError("cannot parse '" + t + "' as a complex number");
}

std::vector<double> parse_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) throw SpecError("grid must be start:stop:count[:log]");
    const double a = parse_real(parts[0]);
    const double b = parse_real(parts[1]);
    char* end = nullptr;
    const long n = std::strtol(parts[2].c_str(), &end, 10);
    if (parts[2].empty() || *end != '\0' || n < 1 || n > 100000) throw SpecError("grid count must be in 1..100000");
    bool log = false;
    if (parts.size() == 4) {
        if (parts[3] == "log")
            log = true;
        else if (parts[3] != "lin")
            throw SpecError("grid spacing must be 'log' or 'lin'");
    }
    if (log && !(a > 0.0 && b > 0.0)) throw SpecError("log grid needs positive endpoints");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        const double s = n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1);
        g[k] = log ? std::exp(std::log(a) + s * (std::log(b) - std::log(a))) : a + s * (b - a);
    }
    if (n > 1) g.back() = b;
    return g;
}

std::vector<double> parse_reals(std::string_view text) {
    std::vector<double> v;
    for (const auto& p : split(text, ',')) v.push_back(parse_real(p));
    return v;
}

double default_tolerance() {
    const char* env = std::getenv("LWIK_DEFAULT_TOL");
    if (!env || !*env) return 1e-10;
    const double t = parse_real(env);
    if (!(t > 0.0)) throw SpecError("LWIK_DEFAULT_TOL must be positive");
    return t;
}

std::vector<ComparisonRow> compare(const std::vector<RepresentationId>& reps, const std::vector<Complex>& zs,
                                   double tol, std::optional<quad::Rule> rule, bool timing) {
    std::vector<ComparisonRow> rows(reps.size() * zs.size());
    parallel_for(rows.size(), [&](std::size_t k) {
        ComparisonRow& r = rows[k];
        r.rep = reps[k / zs.size()];
        r.z = zs[k % zs.size()];
        try {
            const auto spec = make_spec(r.rep, tol, rule);
            const auto t0 = std::chrono::steady_clock::now();
            const auto e = rep::evaluate(r.rep, r.z, spec);
            r.wall_time_ns = timing ? elapsed_ns(t0) : 0;
            r.value = e.value;
            r.err_estimate = e.err_estimate;
            r.nodes = e.nodes_used;
            r.oracle = rep::oracle_value(e.target, r.z);
            r.abs_err_vs_oracle = std::abs(r.value - r.oracle);
            r.status = e.converged ? "ok" : "not-converged";
        } catch (const DomainError& ex) {
            r.status = "out-of-domain";
            r.message = ex.what();
        } catch (const std::exception& ex) {
            r.status = "error";
            r.message = ex.what();
        }
    });
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lambert W integral representations: evaluation, comparison and property checks", "lwik"};
    app.require_subcommand(1, 1);

    Common common;
    try {
        common.tol = default_tolerance();
    } catch (const std::exception& ex) {
        err << "lwik: " << ex.what() << '\n';
        return kUsage;
    }
    auto add_common = [&](CLI::App* s, bool with_rule) {
        s->add_option("--tol", common.tol, "absolute tolerance (default 1e-10 or LWIK_DEFAULT_TOL)");
        s->add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
        if (with_rule)
            s->add_option("--rule", common.rule, "override the quadrature rule")
                ->check(CLI::IsMember({"midpoint", "gauss", "adaptive", "semi-infinite"}));
    };

    EvalOpts eo;
    auto* eval = app.add_subcommand("eval", "evaluate one representation at one point");
    eval->add_option("--rep", eo.rep, "representation tag")->required();
    eval->add_option("--z", eo.z, "argument: re,im | real | e")->required();
    eval->add_option("--c", eo.c, "contour parameter of bs-branch-m1 (> 1)");
    add_common(eval, true);

    CompareOpts co;
    auto* cmp = app.add_subcommand("compare", "compare representations against the oracle");
    auto* cmp_rep = cmp->add_option("--rep", co.reps, "representation tags (comma separated; default all)")
                        ->delimiter(',');
    cmp->add_option("--z", co.zs, "argument (repeatable)");
    cmp->add_option("--grid", co.grid, "real grid start:stop:count[:log]");
    cmp->add_flag("--no-timing", co.no_timing, "report wall_time_ns as 0");
    add_common(cmp, true);

    IdentityOpts io;
    auto* ids = app.add_subcommand("identities", "definite-integral identity suite");
    ids->add_option("--only", io.only, "all | nuttall | closing");
    ids->add_option("--nu", io.nu, "single Nuttall exponent 1..12");
    add_common(ids, false);

    int m_max = 6;
    auto* pade = app.add_subcommand("pade", "Padé pole locations and interlacing");
    pade->add_option("--m-max", m_max, "largest denominator degree (1..8)");
    add_common(pade, false);

    CmOpts cmo;
    auto* cm = app.add_subcommand("cm", "finite-difference complete monotonicity check");
    cm->add_option("--fn", cmo.fn, "function id")->required();
    cm->add_option("--params", cmo.params, "comma-separated parameters");
    cm->add_option("--order", cmo.order, "highest derivative order (0..8)");
    cm->add_option("--grid", cmo.grid, "grid start:stop:count[:log]");
    add_common(cm, false);

    BenchOpts bo;
    auto* bench = app.add_subcommand("bench", "node counts and timings over a tolerance ladder");
    auto* bench_rep = bench->add_option("--rep", bo.reps, "representation tags (comma separated; default all)")
                          ->delimiter(',');
    bench->add_option("--z", bo.z, "argument");
    bench->add_option("--tol", bo.tols, "comma-separated tolerance ladder");
    bench->add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--rule", common.rule, "override the quadrature rule")
        ->check(CLI::IsMember({"midpoint", "gauss", "adaptive", "semi-infinite"}));
    bench->add_flag("--no-timing", bo.no_timing, "report wall_time_ns as 0");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(common, eo, out);
        if (cmp->parsed()) return cmd_compare(common, co, cmp_rep->count() > 0, out);
        if (ids->parsed()) return cmd_identities(common, io, out);
        if (pade->parsed()) return cmd_pade(common, m_max, out);
        if (cm->parsed()) return cmd_cm(common, cmo, out);
        if (bench->parsed()) return cmd_bench(common, bo, bench_rep->count() > 0, out);
    } catch (const UsageError& e) {
        err << "lwik: " << e.what() << '\n';
        return kUsage;
    } catch (const SpecError& e) {
        err << "lwik: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "lwik: domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const PoleError& e) {
        err << "lwik: domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const Error& e) {
        err << "lwik: " << e.what() << '\n';
        return kNotConverged;
    }
    return kUsage;
}

}  // namespace lwik::cli
