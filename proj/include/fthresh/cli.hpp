#ifndef FTHRESH_CLI_HPP
#define FTHRESH_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fthresh/bigrat.hpp"
#include "fthresh/classify.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/local_order.hpp"
#include "fthresh/monomial_ideal.hpp"
#include "fthresh/nu.hpp"
#include "fthresh/parser.hpp"
#include "fthresh/polynomial.hpp"
#include "fthresh/regions.hpp"
#include "fthresh/series_root.hpp"
#include "fthresh/weierstrass.hpp"

namespace fthresh::cli {

using nlohmann::json;

namespace detail {

inline std::uint64_t parse_nat(const std::string& text, const char* what) {
    std::size_t start = text.find_first_not_of(' ');
    if (start == std::string::npos || !std::isdigit(static_cast<unsigned char>(text[start])))
        throw precondition_error(std::string(what) + ": expected a number, got '" + text + "'");
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(text.substr(start), &pos);
    } catch (const std::exception&) {
        throw precondition_error(std::string(what) + ": expected a number, got '" + text + "'");
    }
    pos += start;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size())
        throw precondition_error(std::string(what) + ": trailing junk in '" + text + "'");
    return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline VarTable parse_vars(const std::string& csv) {
    auto names = split(csv, ',');
    for (auto& n : names) {
        while (!n.empty() && n.front() == ' ') n.erase(n.begin());
        while (!n.empty() && n.back() == ' ') n.pop_back();
        if (n.empty()) throw precondition_error("--vars: empty variable name");
    }
    return VarTable(names);
}

inline std::vector<Polynomial> parse_poly_list(const std::string& csv, std::uint32_t p,
                                               const VarTable& vars) {
    std::vector<Polynomial> out;
    for (const auto& item : split(csv, ',')) out.push_back(parse_poly(item, p, vars));
    return out;
}

// "h1:m1,h2:m2,..." -> expanded product h1^m1 h2^m2 ...
inline Polynomial parse_factors(const std::string& text, std::uint32_t p,
                                const VarTable& vars) {
    Polynomial f = Polynomial::constant(p, vars.size(), 1);
    for (const auto& item : split(text, ',')) {
        auto colon = item.rfind(':');
        if (colon == std::string::npos)
            throw precondition_error("--factors: expected poly:multiplicity");
        std::uint64_t mult = parse_nat(item.substr(colon + 1), "--factors");
        f = f * parse_poly(item.substr(0, colon), p, vars).pow(mult);
    }
    return f;
}

// "a1,...,ar/q" with q a power of p
inline LatticePoint parse_point(const std::string& text, std::uint32_t p) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw precondition_error("--point: expected a/q");
    std::uint64_t q = parse_nat(text.substr(slash + 1), "--point");
    if (!is_power_of(q, p) && q != 1)
        throw precondition_error("--point: denominator is not a power of p");
    LatticePoint pt;
    for (const auto& item : split(text.substr(0, slash), ','))
        pt.a.push_back(parse_nat(item, "--point"));
    pt.e = 0;
    while (q > 1) {
        q /= p;
        ++pt.e;
    }
    return pt;
}

inline MonomialIdeal parse_monomial_ideal(const std::string& csv, std::uint32_t p,
                                          const VarTable& vars) {
    return MonomialIdeal::from_monomials(parse_poly_list(csv, p, vars));
}

inline json point_json(const LatticePoint& pt, std::uint32_t p) {
    json j;
    j["a"] = pt.a;
    j["e"] = pt.e;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < pt.e; ++i) q *= p;
    j["q"] = q;
    return j;
}

inline std::string point_plain(const LatticePoint& pt, std::uint32_t p) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < pt.e; ++i) q *= p;
    std::ostringstream os;
    for (std::size_t i = 0; i < pt.a.size(); ++i) {
        if (i) os << ",";
        os << pt.a[i];
    }
    os << "/" << q;
    return os.str();
}

inline json bracket_json(const ThresholdBracket& br) {
    json j;
    j["lo"] = rat_to_string(br.lo);
    j["hi"] = rat_to_string(br.hi);
    j["e"] = br.e;
    j["certified"] = br.certified;
    return j;
}

struct Emitter {
    bool as_json;
    std::ostream& out;
    void operator()(const json& j, const std::string& plain) const {
        if (as_json)
            out << j.dump() << "\n";
        else
            out << plain << "\n";
    }
};

} // namespace detail

// Seeded randomized property suites, exposed as `fthresh selftest`.
inline int run_selftest(std::uint64_t seed, std::ostream& out) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, int cases) {
        out << (ok ? "ok   " : "FAIL ") << name << " (" << cases << " cases)\n";
        if (!ok) ++failures;
    };

    auto random_poly = [&](std::uint32_t p, std::uint32_t maxe, std::uint32_t terms) {
        Polynomial f(p, 2);
        for (std::uint32_t i = 0; i < terms; ++i)
            f.add_term({static_cast<std::uint32_t>(rng() % (maxe + 1)),
                        static_cast<std::uint32_t>(rng() % (maxe + 1))},
                       1 + rng() % (p - 1));
        return f;
    };

    {
        bool ok = true;
        int n = 0;
        for (int i = 0; i < 150; ++i) {
            std::uint32_t p = (rng() % 2) ? 2 : 5;
            auto f = random_poly(p, 4, 3), g = random_poly(p, 4, 3), h = random_poly(p, 4, 3);
            ok = ok && (f + g) * h == f * h + g * h && f * g == g * f;
            ++n;
        }
        report("ring axioms", ok, n);
    }
    {
        bool ok = true;
        int n = 0;
        for (int i = 0; i < 150; ++i) {
            std::uint32_t p = (rng() % 2) ? 2 : 5;
            auto f = random_poly(p, 4, 3), g = random_poly(p, 4, 3);
            if (f.is_zero() || g.is_zero()) continue;
            ok = ok && (f * g).ord() == f.ord() + g.ord();
            auto order = LocalOrder::declaration_order(2);
            ok = ok && initial_term(f * g, order) ==
                           initial_term(f, order) * initial_term(g, order);
            ++n;
        }
        report("ord and initial terms", ok, n);
    }
    {
        bool ok = true;
        int n = 0;
        while (n < 60) {
            std::uint32_t p = (rng() % 2) ? 3 : 5;
            std::uint64_t s = 2 + rng() % 2;
            if (s % p == 0) continue;
            auto g = random_poly(p, 2, 2);
            if (g.is_zero()) continue;
            std::uint32_t c = 1 + rng() % (p - 1);
            auto f = g.scaled(c).pow(s);
            auto r = sth_root(f, s, f.total_degree() / s + 8);
            ok = ok && r.exact() && r.root.scaled(r.scalar.value()).pow(s) == f;
            ++n;
        }
        report("s-th root round trip", ok, n);
    }
    {
        bool ok = true;
        int n = 0;
        MonomialIdeal m = MonomialIdeal::maximal(2);
        while (n < 60) {
            std::uint32_t p = (rng() % 2) ? 2 : 3;
            auto f = random_poly(p, 3, 3);
            if (f.is_zero() || !m.radical().contains(f)) continue;
            auto nus = nu_principal_sequence(f, m, 4);
            for (std::size_t e = 1; e < nus.size(); ++e)
                ok = ok && nus[e] >= p * nus[e - 1] && nus[e] + 1 <= p * (nus[e - 1] + 1);
            ++n;
        }
        report("frobenius injectivity and bracket nesting", ok, n);
    }
    {
        bool ok = true;
        int n = 0;
        while (n < 80) {
            std::uint32_t p = (rng() % 2) ? 2 : 3;
            Polynomial g1(p, 1), g2(p, 1);
            g1.add_term({1 + static_cast<std::uint32_t>(rng() % 2)}, 1);
            g2.add_term({1 + static_cast<std::uint32_t>(rng() % 2)}, 1);
            g2.add_term({3}, p - 1);
            if (g1 == g2) continue;
            HTuple ht(p, 1, {g1, g2});
            std::uint32_t e = rng() % 3;
            std::vector<std::uint64_t> a{rng() % 6, rng() % 6};
            std::size_t s = rng() % 2;
            if (a[s] == 0) continue;
            // half-step refinement
            LatticePoint coarse{a, e};
            --coarse.a[s];
            LatticePoint fine{a, e + 1};
            for (auto& v : fine.a) v *= p;
            --fine.a[s];
            ok = ok && ht.in_upper(coarse) == ht.in_upper(fine);
            // norm floor and upward closure
            LatticePoint x{a, e};
            if (lattice_norm(x, p) < 1) ok = ok && !ht.in_upper(x);
            if (ht.in_upper(x)) {
                LatticePoint up = x;
                up.a[rng() % 2] += 1 + rng() % 2;
                ok = ok && ht.in_upper(up);
            }
            ++n;
        }
        report("region half-step, norm floor, upward closure", ok, n);
    }
    out << (failures ? "selftest FAILED\n" : "selftest passed\n");
    return failures ? 1 : 0;
}

inline int run_paper_examples(bool as_json, std::ostream& out) {
    json results = json::array();
    bool all = true;
    auto item = [&](const std::string& name, bool pass) {
        results.push_back({{"name", name}, {"pass", pass}});
        all = all && pass;
        if (!as_json) out << (pass ? "PASS " : "FAIL ") << name << "\n";
    };

    VarTable vx({"x"});
    auto g1 = parse_poly("x", 2, vx), g2 = parse_poly("x^2", 2, vx),
         g4 = parse_poly("x^4", 2, vx);
    HTuple ht(2, 1, {g1, g2, g4});
    Polynomial f = ht.factor_product({1, 2, 1});
    MonomialIdeal m = MonomialIdeal::maximal(2);

    item("nu(16) = 6 for (y+x)(y+x^2)^2(y+x^4)", nu_principal(f, m, 4) == 6);

    item("(6,13,7)/16 is critical", is_critical(ht, LatticePoint{{6, 13, 7}, 4}));
    item("(4,14,6)/16 is critical", is_critical(ht, LatticePoint{{4, 14, 6}, 4}));
    item("(8,16,8)/16 sits above the critical point (0,1,0), itself non-critical",
         in_upper_region(ht, LatticePoint{{8, 16, 8}, 4}) &&
             is_critical(ht, LatticePoint{{0, 1, 0}, 0}) &&
             !is_critical(ht, LatticePoint{{8, 16, 8}, 4}));

    {
        auto br = ft_bracket(f, m, 14);
        bool pass = br.hi - br.lo == make_rat(BigInt(1), big_pow(2, 14)) &&
                    br.lo < make_rat(3, 7) && make_rat(3, 7) <= br.hi;
        item("bracket at e = 14 pins 3/7 to width 2^-14", pass);
    }
    {
        auto res = ft_via_critical_point(ht, {1, 2, 1}, 8);
        item("t = (1,2,1) falls to the lambda branch at 5/16",
             res.kind == FtCriticalResult::Kind::lambda_branch &&
                 res.lambda == make_rat(5, 16));
    }

    VarTable vxy({"x", "y"});
    for (std::uint32_t p : {2u, 3u}) {
        std::uint64_t q = 1;
        for (std::uint32_t e = 1; e <= 3; ++e) {
            q *= p;
            std::ostringstream expr;
            expr << "x^" << q << " + y^" << q + 1;
            Polynomial fq = parse_poly(expr.str(), p, vxy);
            bool pass = fq.ord() == q && nu_principal(fq, m, e) == 0;
            auto v = classify_minimal(fq, 8);
            pass = pass && v.minimal && v.certified && v.q == q && v.s == 1;
            pass = pass && v.bracket.lo < make_rat(1, static_cast<long>(q)) &&
                   make_rat(1, static_cast<long>(q)) <= v.bracket.hi;
            std::ostringstream name;
            name << "ord = q forces membership: p = " << p << ", q = " << q;
            item(name.str(), pass);
        }
    }

    if (as_json) out << json{{"all_pass", all}, {"results", results}}.dump() << "\n";
    return all ? 0 : 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact Frobenius-threshold computations over prime fields", "fthresh"};
    app.require_subcommand(1);

    std::uint32_t p = 0;
    std::string vars_spec, f_spec, factors_spec, b_spec, gs_spec, t_spec, point_spec,
        norm_spec = "2";
    std::uint32_t e = 1, e_max = 10, ell = 1, xprec = 16, yprec = 16;
    std::uint64_t q_flag = 0, s_flag = 1, seed = 0;
    bool as_json = false;

    auto add_common = [&](CLI::App* sub, bool needs_vars) {
        sub->add_option("--p", p, "prime characteristic")->required();
        if (needs_vars) sub->add_option("--vars", vars_spec, "comma-separated variables");
        sub->add_flag("--json", as_json, "emit JSON");
    };

    auto* c_nu = app.add_subcommand("nu", "nu(p^e) of f (or an ideal) against b");
    add_common(c_nu, true);
    c_nu->add_option("--f", f_spec, "polynomial, or comma-separated ideal generators");
    c_nu->add_option("--factors", factors_spec, "factored input poly:mult,...");
    c_nu->add_option("--b", b_spec, "monomial ideal generators")->required();
    c_nu->add_option("--e", e, "Frobenius exponent")->required();

    auto* c_br = app.add_subcommand("bracket", "certified threshold bracket");
    add_common(c_br, true);
    c_br->add_option("--f", f_spec);
    c_br->add_option("--factors", factors_spec);
    c_br->add_option("--b", b_spec);
    c_br->add_option("--e-max", e_max, "largest Frobenius exponent");

    auto* c_rg = app.add_subcommand("region", "upper/lower region membership");
    add_common(c_rg, false);
    c_rg->add_option("--ell", ell, "parameter ideal is (y, x^ell)")->required();
    c_rg->add_option("--gs", gs_spec, "g_i as univariate polynomials in x")->required();
    c_rg->add_option("--point", point_spec)->required();

    auto* c_cr = app.add_subcommand("critical", "criticality of a lattice point");
    add_common(c_cr, false);
    c_cr->add_option("--ell", ell)->required();
    c_cr->add_option("--gs", gs_spec)->required();
    c_cr->add_option("--point", point_spec)->required();

    auto* c_en = app.add_subcommand("enumerate", "all critical points up to a norm bound");
    add_common(c_en, false);
    c_en->add_option("--ell", ell)->required();
    c_en->add_option("--gs", gs_spec)->required();
    c_en->add_option("--e-max", e_max)->required();
    c_en->add_option("--norm-bound", norm_spec, "rational norm bound");

    auto* c_ft = app.add_subcommand("ft-critical", "threshold via critical points");
    add_common(c_ft, false);
    c_ft->add_option("--ell", ell)->required();
    c_ft->add_option("--gs", gs_spec)->required();
    c_ft->add_option("--t", t_spec, "positive integer exponents")->required();
    c_ft->add_option("--e-max", e_max);

    auto* c_rt = app.add_subcommand("root", "s-th root extraction");
    add_common(c_rt, true);
    c_rt->add_option("--f", f_spec)->required();
    c_rt->add_option("--s", s_flag, "root exponent")->required();

    auto* c_wp = app.add_subcommand("weierstrass", "Weierstrass preparation");
    add_common(c_wp, true);
    c_wp->add_option("--f", f_spec)->required();
    c_wp->add_option("--xprec", xprec, "x-adic precision");
    c_wp->add_option("--yprec", yprec, "y-degree bound");

    auto* c_cl = app.add_subcommand("classify", "does ft attain 1/ord(f)?");
    add_common(c_cl, true);
    c_cl->add_option("--f", f_spec)->required();
    c_cl->add_option("--e-max", e_max);

    auto* c_pe = app.add_subcommand("paper-examples", "reproduce the worked examples");
    c_pe->add_flag("--json", as_json);

    auto* c_st = app.add_subcommand("selftest", "seeded randomized property suites");
    c_st->add_option("--seed", seed);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& ex) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    }

    detail::Emitter emit{as_json, out};
    try {
        if (c_pe->parsed()) return run_paper_examples(as_json, out);
        if (c_st->parsed()) return run_selftest(seed, out);

        if (!is_prime(p)) throw precondition_error("--p must be prime");

        if (c_nu->parsed() || c_br->parsed() || c_rt->parsed() || c_wp->parsed() ||
            c_cl->parsed()) {
            if (vars_spec.empty()) throw precondition_error("--vars is required");
        }

        if (c_nu->parsed()) {
            VarTable vars = detail::parse_vars(vars_spec);
            MonomialIdeal b = detail::parse_monomial_ideal(b_spec, p, vars);
            std::vector<Polynomial> gens;
            if (!factors_spec.empty())
                gens.push_back(detail::parse_factors(factors_spec, p, vars));
            else if (!f_spec.empty())
                gens = detail::parse_poly_list(f_spec, p, vars);
            else
                throw precondition_error("--f or --factors is required");
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < e; ++i) q *= p;
            std::uint64_t nu = gens.size() == 1 ? nu_principal(gens[0], b, e)
                                                : nu_ideal(gens, b, e);
            std::ostringstream plain;
            plain << "nu = " << nu << " (q = " << q << ")";
            emit(json{{"nu", nu}, {"q", q}}, plain.str());
            return 0;
        }

        if (c_br->parsed()) {
            VarTable vars = detail::parse_vars(vars_spec);
            MonomialIdeal b = b_spec.empty()
                                  ? MonomialIdeal::maximal(vars.size())
                                  : detail::parse_monomial_ideal(b_spec, p, vars);
            std::vector<Polynomial> gens;
            if (!factors_spec.empty())
                gens.push_back(detail::parse_factors(factors_spec, p, vars));
            else if (!f_spec.empty())
                gens = detail::parse_poly_list(f_spec, p, vars);
            else
                throw precondition_error("--f or --factors is required");
            if (gens.size() == 1) {
                auto br = ft_bracket(gens[0], b, e_max);
                std::ostringstream plain;
                plain << "ft in (" << rat_to_string(br.lo) << ", " << rat_to_string(br.hi)
                      << "], e = " << br.e << ", certified";
                emit(detail::bracket_json(br), plain.str());
            } else {
                auto seq = ft_lower_sequence(gens, b, e_max);
                json values = json::array();
                std::ostringstream plain;
                plain << "lower bounds:";
                for (const auto& v : seq.values) {
                    values.push_back(rat_to_string(v));
                    plain << " " << rat_to_string(v);
                }
                plain << "; extrapolated " << rat_to_string(seq.extrapolated)
                      << " (uncertified)";
                emit(json{{"certified", false},
                          {"extrapolated", rat_to_string(seq.extrapolated)},
                          {"values", values}},
                     plain.str());
            }
            return 0;
        }

        if (c_rg->parsed() || c_cr->parsed() || c_en->parsed() || c_ft->parsed()) {
            VarTable vx({"x"});
            std::vector<Polynomial> gs;
            for (const auto& s : detail::split(gs_spec, ','))
                gs.push_back(s == "0" ? Polynomial(p, 1) : parse_poly(s, p, vx));
            HTuple ht(p, ell, std::move(gs));

            if (c_rg->parsed() || c_cr->parsed()) {
                LatticePoint pt = detail::parse_point(point_spec, p);
                LatticePoint canon = canonicalize(pt, p);
                bool upper = in_upper_region(ht, canon);
                bool crit = is_critical(ht, canon);
                if (c_cr->parsed()) {
                    emit(json{{"critical", crit}}, crit ? "critical" : "not critical");
                } else {
                    json j = detail::point_json(canon, p);
                    j["region"] = upper ? "upper" : "lower";
                    j["critical"] = crit;
                    std::ostringstream plain;
                    plain << detail::point_plain(canon, p) << " "
                          << (upper ? "upper" : "lower")
                          << (crit ? " critical" : "");
                    emit(j, plain.str());
                }
                return 0;
            }
            if (c_en->parsed()) {
                auto pts = enumerate_critical(ht, e_max, rat_from_string(norm_spec));
                json arr = json::array();
                std::ostringstream plain;
                for (const auto& c : pts) {
                    arr.push_back(detail::point_json(c, p));
                    plain << detail::point_plain(c, p) << "\n";
                }
                emit(json{{"points", arr}}, plain.str() + std::to_string(pts.size()) +
                                                " critical points");
                return 0;
            }
            // ft-critical
            std::vector<std::uint64_t> t;
            for (const auto& s : detail::split(t_spec, ','))
                t.push_back(detail::parse_nat(s, "--t"));
            auto res = ft_via_critical_point(ht, t, e_max);
            json j;
            j["lambda"] = rat_to_string(res.lambda);
            j["bracket"] = detail::bracket_json(res.bracket);
            std::ostringstream plain;
            switch (res.kind) {
            case FtCriticalResult::Kind::exact:
                j["kind"] = "exact";
                j["mu"] = rat_to_string(res.mu);
                j["certificate"] = detail::point_json(*res.certificate, p);
                plain << "exact: ft = " << rat_to_string(res.mu) << " at "
                      << detail::point_plain(*res.certificate, p);
                break;
            case FtCriticalResult::Kind::lambda_branch:
                j["kind"] = "lambda-branch";
                plain << "lambda branch: ft >= " << rat_to_string(res.lambda);
                break;
            case FtCriticalResult::Kind::undecided:
                j["kind"] = "undecided";
                plain << "undecided; ft in (" << rat_to_string(res.bracket.lo) << ", "
                      << rat_to_string(res.bracket.hi) << "]";
                break;
            }
            emit(j, plain.str());
            return 0;
        }

        if (c_rt->parsed()) {
            VarTable vars = detail::parse_vars(vars_spec);
            Polynomial f = parse_poly(f_spec, p, vars);
            auto r = sth_root(f, s_flag, f.total_degree() / std::max<std::uint64_t>(s_flag, 1) + 8);
            json j;
            std::ostringstream plain;
            switch (r.status) {
            case RootStatus::exact:
            case RootStatus::truncated: {
                bool exact = r.status == RootStatus::exact;
                j["status"] = exact ? "exact" : "truncated";
                j["c"] = std::to_string(r.scalar.value());
                j["g"] = poly_to_string(r.root, vars);
                plain << (exact ? "exact" : "truncated") << ": c = " << r.scalar.value()
                      << ", g = " << poly_to_string(r.root, vars);
                break;
            }
            case RootStatus::no_root:
                j["status"] = "no-root";
                plain << "no s-th root";
                break;
            }
            emit(j, plain.str());
            return 0;
        }

        if (c_wp->parsed()) {
            VarTable vars = detail::parse_vars(vars_spec);
            if (vars.size() != 2)
                throw precondition_error("weierstrass needs exactly two variables");
            Polynomial f = parse_poly(f_spec, p, vars);
            auto w = weierstrass_prepare(f, xprec, yprec);
            emit(json{{"P", poly_to_string(w.distinguished, vars)},
                      {"d", w.d},
                      {"u", poly_to_string(w.unit, vars)}},
                 "P = " + poly_to_string(w.distinguished, vars) +
                     ", u = " + poly_to_string(w.unit, vars));
            return 0;
        }

        if (c_cl->parsed()) {
            VarTable vars = detail::parse_vars(vars_spec);
            auto gens = detail::parse_poly_list(f_spec, p, vars);
            if (gens.size() != 1)
                throw precondition_error(
                    "classify takes a principal input; use 'bracket' for ideals");
            auto v = classify_minimal(gens[0], e_max);
            json j;
            j["d"] = v.d;
            j["q"] = v.q;
            j["s"] = v.s;
            j["minimal"] = v.minimal;
            j["certainty"] = v.certified ? "certified" : "uncertified";
            if (v.witness)
                j["witness"] = json{{"c", std::to_string(v.witness->first.value())},
                                    {"g", poly_to_string(v.witness->second, vars)}};
            j["bracket"] = json::array({rat_to_string(v.bracket.lo), rat_to_string(v.bracket.hi)});
            j["e"] = v.e;
            std::ostringstream plain;
            plain << (v.minimal ? "minimal" : "not minimal") << " ("
                  << (v.certified ? "certified" : "uncertified") << "), d = " << v.d
                  << ", ft in (" << rat_to_string(v.bracket.lo) << ", "
                  << rat_to_string(v.bracket.hi) << "]";
            emit(j, plain.str());
            return 0;
        }
    } catch (const resource_limit_error& ex) {
        err << "resource limit: " << ex.what() << "\n";
        return 3;
    } catch (const parse_error& ex) {
        err << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const precondition_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace fthresh::cli

#endif
