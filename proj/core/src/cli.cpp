/*
   Copyright 2026 The wittkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "witt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "witt/delta_ring.hpp"
#include "witt/elliptic.hpp"
#include "witt/jets.hpp"
#include "witt/selftest.hpp"
#include "witt/witt_vector.hpp"

namespace witt::cli {

namespace {

std::filesystem::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("WITT_CACHE"); env != nullptr && *env != '\0') return env;
    return ".wittcache";
}

std::optional<std::string> resolve_cm_table(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("WITT_CM_TABLE"); env != nullptr && *env != '\0') return env;
    std::error_code ec;
    auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        auto beside = exe.parent_path() / "cm_table.txt";
        if (std::filesystem::exists(beside, ec)) return beside.string();
    }
    if (std::filesystem::exists("cm_table.txt", ec)) return std::string("cm_table.txt");
    return std::nullopt;
}

RingPtr parse_ring_spec(const std::string& spec) {
    if (spec == "Z" || spec == "z") return integer_ring();
    if (spec.size() >= 2 && (spec[0] == 'f' || spec[0] == 'F')) {
        long p = std::stol(spec.substr(1));
        return make_prime_field(p);
    }
    if (spec.size() >= 2 && (spec[0] == 'z' || spec[0] == 'Z')) {
        return make_zmod(std::stol(spec.substr(1)));
    }
    if (spec.rfind("gr(", 0) == 0 && spec.back() == ')') {
        std::string body = spec.substr(3, spec.size() - 4);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream is(body);
        long p = 0, k = 0, d = 0;
        if (!(is >> p >> k >> d)) throw UsageError("bad ring spec '" + spec + "'");
        return make_galois_ring(p, k, d);
    }
    throw UsageError("unknown ring spec '" + spec + "' (use Z, f<p>, z<m>, or gr(p,k,d))");
}

// vector literals: integer | '(' v ',' ... ')' matching the ring shape
RingElem parse_element(const std::string& text, std::size_t& pos, const RingPtr& ring) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw UsageError("unexpected end of vector literal");
    auto winfo = witt_ring_info(*ring);
    if (text[pos] == '(') {
        if (!winfo) throw UsageError("tuple literal for non-Witt ring " + ring->name());
        ++pos;
        std::vector<RingElem> comps;
        RingPtr base = winfo->base;
        for (;;) {
            comps.push_back(parse_element(text, pos, base));
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            throw UsageError("expected ',' or ')' in vector literal");
        }
        return make_witt_vector(ring, std::move(comps));
    }
    if (winfo) throw UsageError("expected '(' for an element of " + ring->name());
    std::size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw UsageError("expected integer in vector literal");
    return ring->from_integer(Integer(text.substr(start, pos - start)));
}

RingElem parse_full_element(const std::string& text, const RingPtr& ring) {
    std::size_t pos = 0;
    RingElem v = parse_element(text, pos, ring);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw UsageError("trailing characters in '" + text + "'");
    return v;
}

std::string ghost_str(const RingPtr& base, const std::vector<RingElem>& g) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << base->str(g[i]);
    os << ">";
    return os.str();
}

// ---------------------------------------------------------------------------

struct PolyArgs {
    long p = 2;
    long n = 0;
    std::string kind = "sum";
    std::string out;
};

int cmd_poly(const PolyArgs& a, std::ostream& out) {
    auto kind = law_kind_from_name(a.kind);
    if (!kind) throw UsageError("unknown kind '" + a.kind + "'");
    auto family = generate_family(a.p, a.n, *kind);
    std::optional<PolyCache> cache;
    if (!a.out.empty()) cache.emplace(a.out);
    for (const auto& lvl : family) {
        if (cache) cache->store(lvl);
        out << "kind=" << law_kind_name(lvl.kind) << " p=" << lvl.p << " n=" << lvl.n
            << " terms=" << lvl.body.term_count() << " max_coeff_bits=" << lvl.body.max_coeff_bits()
            << "\n";
    }
    if (cache) out << "wrote " << family.size() << " files to " << a.out << "\n";
    return 0;
}

struct WittArgs {
    long p = 2;
    long n = 1;
    std::string ring = "f2";
    std::string coords = "bj";
    std::string op;
    std::vector<std::string> operands;
    std::string split;
};

int cmd_witt(const WittArgs& a, std::ostream& out) {
    RingPtr base = parse_ring_spec(a.ring);
    RingPtr W = make_witt_ring(base, a.p, a.n);
    bool classical = a.coords == "witt";
    if (!classical && a.coords != "bj") throw UsageError("--coords must be bj or witt");

    auto read_vec = [&](const std::string& text, const RingPtr& ring) {
        RingElem v = parse_full_element(text, ring);
        if (classical) {
            std::vector<RingElem> comps = v.list();
            return classical_to_bj(ring, comps);
        }
        return v;
    };
    auto show_vec = [&](const RingElem& v) {
        if (!classical) return v.parent()->str(v);
        std::vector<RingElem> w = bj_to_classical(v);
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << base->str(w[i]);
        os << ")";
        return os.str();
    };
    auto need = [&](std::size_t k) {
        if (a.operands.size() != k)
            throw UsageError("op '" + a.op + "' expects " + std::to_string(k) + " operand(s)");
    };

    if (a.op == "add" || a.op == "mul") {
        need(2);
        RingElem x = read_vec(a.operands[0], W), y = read_vec(a.operands[1], W);
        out << show_vec(a.op == "add" ? W->add(x, y) : W->mul(x, y)) << "\n";
    } else if (a.op == "neg") {
        need(1);
        out << show_vec(W->neg(read_vec(a.operands[0], W))) << "\n";
    } else if (a.op == "trunc") {
        need(1);
        out << show_vec(witt_truncate(read_vec(a.operands[0], W))) << "\n";
    } else if (a.op == "delta") {
        need(1);
        out << show_vec(witt_delta_shift(read_vec(a.operands[0], W))) << "\n";
    } else if (a.op == "frob") {
        need(1);
        out << show_vec(witt_frobenius(read_vec(a.operands[0], W))) << "\n";
    } else if (a.op == "versch") {
        need(1);
        out << show_vec(witt_verschiebung(read_vec(a.operands[0], W))) << "\n";
    } else if (a.op == "ghost") {
        need(1);
        out << ghost_str(base, witt_ghost(read_vec(a.operands[0], W))) << "\n";
    } else if (a.op == "copleth") {
        need(1);
        if (a.split.empty()) throw UsageError("copleth needs --split m,n");
        std::string s = a.split;
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream is(s);
        long m = 0, nn = 0;
        if (!(is >> m >> nn)) throw UsageError("bad --split '" + a.split + "'");
        RingElem v = read_vec(a.operands[0], W);
        RingElem w = witt_coplethysm(v, m, nn);
        out << w.parent()->str(w) << "\n";
    } else if (a.op == "eq") {
        need(1);
        RingPtr inner = make_witt_ring(base, a.p, 1);
        RingPtr outer = make_witt_ring(inner, a.p, a.n);
        RingElem z = parse_full_element(a.operands[0], outer);
        auto verdict = coplethysm_equalizer_check(z);
        if (verdict.in_image)
            out << "InImage " << verdict.preimage.parent()->str(verdict.preimage) << "\n";
        else
            out << "NotInImage window=" << *verdict.witness_index << "\n";
    } else if (a.op == "retract") {
        need(1);
        // double-ghost literal ((a,b),(c,d),...) read over W_n(W_1)-shaped tuples
        RingPtr inner = make_witt_ring(base, a.p, 1);
        RingPtr outer = make_witt_ring(inner, a.p, a.n);
        RingElem g = parse_full_element(a.operands[0], outer);
        std::vector<std::pair<RingElem, RingElem>> pairs;
        for (const auto& w : g.list()) pairs.push_back({w.list()[0], w.list()[1]});
        out << ghost_str(base, ghost_retraction(pairs)) << "\n";
    } else if (a.op == "nilp") {
        need(0);
        auto e = p_nilpotency_degree(W);
        if (e)
            out << "p_nilpotency = " << *e << "\n";
        else
            out << "p_nilpotency = none (bound reached)\n";
    } else {
        throw UsageError("unknown witt op '" + a.op + "'");
    }
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_delta_validate(const std::string& tower, long p, long levels, const std::string& ring,
                       std::ostream& out) {
    DeltaTower t;
    if (tower == "fermat")
        t = fermat_tower(p, levels);
    else if (tower == "zero")
        t = zero_delta_tower(p, levels);
    else if (tower == "witt")
        t = witt_shift_tower(parse_ring_spec(ring), p, levels);
    else
        throw UsageError("unknown tower '" + tower + "' (fermat, zero, witt)");
    auto rep = validate_delta(t, SampleSpec{true, 0, 0});
    out << "tower=" << t.label << " levels=" << levels << " checked=" << rep.checked << "\n";
    for (const auto& f : rep.failures)
        out << "violation: level=" << f.level << " axiom=(" << f.axiom << ") x=" << f.x
            << " y=" << f.y << " lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
    out << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_delta_solve_mu(long p, const std::string& exps_str, long k, std::ostream& out) {
    std::vector<unsigned> exps;
    std::string s = exps_str;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    unsigned e = 0;
    while (is >> e) exps.push_back(e);
    if (exps.empty()) throw UsageError("bad --exps '" + exps_str + "'");
    auto rep = hopf_delta_solve(p, exps, k);
    out << "p=" << p << " k=" << k << " basis=" << rep.basis_size
        << " solutions=" << rep.total_solutions() << "\n";
    for (std::size_t g = 0; g < rep.solutions_per_gen.size(); ++g) {
        for (const auto& sol : rep.solutions_per_gen[g]) {
            out << "gen " << (g + 1) << ": [";
            for (std::size_t i = 0; i < sol.size(); ++i) out << (i ? "," : "") << sol[i];
            out << "]\n";
        }
    }
    out << (rep.zero_only() ? "unique zero solution" : "nonzero solutions present") << "\n";
    return 0;
}

std::vector<SparsePoly> parse_poly_list(const std::string& text, const VarList& gens) {
    // semicolon-separated polynomials in the presentation grammar
    std::vector<SparsePoly> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        out.push_back(parse_polynomial(item, gens));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

int cmd_delta_fromfrob(long p, const std::string& gens_str, const std::string& phi_str,
                       std::ostream& out) {
    std::vector<std::string> names;
    std::string s = gens_str;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::string n;
    while (is >> n) names.push_back(n);
    VarList gens = make_vars(names);
    auto phis = parse_poly_list(phi_str, gens);
    if (phis.size() != gens->size()) throw UsageError("need one phi image per generator");
    DeltaPolyRing ring = delta_from_frobenius(p, gens, {}, phis);
    for (std::size_t i = 0; i < gens->size(); ++i)
        out << "delta(" << (*gens)[i] << ") = " << ring.delta_of_gen(i).str() << "\n";
    return 0;
}

int cmd_delta_apply(long p, const std::string& gens_str, const std::string& deltas_str,
                    const std::string& expr, std::ostream& out) {
    std::vector<std::string> names;
    std::string s = gens_str;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::string n;
    while (is >> n) names.push_back(n);
    VarList gens = make_vars(names);
    auto deltas = parse_poly_list(deltas_str, gens);
    if (deltas.size() != gens->size()) throw UsageError("need one delta value per generator");
    DeltaPolyRing ring(p, gens, deltas);
    auto f = parse_poly_list(expr, gens);
    out << "delta(" << f[0].str() << ") = " << ring.apply_delta(f[0]).str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------

struct JetArgs {
    std::string ring;
    long p = 2;
    long n = 1;
    std::string emit = "presentation";
    std::string over = "f2";
    std::string point;
};

int cmd_jet(const JetArgs& a, std::ostream& out) {
    RingPresentation pres = parse_presentation(a.ring);
    if (a.emit == "presentation") {
        out << presentation_str(jet_presentation(pres, a.p, a.n).pres) << "\n";
        return 0;
    }
    RingPtr C = parse_ring_spec(a.over);
    if (a.emit == "points") {
        auto jp = jet_presentation(pres, a.p, a.n);
        auto pts = enumerate_points(jp.pres, C);
        out << pts.size() << " points\n";
        for (const auto& pt : pts) {
            out << "(";
            for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? "," : "") << C->str(pt[i]);
            out << ")\n";
        }
        return 0;
    }
    if (a.emit == "adjunction") {
        auto rep = adjunction_check(pres, a.p, a.n, C);
        out << "count_jet=" << rep.count_jet << " count_witt=" << rep.count_witt << " "
            << (rep.pass ? "pass" : "FAIL") << "\n";
        return rep.pass ? 0 : 1;
    }
    if (a.emit == "coghost") {
        if (a.point.empty()) throw UsageError("--emit coghost needs --point v,v,...");
        std::vector<RingElem> vals;
        std::string s = a.point;
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream is(s);
        std::string tok;
        while (is >> tok) vals.push_back(C->from_integer(Integer(tok)));
        auto images = coghost_eval(pres, vals, a.p, a.n, C);
        for (const auto& pt : images) {
            out << "(";
            for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? "," : "") << C->str(pt[i]);
            out << ")\n";
        }
        return 0;
    }
    throw UsageError("unknown --emit '" + a.emit + "'");
}

// ---------------------------------------------------------------------------

struct CanliftArgs {
    long p = 5;
    long a = 1;
    long b = 1;
    long k = 2;
    bool trace = false;
    bool verify = false;
    std::string oracle;
    std::string cm_table;
    long psi = 0;
};

int cmd_canlift(const CanliftArgs& args, std::ostream& out) {
    RingPtr Fp = make_prime_field(args.p);
    EllipticCurve e = make_curve(Fp, args.a, args.b);
    PointCount pc = count_points_trace(e);
    out << "curve: y^2 = x^3 + " << args.a << "*x + " << args.b << " over F_" << args.p << "\n";
    out << "j_E = " << Fp->str(j_invariant(e)) << "\n";
    out << "N = " << pc.n_points << "  a_p = " << pc.trace << "  ordinary = "
        << (pc.trace % args.p != 0 ? "yes" : "no") << "\n";
    if (args.psi > 0) {
        out << "psi_" << args.psi << " = " << division_polynomial(e, args.psi).str() << "\n";
        return 0;
    }
    LiftResult lift = canonical_lift_j(e, args.k);
    std::int64_t pk = 1;
    for (long i = 0; i < args.k; ++i) pk *= args.p;
    out << "j_canonical = " << lift.j.parent()->str(lift.j) << " (mod " << pk << ")\n";
    if (args.trace) {
        out << "trace:";
        for (const auto& j : lift.j_trace) out << " " << j.parent()->str(j);
        out << "\n";
    }
    if (args.verify) {
        auto rep = verify_vp_factorization(e, args.k);
        out << "vp_fixed_point = " << (rep.fixed ? "yes" : "NO") << " (j -> "
            << rep.j_after_quotient.parent()->str(rep.j_after_quotient) << ")\n";
    }
    if (args.oracle == "cm") {
        auto path = resolve_cm_table(args.cm_table);
        if (!path) throw Error("no cm table found (use --cm-table)");
        CMTable table = CMTable::load_file(*path);
        RingElem oracle = cm_oracle_j(e, args.k, table);
        bool agree = oracle.parent()->eq(oracle, lift.j);
        out << "cm_oracle = " << oracle.parent()->str(oracle) << " (mod " << pk << ")"
            << " agreement = " << (agree ? "yes" : "NO") << "\n";
        if (!agree) return 1;
    }
    return 0;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Witt vector / delta-ring / jet space / canonical lift kernel"};
    app.require_subcommand(1);
    std::string cache_flag;
    app.add_option("--cache", cache_flag, "polynomial cache directory");

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "generate universal polynomials");
    poly_cmd->add_option("--p", poly.p)->required();
    poly_cmd->add_option("--n", poly.n)->required();
    poly_cmd->add_option("--kind", poly.kind)->required();
    poly_cmd->add_option("--out", poly.out);

    WittArgs witt;
    auto* witt_cmd = app.add_subcommand("witt", "truncated Witt ring arithmetic");
    witt_cmd->add_option("--p", witt.p)->required();
    witt_cmd->add_option("--n", witt.n)->required();
    witt_cmd->add_option("--ring", witt.ring);
    witt_cmd->add_option("--coords", witt.coords);
    witt_cmd->add_option("--split", witt.split);
    witt_cmd->add_option("op", witt.op)->required();
    witt_cmd->add_option("operands", witt.operands);

    auto* delta_cmd = app.add_subcommand("delta", "delta-structure tools");
    delta_cmd->require_subcommand(1);
    std::string tower = "fermat", dring = "f2", exps = "1", gens = "T", phi, deltas, expr;
    long dp = 2, dlevels = 2, dk = 3;
    auto* validate_cmd = delta_cmd->add_subcommand("validate", "check the delta-ring axioms");
    validate_cmd->add_option("--tower", tower);
    validate_cmd->add_option("--p", dp)->required();
    validate_cmd->add_option("--levels", dlevels);
    validate_cmd->add_option("--ring", dring);
    auto* solve_cmd = delta_cmd->add_subcommand("solve-mu", "delta-structures on mu_{p^n}");
    solve_cmd->add_option("--p", dp)->required();
    solve_cmd->add_option("--exps", exps);
    solve_cmd->add_option("--k", dk);
    auto* fromfrob_cmd = delta_cmd->add_subcommand("fromfrob", "delta from a Frobenius lift");
    fromfrob_cmd->add_option("--p", dp)->required();
    fromfrob_cmd->add_option("--gens", gens);
    fromfrob_cmd->add_option("--phi", phi)->required();
    auto* tofrob_cmd = delta_cmd->add_subcommand("tofrob", "Frobenius lift from delta");
    tofrob_cmd->add_option("--p", dp)->required();
    tofrob_cmd->add_option("--gens", gens);
    tofrob_cmd->add_option("--deltas", deltas)->required();
    auto* apply_cmd = delta_cmd->add_subcommand("apply", "apply delta to a polynomial");
    apply_cmd->add_option("--p", dp)->required();
    apply_cmd->add_option("--gens", gens);
    apply_cmd->add_option("--deltas", deltas)->required();
    apply_cmd->add_option("--expr", expr)->required();

    JetArgs jet;
    auto* jet_cmd = app.add_subcommand("jet", "arithmetic jet spaces of presented rings");
    jet_cmd->add_option("--ring", jet.ring)->required();
    jet_cmd->add_option("--p", jet.p)->required();
    jet_cmd->add_option("--n", jet.n)->required();
    jet_cmd->add_option("--emit", jet.emit);
    jet_cmd->add_option("--over", jet.over);
    jet_cmd->add_option("--point", jet.point);

    CanliftArgs canlift;
    auto* canlift_cmd = app.add_subcommand("canlift", "Serre-Tate canonical lift");
    canlift_cmd->add_option("--p", canlift.p)->required();
    canlift_cmd->add_option("--a", canlift.a)->required();
    canlift_cmd->add_option("--b", canlift.b)->required();
    canlift_cmd->add_option("--k", canlift.k);
    canlift_cmd->add_flag("--trace", canlift.trace);
    canlift_cmd->add_flag("--verify", canlift.verify);
    canlift_cmd->add_option("--oracle", canlift.oracle);
    canlift_cmd->add_option("--cm-table", canlift.cm_table);
    canlift_cmd->add_option("--psi", canlift.psi);

    auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant batteries");
    std::string level = "quick";
    std::string st_cm_table;
    selftest_cmd->add_option("level", level)->check(CLI::IsMember({"quick", "full"}));
    selftest_cmd->add_option("--cm-table", st_cm_table);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*poly_cmd) return cmd_poly(poly, out);
        if (*selftest_cmd) {
            // the selftest only verifies an existing cache; it never writes one
            LawProvider::global().clear_cache_dir();
            SelftestOptions opts;
            opts.full = level == "full";
            opts.cache_dir = resolve_cache_dir(cache_flag);
            opts.cm_table_path = resolve_cm_table(st_cm_table);
            return run_selftest(opts, out);
        }
        // commands that evaluate laws share the resolved cache directory
        LawProvider::global().set_cache_dir(resolve_cache_dir(cache_flag));
        if (*witt_cmd) return cmd_witt(witt, out);
        if (*delta_cmd) {
            if (*validate_cmd) return cmd_delta_validate(tower, dp, dlevels, dring, out);
            if (*solve_cmd) return cmd_delta_solve_mu(dp, exps, dk, out);
            if (*fromfrob_cmd) return cmd_delta_fromfrob(dp, gens, phi, out);
            if (*tofrob_cmd) {
                std::vector<std::string> names;
                std::string s = gens;
                std::replace(s.begin(), s.end(), ',', ' ');
                std::istringstream is(s);
                std::string nm;
                while (is >> nm) names.push_back(nm);
                VarList gl = make_vars(names);
                auto dl = parse_poly_list(deltas, gl);
                DeltaPolyRing ring(dp, gl, dl);
                auto phis = frobenius_from_delta(ring);
                for (std::size_t i = 0; i < gl->size(); ++i)
                    out << "phi(" << (*gl)[i] << ") = " << phis[i].str() << "\n";
                return 0;
            }
            if (*apply_cmd) return cmd_delta_apply(dp, gens, deltas, expr, out);
        }
        if (*jet_cmd) return cmd_jet(jet, out);
        if (*canlift_cmd) return cmd_canlift(canlift, out);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return dispatch(std::move(args), std::cout, std::cerr);
}

}  // namespace witt::cli
