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

#include "witt/selftest.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "witt/delta_ring.hpp"
#include "witt/elliptic.hpp"
#include "witt/jets.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

namespace {

using Failure = std::optional<std::string>;

struct BatteryRunner {
    explicit BatteryRunner(std::ostream& os) : out(os) {}
    std::ostream& out;
    int failures = 0;
    int count = 0;

    void run(const std::string& name, const std::function<Failure()>& fn) {
        ++count;
        Failure failure;
        try {
            failure = fn();
        } catch (const std::exception& e) {
            failure = std::string(e.what());
        }
        if (failure) {
            ++failures;
            out << "[FAIL] " << name << ": " << *failure << "\n";
        } else {
            out << "[ok] " << name << "\n";
        }
    }
};

// embed a level-m law into the full level-n variable list
SparsePoly embed_law(const UniversalPolynomial& law, const VarList& full, long full_n, bool to_y) {
    bool binary = law_kind_is_binary(law.kind);
    std::vector<std::size_t> where(law.body.vars()->size());
    for (long i = 0; i <= law.n; ++i) {
        std::size_t xi = static_cast<std::size_t>(i);
        where[xi] = to_y ? static_cast<std::size_t>(full_n + 1 + i) : xi;
        if (binary)
            where[static_cast<std::size_t>(law.n + 1 + i)] = static_cast<std::size_t>(full_n + 1 + i);
    }
    return law.body.with_vars(full, where);
}

/// Z_j(L_s..L_{s+j}) by the ghost recursion, memoized over windows.
class WindowComposer {
   public:
    WindowComposer(long p, std::vector<SparsePoly> laws) : p_(p), laws_(std::move(laws)) {}

    const SparsePoly& at(std::size_t s, std::size_t j) {
        if (j == 0) return laws_[s];
        auto key = std::make_pair(s, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        SparsePoly v = at(s, j - 1).pow(static_cast<std::uint32_t>(p_)) + at(s + 1, j - 1).scaled(p_);
        return memo_.emplace(key, std::move(v)).first->second;
    }

   private:
    long p_;
    std::vector<SparsePoly> laws_;
    std::map<std::pair<std::size_t, std::size_t>, SparsePoly> memo_;
};

Failure check_law_identities(long p, long n) {
    auto sums = generate_family(p, n, LawKind::Sum);
    auto prods = generate_family(p, n, LawKind::Product);
    auto ghosts = generate_family(p, n, LawKind::Ghost);

    VarList full = law_vars(n, true);
    std::vector<SparsePoly> s_full, p_full, zx, zy;
    for (long m = 0; m <= n; ++m) {
        s_full.push_back(embed_law(sums[m], full, n, false));
        p_full.push_back(embed_law(prods[m], full, n, false));
        zx.push_back(embed_law(ghosts[m], full, n, false));
        zy.push_back(embed_law(ghosts[m], full, n, true));
    }
    WindowComposer sum_comp(p, s_full), prod_comp(p, p_full);
    for (long m = 0; m <= n; ++m) {
        std::size_t mm = static_cast<std::size_t>(m);
        if (!((sum_comp.at(0, mm) - (zx[mm] + zy[mm])).is_zero()))
            return "ghost additivity fails at p=" + std::to_string(p) + " m=" + std::to_string(m);
        if (!((prod_comp.at(0, mm) - zx[mm] * zy[mm]).is_zero()))
            return "ghost multiplicativity fails at p=" + std::to_string(p) + " m=" + std::to_string(m);
        // isobaric grading, wt(x_i) = wt(y_i) = p^i
        std::vector<std::uint64_t> w(full->size());
        for (long i = 0; i <= n; ++i) {
            std::uint64_t pi = 1;
            for (long t = 0; t < i; ++t) pi *= static_cast<std::uint64_t>(p);
            w[static_cast<std::size_t>(i)] = pi;
            w[static_cast<std::size_t>(n + 1 + i)] = pi;
        }
        std::uint64_t pm = 1;
        for (long t = 0; t < m; ++t) pm *= static_cast<std::uint64_t>(p);
        if (!s_full[mm].is_isobaric(w, pm) || !p_full[mm].is_isobaric(w, pm) ||
            !zx[mm].is_isobaric(w, pm))
            return "isobaric grading fails at p=" + std::to_string(p) + " m=" + std::to_string(m);
    }
    return std::nullopt;
}

Failure check_conversions(long p, long n) {
    auto ghosts = generate_family(p, n, LawKind::Ghost);
    auto witt_ghosts = generate_family(p, n, LawKind::WittGhost);
    auto to_witt = generate_family(p, n, LawKind::WittFromBJ);
    auto to_bj = generate_family(p, n, LawKind::BJFromWitt);
    VarList vars = law_vars(n, false);
    const RingPtr Z = integer_ring();

    std::vector<SparsePoly> c_full, b_full;
    for (long m = 0; m <= n; ++m) {
        c_full.push_back(embed_law(to_witt[m], vars, n, false));
        b_full.push_back(embed_law(to_bj[m], vars, n, false));
    }
    // w_m(c_0..c_m) = Z_m(x)
    for (long m = 0; m <= n; ++m) {
        SparsePoly acc = SparsePoly::zero(Z, vars);
        for (long i = 0; i <= m; ++i) {
            std::uint32_t e = 1;
            for (long t = 0; t < m - i; ++t) e *= static_cast<std::uint32_t>(p);
            acc = acc + c_full[static_cast<std::size_t>(i)].pow(e).scaled(
                            Integer(p).pow(static_cast<unsigned long>(i)));
        }
        if (!((acc - embed_law(ghosts[m], vars, n, false)).is_zero()))
            return "witt-from-bj ghost match fails at m=" + std::to_string(m);
    }
    // Z_m(b_0..b_m) = w_m(x)
    WindowComposer bj_comp(p, b_full);
    for (long m = 0; m <= n; ++m) {
        if (!((bj_comp.at(0, static_cast<std::size_t>(m)) - embed_law(witt_ghosts[m], vars, n, false))
                  .is_zero()))
            return "bj-from-witt ghost match fails at m=" + std::to_string(m);
    }
    // roundtrip: b_m(c_0..c_m) is the coordinate x_m
    for (long m = 0; m <= n; ++m) {
        SparsePoly rt = b_full[static_cast<std::size_t>(m)].substitute(c_full);
        if (!((rt - SparsePoly::variable(Z, vars, static_cast<std::size_t>(m))).is_zero()))
            return "conversion roundtrip fails at m=" + std::to_string(m);
    }
    // levels 0 and 1 are the identity
    for (long m = 0; m <= std::min<long>(n, 1); ++m) {
        if (!((c_full[static_cast<std::size_t>(m)] -
               SparsePoly::variable(Z, vars, static_cast<std::size_t>(m)))
                  .is_zero()))
            return "conversion is not the identity at level " + std::to_string(m);
    }
    return std::nullopt;
}

Failure check_level1_laws(long p) {
    const RingPtr Z = integer_ring();
    auto sums = generate_family(p, 1, LawKind::Sum);
    auto prods = generate_family(p, 1, LawKind::Product);
    VarList v = law_vars(1, true);  // x0 x1 y0 y1
    SparsePoly x0 = SparsePoly::variable(Z, v, 0), x1 = SparsePoly::variable(Z, v, 1);
    SparsePoly y0 = SparsePoly::variable(Z, v, 2), y1 = SparsePoly::variable(Z, v, 3);
    SparsePoly s1 = x1 + y1;
    for (long i = 1; i < p; ++i) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(i));
        Integer coeff = Integer(mpz_class(bin / p));
        s1 = s1 - (x0.pow(static_cast<std::uint32_t>(i)) * y0.pow(static_cast<std::uint32_t>(p - i)))
                      .scaled(coeff);
    }
    if (!((sums[1].body.with_vars(v, std::vector<std::size_t>{0, 1, 2, 3}) - s1).is_zero()))
        return "S_1 does not match the additive axiom at p=" + std::to_string(p);
    SparsePoly p1 = x0.pow(static_cast<std::uint32_t>(p)) * y1 +
                    x1 * y0.pow(static_cast<std::uint32_t>(p)) + (x1 * y1).scaled(p);
    if (!((prods[1].body.with_vars(v, std::vector<std::size_t>{0, 1, 2, 3}) - p1).is_zero()))
        return "P_1 does not match the multiplicative axiom at p=" + std::to_string(p);
    return std::nullopt;
}

Failure check_ring_axioms(const RingPtr& R, bool exhaustive, std::size_t samples, std::uint64_t seed) {
    auto card = R->cardinality();
    if (!card) return "ring is not finite";
    auto elem = [&](std::uint64_t i) { return R->element_at(i); };
    auto check_triple = [&](const RingElem& a, const RingElem& b, const RingElem& c) -> Failure {
        if (!R->eq(R->add(R->add(a, b), c), R->add(a, R->add(b, c)))) return "add associativity";
        if (!R->eq(R->mul(R->mul(a, b), c), R->mul(a, R->mul(b, c)))) return "mul associativity";
        if (!R->eq(R->add(a, b), R->add(b, a))) return "add commutativity";
        if (!R->eq(R->mul(a, b), R->mul(b, a))) return "mul commutativity";
        if (!R->eq(R->mul(a, R->add(b, c)), R->add(R->mul(a, b), R->mul(a, c)))) return "distributivity";
        if (!R->eq(R->add(a, R->zero()), a)) return "additive unit";
        if (!R->eq(R->mul(a, R->one()), a)) return "multiplicative unit";
        if (!R->is_zero(R->add(a, R->neg(a)))) return "additive inverse";
        return std::nullopt;
    };
    if (exhaustive) {
        for (std::uint64_t i = 0; i < *card; ++i)
            for (std::uint64_t j = 0; j < *card; ++j)
                for (std::uint64_t k = 0; k < *card; ++k)
                    if (auto f = check_triple(elem(i), elem(j), elem(k)))
                        return *f + " in " + R->name();
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t s = 0; s < samples; ++s)
            if (auto f = check_triple(elem(rng() % *card), elem(rng() % *card), elem(rng() % *card)))
                return *f + " in " + R->name();
    }
    return std::nullopt;
}

Failure check_witt_iso_zpn(long p, long n) {
    RingPtr W = make_witt_ring(make_prime_field(p), p, n);
    std::uint64_t card = *W->cardinality();
    std::vector<RingElem> table;
    table.push_back(W->zero());
    for (std::uint64_t i = 1; i < card; ++i) table.push_back(W->add(table.back(), W->one()));
    std::set<std::string> seen;
    for (const auto& v : table) seen.insert(W->str(v));
    if (seen.size() != card) return "additive orbit of 1 is not a bijection in " + W->name();
    for (std::uint64_t i = 0; i < card; ++i)
        for (std::uint64_t j = 0; j < card; ++j) {
            if (!W->eq(W->add(table[i], table[j]), table[(i + j) % card]))
                return "addition table mismatch in " + W->name();
            if (!W->eq(W->mul(table[i], table[j]), table[(i * j) % card]))
                return "multiplication table mismatch in " + W->name();
        }
    auto e = p_nilpotency_degree(W);
    if (!e || *e != n + 1)
        return "p-nilpotency degree of " + W->name() + " is not " + std::to_string(n + 1);
    return std::nullopt;
}

Failure check_ker_tau_squared(const RingPtr& base, long p) {
    RingPtr W1 = make_witt_ring(base, p, 1);
    std::uint64_t bc = *base->cardinality();
    std::set<std::string> p_multiples;
    RingPtr Wr = W1;
    for (std::uint64_t i = 0; i < *W1->cardinality(); ++i)
        p_multiples.insert(
            Wr->str(Wr->mul(Wr->from_long(p), Wr->element_at(i))));
    for (std::uint64_t i = 0; i < bc; ++i)
        for (std::uint64_t j = 0; j < bc; ++j) {
            RingElem a = make_witt_vector(W1, {base->zero(), base->element_at(i)});
            RingElem b = make_witt_vector(W1, {base->zero(), base->element_at(j)});
            if (p_multiples.find(W1->str(W1->mul(a, b))) == p_multiples.end())
                return "(ker tau)^2 escapes p*" + W1->name();
        }
    return std::nullopt;
}

Failure check_equalizer_brute(long p) {
    RingPtr F = make_prime_field(p);
    RingPtr W1 = make_witt_ring(F, p, 1);
    RingPtr W1W1 = make_witt_ring(W1, p, 1);
    RingPtr W2 = make_witt_ring(F, p, 2);
    std::set<std::string> image;
    for (std::uint64_t i = 0; i < *W2->cardinality(); ++i)
        image.insert(W1W1->str(witt_coplethysm(W2->element_at(i), 1, 1)));
    for (std::uint64_t i = 0; i < *W1W1->cardinality(); ++i) {
        RingElem z = W1W1->element_at(i);
        auto verdict = coplethysm_equalizer_check(z);
        bool in = image.find(W1W1->str(z)) != image.end();
        if (verdict.in_image != in) return "verdict disagrees with the brute-force image";
        if (verdict.in_image) {
            RingElem back = witt_coplethysm(verdict.preimage, 1, 1);
            if (!W1W1->eq(back, z)) return "preimage does not map back";
        }
    }
    return std::nullopt;
}

Failure check_coplethysm_hom(long p) {
    RingPtr F = make_prime_field(p);
    RingPtr W2 = make_witt_ring(F, p, 2);
    RingPtr W1W1 = make_witt_ring(make_witt_ring(F, p, 1), p, 1);
    for (std::uint64_t i = 0; i < *W2->cardinality(); ++i)
        for (std::uint64_t j = 0; j < *W2->cardinality(); ++j) {
            RingElem a = W2->element_at(i), b = W2->element_at(j);
            if (!W1W1->eq(witt_coplethysm(W2->add(a, b), 1, 1),
                          W1W1->add(witt_coplethysm(a, 1, 1), witt_coplethysm(b, 1, 1))))
                return "coplethysm is not additive";
            if (!W1W1->eq(witt_coplethysm(W2->mul(a, b), 1, 1),
                          W1W1->mul(witt_coplethysm(a, 1, 1), witt_coplethysm(b, 1, 1))))
                return "coplethysm is not multiplicative";
        }
    return std::nullopt;
}

Failure check_hopf_unique(long p, std::vector<unsigned> exps, long k) {
    auto report = hopf_delta_solve(p, exps, k);
    if (!report.zero_only())
        return "solution set at p=" + std::to_string(p) + " k=" + std::to_string(k) +
               " is not exactly {0}";
    return std::nullopt;
}

Failure check_adjunction(const std::string& ring, long p, long n, const RingPtr& C) {
    auto a = parse_presentation(ring);
    auto rep = adjunction_check(a, p, n, C);
    if (!rep.pass)
        return ring + " p=" + std::to_string(p) + " n=" + std::to_string(n) + " over " + C->name() +
               ": jet " + std::to_string(rep.count_jet) + " != witt " + std::to_string(rep.count_witt);
    return std::nullopt;
}

Failure check_cache_files(const std::filesystem::path& dir) {
    PolyCache cache(dir);
    for (long p : {2L, 3L, 5L}) {
        long max_n = p == 5 ? 2 : 3;
        for (long n = 0; n <= max_n; ++n) {
            for (LawKind kind : {LawKind::Sum, LawKind::Product, LawKind::Negation, LawKind::Ghost,
                                 LawKind::WittGhost, LawKind::BJFromWitt, LawKind::WittFromBJ}) {
                if (!cache.contains(p, n, kind)) continue;
                std::string key = "(p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                                  ", kind=" + law_kind_name(kind) + ")";
                try {
                    UniversalPolynomial loaded = cache.load(p, n, kind);
                    UniversalPolynomial fresh = generate_family(p, n, kind)[static_cast<std::size_t>(n)];
                    if (!(loaded.body == fresh.body)) return "cache file differs from generator at " + key;
                } catch (const Error& e) {
                    return "cache file invalid at " + key + ": " + e.what();
                }
            }
        }
    }
    return std::nullopt;
}

Failure check_canonical_lift_curve(long p, long a, long b, long k_max, const CMTable& table) {
    EllipticCurve e = make_curve(make_prime_field(p), a, b);
    RingElem prev_j;
    for (long k = 1; k <= k_max; ++k) {
        LiftResult lift = canonical_lift_j(e, k);
        RingElem oracle = cm_oracle_j(e, k, table);
        RingPtr R = lift.j.parent();
        if (!R->eq(lift.j, oracle))
            return "p=" + std::to_string(p) + " k=" + std::to_string(k) + ": lift " + R->str(lift.j) +
                   " != oracle " + R->str(oracle);
        if (k >= 2) {
            auto fact = verify_vp_factorization(e, k);
            if (!fact.fixed)
                return "p=" + std::to_string(p) + " k=" + std::to_string(k) + ": j moved under one more quotient";
            // precision coherence with the previous level
            RingPtr Rprev = prev_j.parent();
            if (!Rprev->eq(Rprev->from_long(lift.j.i64()), prev_j))
                return "p=" + std::to_string(p) + " k=" + std::to_string(k) + ": reduction mismatch with k-1";
        }
        prev_j = lift.j;
    }
    return std::nullopt;
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
    BatteryRunner runner(out);
    out << "selftest level=" << (options.full ? "full" : "quick") << "\n";

    if (options.cache_dir && std::filesystem::exists(*options.cache_dir))
        runner.run("cache files reparse to generated polynomials",
                   [&] { return check_cache_files(*options.cache_dir); });

    for (long p : {2L, 3L, 5L, 7L})
        runner.run("level-1 laws match the delta axioms (p=" + std::to_string(p) + ")",
                   [p] { return check_level1_laws(p); });
    for (long p : {2L, 3L})
        runner.run("universal law identities (p=" + std::to_string(p) + ", n<=3)",
                   [p] { return check_law_identities(p, 3); });
    for (long p : {2L, 3L})
        runner.run("coordinate conversions (p=" + std::to_string(p) + ", n<=3)",
                   [p] { return check_conversions(p, 3); });

    runner.run("W_1(F_2) ring axioms (exhaustive)",
               [] { return check_ring_axioms(make_witt_ring(make_prime_field(2), 2, 1), true, 0, 0); });
    runner.run("W_1(F_3) ring axioms (exhaustive)",
               [] { return check_ring_axioms(make_witt_ring(make_prime_field(3), 3, 1), true, 0, 0); });
    for (auto [p, n] : {std::pair<long, long>{2, 1}, {2, 2}, {3, 1}, {3, 2}})
        runner.run("W_" + std::to_string(n) + "(F_" + std::to_string(p) + ") = Z/p^(n+1)",
                   [p = p, n = n] { return check_witt_iso_zpn(p, n); });
    runner.run("(ker tau)^2 in p W_1(F_2)", [] { return check_ker_tau_squared(make_prime_field(2), 2); });
    runner.run("(ker tau)^2 in p W_1(Z/4)", [] { return check_ker_tau_squared(make_zmod(4), 2); });
    runner.run("equalizer verdict matches brute force on W_1W_1(F_2)",
               [] { return check_equalizer_brute(2); });
    runner.run("coplethysm W_2(F_2) -> W_1W_1(F_2) is a ring map (64 pairs)",
               [] { return check_coplethysm_hom(2); });

    for (long p : {2L, 3L})
        runner.run("fermat tower delta axioms (p=" + std::to_string(p) + ", levels<=2)", [p] {
            auto rep = validate_delta(fermat_tower(p, 2), SampleSpec{true, 0, 0});
            if (!rep.pass) return Failure("axiom failure");
            return Failure(std::nullopt);
        });
    runner.run("zero-delta tower fails axiom (1)", [] {
        auto rep = validate_delta(zero_delta_tower(2, 1), SampleSpec{true, 0, 0});
        if (rep.pass) return Failure("negative control unexpectedly passed");
        return Failure(std::nullopt);
    });
    runner.run("witt shift tower is a delta tower (p=2, levels<=2)", [] {
        auto rep = validate_delta(witt_shift_tower(make_prime_field(2), 2, 2), SampleSpec{true, 0, 0});
        if (!rep.pass) return Failure("axiom failure");
        return Failure(std::nullopt);
    });

    runner.run("mu_p uniqueness (p=2, k=3)", [] { return check_hopf_unique(2, {1}, 3); });
    runner.run("mu_p uniqueness (p=3, k=2)", [] { return check_hopf_unique(3, {1}, 2); });

    runner.run("jet adjunction Z[t]/(t^2-1) (p=2, n=1, F_2)",
               [] { return check_adjunction("Z[t]/(t^2-1)", 2, 1, make_prime_field(2)); });
    runner.run("jet adjunction Z[t]/(t^2-1) (p=2, n=1, Z/4)",
               [] { return check_adjunction("Z[t]/(t^2-1)", 2, 1, make_zmod(4)); });

    if (options.full) {
        runner.run("universal law identities (p=2, n=4)", [] { return check_law_identities(2, 4); });
        runner.run("universal law identities (p=3, n=4)", [] { return check_law_identities(3, 4); });
        runner.run("universal law identities (p=5, n=3)", [] { return check_law_identities(5, 3); });
        runner.run("coordinate conversions (p=5, n=3)", [] { return check_conversions(5, 3); });
        runner.run("W_1(F_5) = Z/25", [] { return check_witt_iso_zpn(5, 1); });
        runner.run("W_2(F_5) ring axioms (500 random triples)", [] {
            return check_ring_axioms(make_witt_ring(make_prime_field(5), 5, 2), false, 500, 20260811);
        });
        runner.run("W_2(Z/4) ring axioms (500 random triples)", [] {
            return check_ring_axioms(make_witt_ring(make_zmod(4), 2, 2), false, 500, 20260812);
        });

        runner.run("mu_{p^n} uniqueness is stable k -> k+1", [] {
            struct Case {
                long p;
                std::vector<unsigned> exps;
                long k;
            };
            for (const Case& c : {Case{2, {1}, 3}, Case{2, {2}, 3}, Case{3, {1}, 2}}) {
                auto lo = hopf_delta_solve(c.p, c.exps, c.k);
                auto hi = hopf_delta_solve(c.p, c.exps, c.k + 1);
                if (!lo.zero_only() || !hi.zero_only()) return Failure("nonzero solution");
                if (!hopf_solutions_stable(lo, hi)) return Failure("solution sets not stable");
            }
            return Failure(std::nullopt);
        });

        for (const char* ring : {"Z[t]", "Z[t]/(t^2-1)", "Z[t]/(t^3-t)", "Z[x,y]/(x*y)"})
            for (long p : {2L, 3L})
                runner.run(std::string("jet adjunction ") + ring + " (p=" + std::to_string(p) +
                               ", n<=2, F_p and Z/p^2)",
                           [ring, p]() -> Failure {
                               for (long n : {1L, 2L})
                                   for (RingPtr C : {make_prime_field(p), make_zmod(p * p)})
                                       if (auto f = check_adjunction(ring, p, n, C)) return f;
                               return std::nullopt;
                           });

        if (!options.cm_table_path) {
            runner.run("canonical lift vs CM oracle", [] {
                return Failure("cm table not configured (use --cm-table or co-locate cm_table.txt)");
            });
        } else {
            CMTable table = CMTable::load_file(*options.cm_table_path);
            runner.run("canonical lift vs CM oracle (p=5, y^2=x^3+x+1, k<=3)",
                       [&table] { return check_canonical_lift_curve(5, 1, 1, 3, table); });
            runner.run("canonical lift vs CM oracle (p=7, y^2=x^3+x+6, k<=3)",
                       [&table] { return check_canonical_lift_curve(7, 1, 6, 3, table); });
            runner.run("canonical lift vs CM oracle (p=11, y^2=x^3+x+5, k<=3)",
                       [&table] { return check_canonical_lift_curve(11, 1, 5, 3, table); });
        }
    }

    out << "selftest " << (options.full ? "full" : "quick") << ": "
        << (runner.failures == 0 ? "PASS" : "FAIL") << " (" << (runner.count - runner.failures) << "/"
        << runner.count << " batteries)\n";
    return runner.failures == 0 ? 0 : 1;
}

}  // namespace witt
