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

#include "witt/delta_ring.hpp"

#include <algorithm>
#include <random>

#include "witt/witt_vector.hpp"

namespace witt {

namespace {

Integer binom_over_p(long p, long i) {
    // (1/p) * C(p, i), an integer for 0 < i < p
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(i));
    return Integer(b).divexact(Integer(p));
}

std::int64_t ipow(long p, long e) {
    std::int64_t r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

std::int64_t fermat_quotient_int(long p, std::int64_t representative, std::int64_t target_mod) {
    Integer x(static_cast<long>(representative));
    Integer d = (x - x.pow(static_cast<unsigned long>(p))).divexact(Integer(p));
    return d.mod(Integer(static_cast<long>(target_mod))).to_i64();
}

DeltaTower fermat_tower(long p, long N) {
    DeltaTower t;
    t.p = p;
    t.label = "fermat(p=" + std::to_string(p) + ")";
    for (long m = 0; m <= N; ++m) t.levels.push_back(make_zmod(ipow(p, m + 1)));
    for (long m = 0; m < N; ++m) {
        RingPtr to = t.levels[static_cast<std::size_t>(m)];
        std::int64_t to_mod = ipow(p, m + 1);
        t.delta.push_back([p, to, to_mod](const RingElem& x) {
            return RingElem(to, fermat_quotient_int(p, x.i64(), to_mod));
        });
        t.tau.push_back([to, to_mod](const RingElem& x) { return RingElem(to, x.i64() % to_mod); });
    }
    return t;
}

DeltaTower zero_delta_tower(long p, long N) {
    DeltaTower t = fermat_tower(p, N);
    t.label = "zero(p=" + std::to_string(p) + ")";
    for (long m = 0; m < N; ++m) {
        RingPtr to = t.levels[static_cast<std::size_t>(m)];
        t.delta[static_cast<std::size_t>(m)] = [to](const RingElem&) { return to->zero(); };
    }
    return t;
}

DeltaTower witt_shift_tower(RingPtr base, long p, long N) {
    DeltaTower t;
    t.p = p;
    t.label = "witt-shift(" + base->name() + ",p=" + std::to_string(p) + ")";
    for (long m = 0; m <= N; ++m) t.levels.push_back(make_witt_ring(base, p, m));
    for (long m = 0; m < N; ++m) {
        t.delta.push_back([](const RingElem& x) { return witt_delta_shift(x); });
        t.tau.push_back([](const RingElem& x) { return witt_truncate(x); });
    }
    return t;
}

DeltaValidationReport validate_delta(const DeltaTower& tower, const SampleSpec& spec) {
    DeltaValidationReport report;
    for (std::size_t m = 0; m + 1 < tower.levels.size(); ++m) {
        const RingPtr& from = tower.levels[m + 1];
        const RingPtr& to = tower.levels[m];
        const auto& delta = tower.delta[m];
        const auto& tau = tower.tau[m];
        long p = tower.p;

        // axiom (3)
        {
            RingElem lhs = delta(from->one());
            ++report.checked;
            if (!to->is_zero(lhs)) {
                report.pass = false;
                report.failures.push_back({m, 3, "1", "", to->str(lhs), "0"});
            }
        }

        auto check_pair = [&](const RingElem& x, const RingElem& y) {
            RingElem dx = delta(x), dy = delta(y);
            RingElem tx = tau(x), ty = tau(y);
            // (1): delta(x+y) = dx + dy - sum_{i=1}^{p-1} (1/p)C(p,i) tx^i ty^(p-i)
            RingElem lhs1 = delta(from->add(x, y));
            RingElem rhs1 = to->add(dx, dy);
            for (long i = 1; i < p; ++i) {
                RingElem term = to->mul(to->from_integer(binom_over_p(p, i)),
                                        to->mul(to->pow(tx, static_cast<unsigned long>(i)),
                                                to->pow(ty, static_cast<unsigned long>(p - i))));
                rhs1 = to->sub(rhs1, term);
            }
            ++report.checked;
            if (!to->eq(lhs1, rhs1)) {
                report.pass = false;
                if (report.failures.size() < 8)
                    report.failures.push_back(
                        {m, 1, from->str(x), from->str(y), to->str(lhs1), to->str(rhs1)});
            }
            // (2): delta(xy) = tx^p dy + dx ty^p + p dx dy
            RingElem lhs2 = delta(from->mul(x, y));
            RingElem rhs2 = to->add(
                to->add(to->mul(to->pow(tx, static_cast<unsigned long>(p)), dy),
                        to->mul(dx, to->pow(ty, static_cast<unsigned long>(p)))),
                to->mul(to->from_long(p), to->mul(dx, dy)));
            ++report.checked;
            if (!to->eq(lhs2, rhs2)) {
                report.pass = false;
                if (report.failures.size() < 8)
                    report.failures.push_back(
                        {m, 2, from->str(x), from->str(y), to->str(lhs2), to->str(rhs2)});
            }
        };

        if (spec.exhaustive) {
            auto card = from->cardinality();
            if (!card) throw Error("exhaustive validation needs finite levels");
            for (std::uint64_t i = 0; i < *card; ++i)
                for (std::uint64_t j = 0; j < *card; ++j)
                    check_pair(from->element_at(i), from->element_at(j));
        } else {
            std::mt19937_64 rng(spec.seed + m);
            auto card = from->cardinality();
            if (!card) throw Error("random validation needs finite levels");
            for (std::size_t s = 0; s < spec.count; ++s)
                check_pair(from->element_at(rng() % *card), from->element_at(rng() % *card));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// polynomial delta-rings

DeltaPolyRing::DeltaPolyRing(long p, VarList gens, std::vector<SparsePoly> delta_of_gens)
    : p_(p), gens_(std::move(gens)), delta_(std::move(delta_of_gens)) {
    if (delta_.size() != gens_->size()) throw Error("delta values must match generators");
}

SparsePoly DeltaPolyRing::apply_phi(const SparsePoly& f) const {
    std::vector<SparsePoly> images;
    images.reserve(gens_->size());
    for (std::size_t i = 0; i < gens_->size(); ++i)
        images.push_back(SparsePoly::variable(integer_ring(), gens_, i, static_cast<std::uint32_t>(p_)) +
                         delta_[i].scaled(p_));
    return f.substitute(images);
}

SparsePoly DeltaPolyRing::apply_delta(const SparsePoly& f) const {
    return (apply_phi(f) - f.pow(static_cast<std::uint32_t>(p_))).exact_div_by_int(Integer(p_));
}

DeltaValidationReport validate_delta(const DeltaPolyRing& ring, std::size_t sample_pairs,
                                     std::uint64_t seed) {
    DeltaValidationReport report;
    const RingPtr Z = integer_ring();
    const VarList& vars = ring.gens();
    long p = ring.p();
    std::mt19937_64 rng(seed);

    auto random_poly = [&]() {
        SparsePoly f = SparsePoly::zero(Z, vars);
        std::size_t nterms = 1 + rng() % 3;
        for (std::size_t t = 0; t < nterms; ++t) {
            SparsePoly mono = SparsePoly::constant(
                Z, vars, static_cast<long>(static_cast<std::int64_t>(rng() % 7) - 3));
            for (std::size_t v = 0; v < vars->size(); ++v)
                mono = mono * SparsePoly::variable(Z, vars, v, static_cast<std::uint32_t>(rng() % 3));
            f = f + mono;
        }
        return f;
    };

    {
        SparsePoly d1 = ring.apply_delta(SparsePoly::constant(Z, vars, 1));
        ++report.checked;
        if (!d1.is_zero()) {
            report.pass = false;
            report.failures.push_back({0, 3, "1", "", d1.str(), "0"});
        }
    }
    for (std::size_t s = 0; s < sample_pairs; ++s) {
        SparsePoly f = random_poly(), g = random_poly();
        SparsePoly df = ring.apply_delta(f), dg = ring.apply_delta(g);
        SparsePoly rhs1 = df + dg;
        for (long i = 1; i < p; ++i)
            rhs1 = rhs1 - (f.pow(static_cast<std::uint32_t>(i)) *
                           g.pow(static_cast<std::uint32_t>(p - i)))
                              .scaled(binom_over_p(p, i));
        SparsePoly lhs1 = ring.apply_delta(f + g);
        ++report.checked;
        if (!(lhs1 == rhs1)) {
            report.pass = false;
            if (report.failures.size() < 8)
                report.failures.push_back({0, 1, f.str(), g.str(), lhs1.str(), rhs1.str()});
        }
        SparsePoly lhs2 = ring.apply_delta(f * g);
        SparsePoly rhs2 = f.pow(static_cast<std::uint32_t>(p)) * dg +
                          df * g.pow(static_cast<std::uint32_t>(p)) + (df * dg).scaled(p);
        ++report.checked;
        if (!(lhs2 == rhs2)) {
            report.pass = false;
            if (report.failures.size() < 8)
                report.failures.push_back({0, 2, f.str(), g.str(), lhs2.str(), rhs2.str()});
        }
    }
    return report;
}

namespace {

// multivariate reduction by a monic univariate polynomial in variable v
SparsePoly reduce_by_monic_univariate(SparsePoly f, const SparsePoly& rel, std::size_t v) {
    // rel = x_v^d + lower; replace x_v^d by -(lower) until degrees drop
    std::uint32_t d = 0;
    for (const auto& t : rel.terms()) d = std::max(d, t.first.e[v]);
    SparsePoly lower = rel - SparsePoly::variable(rel.ring(), rel.vars(), v, d);
    for (;;) {
        bool reduced = false;
        std::vector<SparsePoly::Term> keep;
        SparsePoly replaced = SparsePoly::zero(f.ring(), f.vars());
        for (const auto& t : f.terms()) {
            if (t.first.e[v] >= d) {
                Monomial m = t.first;
                m.e[v] -= d;
                SparsePoly cofactor = SparsePoly::from_terms(f.ring(), f.vars(), {{m, t.second}});
                replaced = replaced + cofactor * (-lower);
                reduced = true;
            } else {
                keep.push_back(t);
            }
        }
        f = SparsePoly::from_terms(f.ring(), f.vars(), std::move(keep)) + replaced;
        if (!reduced) return f;
    }
}

bool is_monic_univariate(const SparsePoly& rel, std::size_t* var_out) {
    // exactly one variable occurs; leading coefficient (in that variable) is 1
    std::size_t used = SIZE_MAX;
    for (const auto& t : rel.terms())
        for (std::size_t v = 0; v < rel.vars()->size(); ++v)
            if (t.first.e[v] != 0) {
                if (used == SIZE_MAX) used = v;
                if (used != v) return false;
            }
    if (used == SIZE_MAX) return false;
    std::uint32_t d = 0;
    for (const auto& t : rel.terms()) d = std::max(d, t.first.e[used]);
    for (const auto& t : rel.terms())
        if (t.first.e[used] == d && !(t.second.integer() == Integer(1))) return false;
    *var_out = used;
    return true;
}

}  // namespace

DeltaPolyRing delta_from_frobenius(long p, const VarList& gens,
                                   const std::vector<SparsePoly>& relations,
                                   const std::vector<SparsePoly>& phi_of_gens) {
    if (phi_of_gens.size() != gens->size()) throw Error("phi must be given on every generator");
    const RingPtr Z = integer_ring();
    RingPtr Fp = make_zmod(p);

    std::vector<SparsePoly> diffs;
    for (std::size_t i = 0; i < gens->size(); ++i)
        diffs.push_back(phi_of_gens[i] -
                        SparsePoly::variable(Z, gens, i, static_cast<std::uint32_t>(p)));

    // reduction test: phi(T_i) == T_i^p in F_p[T]/(relations mod p)
    auto to_fp = [&](const SparsePoly& f) {
        std::vector<SparsePoly::Term> terms;
        for (const auto& t : f.terms()) terms.push_back({t.first, Fp->from_integer(t.second.integer())});
        return SparsePoly::from_terms(Fp, gens, std::move(terms));
    };
    for (std::size_t i = 0; i < gens->size(); ++i) {
        SparsePoly d = to_fp(diffs[i]);
        for (const auto& rel : relations) {
            SparsePoly rbar = to_fp(rel);
            if (rbar.is_zero()) continue;
            std::size_t v = 0;
            if (!is_monic_univariate(rbar, &v))
                throw Error("delta_from_frobenius: unsupported relation " + rel.str());
            d = reduce_by_monic_univariate(d, rbar, v);
        }
        if (!d.is_zero())
            throw NotAFrobeniusLiftError("phi(" + (*gens)[i] + ") != " + (*gens)[i] + "^" +
                                         std::to_string(p) + " mod p");
    }

    // exact division in the (relation-reduced) free cover
    std::vector<SparsePoly> delta_vals;
    for (std::size_t i = 0; i < gens->size(); ++i) {
        SparsePoly d = diffs[i];
        for (const auto& rel : relations) {
            std::size_t v = 0;
            if (is_monic_univariate(rel, &v)) d = reduce_by_monic_univariate(d, rel, v);
        }
        delta_vals.push_back(d.exact_div_by_int(Integer(p)));
    }
    return DeltaPolyRing(p, gens, std::move(delta_vals));
}

std::vector<SparsePoly> frobenius_from_delta(const DeltaPolyRing& ring) {
    std::vector<SparsePoly> phi;
    for (std::size_t i = 0; i < ring.gens()->size(); ++i)
        phi.push_back(SparsePoly::variable(integer_ring(), ring.gens(), i,
                                           static_cast<std::uint32_t>(ring.p())) +
                      ring.delta_of_gen(i).scaled(ring.p()));
    return phi;
}

// ---------------------------------------------------------------------------
// Hopf compatibility solver for mu_{p^{n_1}} x ... x mu_{p^{n_r}}

bool HopfSolveReport::zero_only() const {
    for (const auto& per_gen : solutions_per_gen) {
        if (per_gen.size() != 1) return false;
        for (auto c : per_gen[0])
            if (c != 0) return false;
    }
    return true;
}

std::uint64_t HopfSolveReport::total_solutions() const {
    std::uint64_t n = 1;
    for (const auto& per_gen : solutions_per_gen) n *= per_gen.size();
    return n;
}

HopfSolveReport hopf_delta_solve(long p, const std::vector<unsigned>& exponents, long k,
                                 std::uint64_t enumeration_cap) {
    HopfSolveReport report;
    report.p = p;
    report.exponents = exponents;
    report.k = k;

    std::vector<unsigned> exps;
    for (unsigned e : exponents)
        if (e > 0) exps.push_back(e);  // n_i = 0 factors are trivial

    std::int64_t q = ipow(p, k);

    // monomial basis P = prod [0, p^{n_i}); index <-> mixed-radix exponents
    std::vector<std::int64_t> radix;
    std::uint64_t M = 1;
    for (unsigned e : exps) {
        radix.push_back(ipow(p, static_cast<long>(e)));
        M *= static_cast<std::uint64_t>(radix.back());
    }
    report.basis_size = static_cast<std::size_t>(M);
    if (exps.empty()) {
        // trivial group: unique empty solution
        report.solutions_per_gen = {};
        return report;
    }

    // q^M assignments per generator
    long double size_check = 1;
    for (std::uint64_t i = 0; i < M; ++i) size_check *= static_cast<long double>(q);
    if (size_check > static_cast<long double>(enumeration_cap))
        throw TooLargeError("hopf solve: q^|P| exceeds the enumeration cap");

    for (std::size_t g = 0; g < exps.size(); ++g) {
        // basis index of T_g^p (exponent p mod p^{n_g} in slot g)
        std::uint64_t sigma = 0;
        {
            std::uint64_t stride = 1;
            for (std::size_t j = 0; j < exps.size(); ++j) {
                if (j == g) sigma += static_cast<std::uint64_t>(p % radix[j]) * stride;
                stride *= static_cast<std::uint64_t>(radix[j]);
            }
        }
        std::vector<std::vector<std::int64_t>> solutions;
        std::vector<std::int64_t> a(static_cast<std::size_t>(M), 0);
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < M; ++i) total *= static_cast<std::uint64_t>(q);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t v = idx;
            for (std::uint64_t i = 0; i < M; ++i) {
                a[i] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(q));
                v /= static_cast<std::uint64_t>(q);
            }
            bool ok = true;
            for (std::uint64_t K = 0; K < M && ok; ++K) {
                for (std::uint64_t L = 0; L < M && ok; ++L) {
                    std::int64_t lhs = (K == L) ? a[K] : 0;
                    std::int64_t rhs = ((K == sigma) ? a[L] : 0) + ((L == sigma) ? a[K] : 0);
                    rhs = (rhs + (p % q) * ((a[K] * a[L]) % q)) % q;
                    if ((lhs - rhs) % q != 0) ok = false;
                }
            }
            if (ok) solutions.push_back(a);
        }
        report.solutions_per_gen.push_back(std::move(solutions));
    }
    return report;
}

bool hopf_solutions_stable(const HopfSolveReport& at_k, const HopfSolveReport& at_k_plus_1) {
    if (at_k.solutions_per_gen.size() != at_k_plus_1.solutions_per_gen.size()) return false;
    std::int64_t q = ipow(at_k.p, at_k.k);
    for (std::size_t g = 0; g < at_k.solutions_per_gen.size(); ++g) {
        auto reduce = [&](const std::vector<std::int64_t>& v) {
            std::vector<std::int64_t> r(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] % q;
            return r;
        };
        std::vector<std::vector<std::int64_t>> reduced;
        for (const auto& s : at_k_plus_1.solutions_per_gen[g]) reduced.push_back(reduce(s));
        std::sort(reduced.begin(), reduced.end());
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
        std::vector<std::vector<std::int64_t>> base = at_k.solutions_per_gen[g];
        std::sort(base.begin(), base.end());
        if (reduced != base) return false;
    }
    return true;
}

}  // namespace witt
