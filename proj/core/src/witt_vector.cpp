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

#include "witt/witt_vector.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace witt {

namespace {

class WittRing final : public Ring {
   public:
    WittRing(RingPtr base, long p, long n, LawProvider* laws)
        : base_(std::move(base)), p_(p), n_(n), laws_(laws ? laws : &LawProvider::global()) {
        if (n < 0) throw Error("W_n requires n >= 0");
    }

    const RingPtr& base() const { return base_; }
    long p() const { return p_; }
    long n() const { return n_; }
    LawProvider* laws() const { return laws_; }

    std::string name() const override {
        return "W_" + std::to_string(n_) + "(" + base_->name() + ";p=" + std::to_string(p_) + ")";
    }
    RingElem zero() const override {
        return RingElem(self(), RingElem::List(static_cast<std::size_t>(n_ + 1), base_->zero()));
    }
    RingElem one() const override {
        RingElem::List v(static_cast<std::size_t>(n_ + 1), base_->zero());
        v[0] = base_->one();
        return RingElem(self(), std::move(v));
    }
    RingElem from_integer(const Integer& v) const override {
        // v * 1 by binary double-and-add over the Witt addition law
        RingElem acc = zero();
        RingElem unit = one();
        const mpz_class& m = v.raw();
        std::size_t bits = v.is_zero() ? 0 : mpz_sizeinbase(m.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            acc = add(acc, acc);
            if (mpz_tstbit(m.get_mpz_t(), i)) acc = add(acc, unit);
        }
        return v.sign() < 0 ? neg(acc) : acc;
    }
    RingElem add(const RingElem& a, const RingElem& b) const override {
        return binary_law(LawKind::Sum, a, b);
    }
    RingElem mul(const RingElem& a, const RingElem& b) const override {
        return binary_law(LawKind::Product, a, b);
    }
    RingElem neg(const RingElem& a) const override {
        check_shape(a);
        const auto& x = a.list();
        RingElem::List out;
        out.reserve(x.size());
        for (long m = 0; m <= n_; ++m) {
            std::vector<RingElem> vals(x.begin(), x.begin() + (m + 1));
            out.push_back(eval_law(LawKind::Negation, m, vals));
        }
        return RingElem(self(), std::move(out));
    }
    bool eq(const RingElem& a, const RingElem& b) const override {
        check_shape(a);
        check_shape(b);
        const auto& x = a.list();
        const auto& y = b.list();
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!base_->eq(x[i], y[i])) return false;
        return true;
    }
    bool is_zero(const RingElem& a) const override {
        check_shape(a);
        for (const auto& c : a.list())
            if (!base_->is_zero(c)) return false;
        return true;
    }
    std::string str(const RingElem& a) const override {
        std::ostringstream os;
        os << "(";
        const auto& x = a.list();
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << base_->str(x[i]);
        os << ")";
        return os.str();
    }
    bool same_as(const Ring& other) const override {
        auto* o = dynamic_cast<const WittRing*>(&other);
        return o != nullptr && o->p_ == p_ && o->n_ == n_ && o->base_->same_as(*base_);
    }
    std::optional<std::uint64_t> cardinality() const override {
        auto b = base_->cardinality();
        if (!b) return std::nullopt;
        std::uint64_t r = 1;
        for (long i = 0; i <= n_; ++i) {
            if (r > UINT64_MAX / *b) return std::nullopt;  // overflow guard
            r *= *b;
        }
        return r;
    }
    RingElem element_at(std::uint64_t i) const override {
        auto b = base_->cardinality();
        if (!b) throw Error(name() + " is not enumerable");
        RingElem::List v;
        v.reserve(static_cast<std::size_t>(n_ + 1));
        for (long m = 0; m <= n_; ++m) {
            v.push_back(base_->element_at(i % *b));
            i /= *b;
        }
        return RingElem(self(), std::move(v));
    }

    void check_shape(const RingElem& a) const {
        if (a.parent().get() == this) return;
        if (!a.parent() || !a.parent()->same_as(*this))
            throw ShapeMismatchError("element of " + (a.parent() ? a.parent()->name() : "<none>") +
                                     " used in " + name());
    }

    RingElem eval_law(LawKind kind, long level, std::span<const RingElem> values) const {
        const Compiled& c = compiled(kind, level);
        // per-variable power tables
        thread_local std::vector<std::vector<RingElem>> pows;
        pows.assign(values.size(), {});
        for (std::size_t v = 0; v < values.size(); ++v) {
            pows[v].reserve(c.max_exp[v] + 1);
            pows[v].push_back(base_->one());
            for (std::uint32_t e = 1; e <= c.max_exp[v]; ++e)
                pows[v].push_back(base_->mul(pows[v].back(), values[v]));
        }
        RingElem sum = base_->zero();
        for (const auto& t : c.terms) {
            RingElem prod = t.coeff;
            for (const auto& [slot, exp] : t.factors) prod = base_->mul(prod, pows[slot][exp]);
            sum = base_->add(sum, prod);
        }
        return sum;
    }

   private:
    struct Compiled {
        struct Term {
            RingElem coeff;
            std::vector<std::pair<std::uint16_t, std::uint32_t>> factors;
        };
        std::vector<Term> terms;
        std::vector<std::uint32_t> max_exp;
    };

    const Compiled& compiled(LawKind kind, long level) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(static_cast<int>(kind), level);
        auto it = compiled_.find(key);
        if (it != compiled_.end()) return it->second;
        auto law = laws_->get(p_, level, kind);
        Compiled c;
        std::size_t nv = law->body.vars()->size();
        c.max_exp.assign(nv, 0);
        for (const auto& [mono, coeff] : law->body.terms()) {
            Compiled::Term t;
            t.coeff = base_->from_integer(coeff.integer());
            for (std::size_t v = 0; v < nv; ++v) {
                if (mono.e[v] == 0) continue;
                t.factors.push_back({static_cast<std::uint16_t>(v), mono.e[v]});
                c.max_exp[v] = std::max(c.max_exp[v], mono.e[v]);
            }
            c.terms.push_back(std::move(t));
        }
        return compiled_.emplace(key, std::move(c)).first->second;
    }

    RingElem binary_law(LawKind kind, const RingElem& a, const RingElem& b) const {
        check_shape(a);
        check_shape(b);
        const auto& x = a.list();
        const auto& y = b.list();
        RingElem::List out;
        out.reserve(x.size());
        std::vector<RingElem> vals;
        for (long m = 0; m <= n_; ++m) {
            vals.clear();
            vals.insert(vals.end(), x.begin(), x.begin() + (m + 1));
            vals.insert(vals.end(), y.begin(), y.begin() + (m + 1));
            out.push_back(eval_law(kind, m, vals));
        }
        return RingElem(self(), std::move(out));
    }

    RingPtr base_;
    long p_;
    long n_;
    LawProvider* laws_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, long>, Compiled> compiled_;
};

const WittRing& as_witt(const Ring& r, const char* what) {
    auto* w = dynamic_cast<const WittRing*>(&r);
    if (w == nullptr) throw ShapeMismatchError(std::string(what) + " needs a Witt vector");
    return *w;
}

}  // namespace

RingPtr make_witt_ring(RingPtr base, long p, long n, LawProvider* laws) {
    return std::make_shared<WittRing>(std::move(base), p, n, laws);
}

std::optional<WittRingInfo> witt_ring_info(const Ring& r) {
    auto* w = dynamic_cast<const WittRing*>(&r);
    if (w == nullptr) return std::nullopt;
    return WittRingInfo{w->base(), w->p(), w->n()};
}

RingElem make_witt_vector(const RingPtr& witt_ring, std::vector<RingElem> components) {
    const auto& w = as_witt(*witt_ring, "make_witt_vector");
    if (components.size() != static_cast<std::size_t>(w.n() + 1))
        throw ShapeMismatchError("expected " + std::to_string(w.n() + 1) + " components, got " +
                                 std::to_string(components.size()));
    return RingElem(witt_ring, RingElem::List(std::move(components)));
}

const std::vector<RingElem>& witt_components(const RingElem& a) {
    as_witt(*a.parent(), "witt_components");
    return a.list();
}

RingElem witt_truncate(const RingElem& a) {
    const auto& w = as_witt(*a.parent(), "truncate");
    if (w.n() < 1) throw ShapeMismatchError("cannot truncate W_0");
    RingPtr child = make_witt_ring(w.base(), w.p(), w.n() - 1, w.laws());
    const auto& x = a.list();
    return RingElem(child, RingElem::List(x.begin(), x.end() - 1));
}

RingElem witt_delta_shift(const RingElem& a) {
    const auto& w = as_witt(*a.parent(), "delta");
    if (w.n() < 1) throw ShapeMismatchError("cannot shift W_0");
    RingPtr child = make_witt_ring(w.base(), w.p(), w.n() - 1, w.laws());
    const auto& x = a.list();
    return RingElem(child, RingElem::List(x.begin() + 1, x.end()));
}

RingElem witt_frobenius(const RingElem& a) {
    const auto& w = as_witt(*a.parent(), "frobenius");
    if (w.n() < 1) throw ShapeMismatchError("frobenius needs length >= 2");
    RingElem t = witt_truncate(a);
    RingElem d = witt_delta_shift(a);
    const RingPtr& child = t.parent();
    return child->add(child->pow(t, static_cast<unsigned long>(w.p())),
                      child->mul(child->from_long(w.p()), d));
}

std::vector<RingElem> witt_ghost(const RingElem& a) {
    const auto& w = as_witt(*a.parent(), "ghost");
    const auto& x = a.list();
    std::vector<RingElem> out;
    out.reserve(x.size());
    for (long m = 0; m <= w.n(); ++m) {
        std::vector<RingElem> vals(x.begin(), x.begin() + (m + 1));
        out.push_back(w.eval_law(LawKind::Ghost, m, vals));
    }
    return out;
}

std::vector<RingElem> bj_to_classical(const RingElem& a) {
    const auto& w = as_witt(*a.parent(), "bj_to_classical");
    const auto& x = a.list();
    std::vector<RingElem> out;
    out.reserve(x.size());
    for (long m = 0; m <= w.n(); ++m) {
        std::vector<RingElem> vals(x.begin(), x.begin() + (m + 1));
        out.push_back(w.eval_law(LawKind::WittFromBJ, m, vals));
    }
    return out;
}

RingElem classical_to_bj(const RingPtr& witt_ring, const std::vector<RingElem>& classical) {
    const auto& w = as_witt(*witt_ring, "classical_to_bj");
    if (classical.size() != static_cast<std::size_t>(w.n() + 1))
        throw ShapeMismatchError("classical coordinate count mismatch");
    RingElem::List out;
    out.reserve(classical.size());
    for (long m = 0; m <= w.n(); ++m) {
        std::vector<RingElem> vals(classical.begin(), classical.begin() + (m + 1));
        out.push_back(w.eval_law(LawKind::BJFromWitt, m, vals));
    }
    return RingElem(witt_ring, std::move(out));
}

RingElem witt_verschiebung(const RingElem& a) {
    const auto& w = as_witt(*a.parent(), "verschiebung");
    std::vector<RingElem> classical = bj_to_classical(a);
    classical.insert(classical.begin(), w.base()->zero());
    RingPtr up = make_witt_ring(w.base(), w.p(), w.n() + 1, w.laws());
    return classical_to_bj(up, classical);
}

RingElem witt_coplethysm(const RingElem& a, long m, long n) {
    const auto& w = as_witt(*a.parent(), "coplethysm");
    if (w.n() != m + n) throw ShapeMismatchError("coplethysm split does not match length");
    const auto& x = a.list();
    RingPtr inner = make_witt_ring(w.base(), w.p(), m, w.laws());
    RingPtr outer = make_witt_ring(inner, w.p(), n, w.laws());
    RingElem::List windows;
    windows.reserve(static_cast<std::size_t>(n + 1));
    for (long s = 0; s <= n; ++s)
        windows.push_back(RingElem(inner, RingElem::List(x.begin() + s, x.begin() + s + m + 1)));
    return RingElem(outer, std::move(windows));
}

EqualizerVerdict coplethysm_equalizer_check(const RingElem& z) {
    const auto& outer = as_witt(*z.parent(), "equalizer check");
    auto inner_info = witt_ring_info(*outer.base());
    if (!inner_info || inner_info->n != 1)
        throw ShapeMismatchError("equalizer check expects an element of W_n(W_1(R))");
    const RingPtr& R = inner_info->base;
    const auto& windows = z.list();
    EqualizerVerdict v;
    for (std::size_t i = 0; i + 1 < windows.size(); ++i) {
        const RingElem& b_i = windows[i].list()[1];
        const RingElem& a_next = windows[i + 1].list()[0];
        if (!R->eq(b_i, a_next)) {
            v.in_image = false;
            v.witness_index = i;
            return v;
        }
    }
    RingPtr target = make_witt_ring(R, outer.p(), outer.n() + 1, outer.laws());
    RingElem::List comps;
    comps.reserve(windows.size() + 1);
    for (const auto& win : windows) comps.push_back(win.list()[0]);
    comps.push_back(windows.back().list()[1]);
    v.in_image = true;
    v.preimage = RingElem(target, std::move(comps));
    return v;
}

std::vector<RingElem> ghost_retraction(const std::vector<std::pair<RingElem, RingElem>>& g) {
    if (g.empty()) throw ShapeMismatchError("ghost_retraction needs at least one pair");
    std::vector<RingElem> out;
    out.reserve(g.size() + 1);
    for (const auto& [a, b] : g) out.push_back(a);
    out.push_back(g.back().second);
    return out;
}

std::optional<long> p_nilpotency_degree(const RingPtr& witt_ring, long bound) {
    const auto& w = as_witt(*witt_ring, "p_nilpotency_degree");
    RingElem p_elem = witt_ring->from_long(w.p());
    RingElem acc = p_elem;
    for (long e = 1; e <= bound; ++e) {
        if (witt_ring->is_zero(acc)) return e;
        acc = witt_ring->mul(acc, p_elem);
    }
    return std::nullopt;
}

}  // namespace witt
