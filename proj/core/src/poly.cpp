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

#include "witt/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace witt {

VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool grlex_before(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : m.e) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return h;
}

SparsePoly SparsePoly::constant(RingPtr ring, VarList vars, const RingElem& c) {
    SparsePoly p(ring, vars);
    if (!ring->is_zero(c)) p.terms_.push_back({Monomial{std::vector<std::uint32_t>(vars->size(), 0)}, c});
    return p;
}

SparsePoly SparsePoly::constant(RingPtr ring, VarList vars, long c) {
    RingElem e = ring->from_long(c);
    return constant(ring, std::move(vars), e);
}

SparsePoly SparsePoly::variable(RingPtr ring, VarList vars, std::size_t index, std::uint32_t exp) {
    if (index >= vars->size()) throw Error("variable index out of range");
    SparsePoly p(ring, vars);
    Monomial m{std::vector<std::uint32_t>(vars->size(), 0)};
    m.e[index] = exp;
    p.terms_.push_back({std::move(m), ring->one()});
    if (exp == 0) p.sort_and_prune();
    return p;
}

SparsePoly SparsePoly::from_terms(RingPtr ring, VarList vars, std::vector<Term> terms) {
    SparsePoly p(std::move(ring), std::move(vars));
    for (auto& t : terms)
        if (t.first.e.size() != p.vars_->size()) throw Error("monomial arity mismatch");
    p.terms_ = std::move(terms);
    p.sort_and_prune();
    return p;
}

void SparsePoly::sort_and_prune() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_before(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second = ring_->add(out.back().second, t.second);
            if (ring_->is_zero(out.back().second)) out.pop_back();
        } else if (!ring_->is_zero(t.second)) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

std::uint64_t SparsePoly::degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r(ring_, vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && grlex_before(terms_[i].first, o.terms_[j].first))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || grlex_before(o.terms_[j].first, terms_[i].first)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            RingElem c = ring_->add(terms_[i].second, o.terms_[j].second);
            if (!ring_->is_zero(c)) r.terms_.push_back({terms_[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(ring_, vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.first, ring_->neg(t.second)});
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (is_zero() || o.is_zero()) return zero(ring_, vars_);
    const std::size_t nv = vars_->size();

    // Product exponents fit per-variable bit fields of a single word for
    // every law-generation workload; fall back to vector keys otherwise.
    std::vector<std::uint32_t> maxe(nv, 0);
    for (const auto& t : terms_)
        for (std::size_t v = 0; v < nv; ++v) maxe[v] = std::max(maxe[v], t.first.e[v]);
    std::vector<std::uint32_t> maxo(nv, 0);
    for (const auto& t : o.terms_)
        for (std::size_t v = 0; v < nv; ++v) maxo[v] = std::max(maxo[v], t.first.e[v]);
    std::vector<unsigned> width(nv);
    unsigned total_bits = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        std::uint64_t bound = static_cast<std::uint64_t>(maxe[v]) + maxo[v];
        unsigned w = 1;
        while ((std::uint64_t{1} << w) <= bound) ++w;
        width[v] = w;
        total_bits += w;
    }

    SparsePoly r(ring_, vars_);
    if (total_bits <= 64) {
        auto pack = [&](const Monomial& m) {
            std::uint64_t key = 0;
            for (std::size_t v = 0; v < nv; ++v) key = (key << width[v]) | m.e[v];
            return key;
        };
        std::unordered_map<std::uint64_t, RingElem> acc;
        acc.reserve(terms_.size() + o.terms_.size());
        std::vector<std::uint64_t> okeys(o.terms_.size());
        for (std::size_t j = 0; j < o.terms_.size(); ++j) okeys[j] = pack(o.terms_[j].first);
        for (const auto& a : terms_) {
            std::uint64_t akey = pack(a.first);
            for (std::size_t j = 0; j < o.terms_.size(); ++j) {
                std::uint64_t key = akey + okeys[j];  // fields wide enough: no carries
                RingElem c = ring_->mul(a.second, o.terms_[j].second);
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, std::move(c));
                else
                    it->second = ring_->add(it->second, c);
            }
        }
        r.terms_.reserve(acc.size());
        Monomial m{std::vector<std::uint32_t>(nv, 0)};
        for (auto& kv : acc) {
            if (ring_->is_zero(kv.second)) continue;
            std::uint64_t key = kv.first;
            for (std::size_t v = nv; v-- > 0;) {
                m.e[v] = static_cast<std::uint32_t>(key & ((std::uint64_t{1} << width[v]) - 1));
                key >>= width[v];
            }
            r.terms_.push_back({m, std::move(kv.second)});
        }
    } else {
        std::unordered_map<Monomial, RingElem, MonomialHash> acc;
        acc.reserve(terms_.size() * 2);
        Monomial m{std::vector<std::uint32_t>(nv, 0)};
        for (const auto& a : terms_) {
            for (const auto& b : o.terms_) {
                for (std::size_t v = 0; v < nv; ++v) m.e[v] = a.first.e[v] + b.first.e[v];
                RingElem c = ring_->mul(a.second, b.second);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, std::move(c));
                else
                    it->second = ring_->add(it->second, c);
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!ring_->is_zero(kv.second)) r.terms_.push_back({kv.first, std::move(kv.second)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return grlex_before(x.first, y.first); });
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].first == o.terms_[i].first)) return false;
        if (!ring_->eq(terms_[i].second, o.terms_[i].second)) return false;
    }
    return true;
}

SparsePoly SparsePoly::scaled(const RingElem& c) const {
    SparsePoly r(ring_, vars_);
    if (ring_->is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        RingElem v = ring_->mul(t.second, c);
        if (!ring_->is_zero(v)) r.terms_.push_back({t.first, std::move(v)});
    }
    return r;
}

SparsePoly SparsePoly::scaled(const Integer& c) const { return scaled(ring_->from_integer(c)); }

SparsePoly SparsePoly::scaled(long c) const { return scaled(ring_->from_long(c)); }

SparsePoly SparsePoly::pow(std::uint32_t e) const {
    SparsePoly r = constant(ring_, vars_, 1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1U) r = r * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return r;
}

SparsePoly SparsePoly::exact_div_by_int(const Integer& c) const {
    if (!ring_->same_as(*integer_ring())) throw Error("exact_div_by_int needs coefficients in Z");
    if (c.is_zero()) throw NotDivisibleError("division by zero");
    SparsePoly r(ring_, vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        const Integer& v = t.second.integer();
        if (!v.divisible_by(c)) {
            std::ostringstream os;
            os << "coefficient " << v.str() << " of ";
            for (std::size_t i = 0; i < t.first.e.size(); ++i)
                if (t.first.e[i] != 0) os << (*vars_)[i] << ":" << t.first.e[i] << " ";
            os << "not divisible by " << c.str();
            throw NotDivisibleError(os.str());
        }
        r.terms_.push_back({t.first, RingElem(ring_, v.divexact(c))});
    }
    return r;
}

RingElem SparsePoly::evaluate(std::span<const RingElem> values, const RingPtr& target) const {
    if (values.size() != vars_->size()) throw Error("evaluate: value count mismatch");
    const bool same = ring_->same_as(*target);
    if (!same && !ring_->same_as(*integer_ring()))
        throw Error("evaluate: cross-ring evaluation needs integer coefficients");
    // power tables
    std::vector<std::uint32_t> maxe(vars_->size(), 0);
    for (const auto& t : terms_)
        for (std::size_t v = 0; v < maxe.size(); ++v) maxe[v] = std::max(maxe[v], t.first.e[v]);
    std::vector<std::vector<RingElem>> pows(vars_->size());
    for (std::size_t v = 0; v < maxe.size(); ++v) {
        pows[v].reserve(maxe[v] + 1);
        pows[v].push_back(target->one());
        for (std::uint32_t e = 1; e <= maxe[v]; ++e) pows[v].push_back(target->mul(pows[v].back(), values[v]));
    }
    RingElem sum = target->zero();
    for (const auto& t : terms_) {
        RingElem prod = same ? t.second : target->from_integer(t.second.integer());
        for (std::size_t v = 0; v < vars_->size(); ++v)
            if (t.first.e[v] != 0) prod = target->mul(prod, pows[v][t.first.e[v]]);
        sum = target->add(sum, prod);
    }
    return sum;
}

SparsePoly SparsePoly::substitute(std::span<const SparsePoly> replacements) const {
    if (replacements.size() != vars_->size()) throw Error("substitute: replacement count mismatch");
    if (replacements.empty()) throw Error("substitute: no variables");
    const RingPtr& R = replacements[0].ring();
    const VarList& V = replacements[0].vars();
    const bool same = ring_->same_as(*R);
    if (!same && !ring_->same_as(*integer_ring()))
        throw Error("substitute: cross-ring substitution needs integer coefficients");
    std::vector<std::vector<SparsePoly>> pows(replacements.size());
    for (std::size_t v = 0; v < replacements.size(); ++v) pows[v].push_back(constant(R, V, 1));
    SparsePoly sum = zero(R, V);
    for (const auto& t : terms_) {
        RingElem c = same ? t.second : R->from_integer(t.second.integer());
        SparsePoly prod = constant(R, V, c);
        for (std::size_t v = 0; v < vars_->size(); ++v) {
            std::uint32_t e = t.first.e[v];
            while (pows[v].size() <= e) pows[v].push_back(pows[v].back() * replacements[v]);
            if (e != 0) prod = prod * pows[v][e];
        }
        sum = sum + prod;
    }
    return sum;
}

SparsePoly SparsePoly::with_vars(VarList new_vars, std::span<const std::size_t> where) const {
    if (where.size() != vars_->size()) throw Error("with_vars: mapping size mismatch");
    SparsePoly r(ring_, new_vars);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m{std::vector<std::uint32_t>(new_vars->size(), 0)};
        for (std::size_t v = 0; v < vars_->size(); ++v) {
            if (t.first.e[v] == 0) continue;
            if (where[v] >= new_vars->size()) throw Error("with_vars: used variable not mapped");
            m.e[where[v]] += t.first.e[v];
        }
        r.terms_.push_back({std::move(m), t.second});
    }
    r.sort_and_prune();
    return r;
}

bool SparsePoly::is_isobaric(std::span<const std::uint64_t> weights, std::uint64_t weight) const {
    for (const auto& t : terms_) {
        std::uint64_t w = 0;
        for (std::size_t v = 0; v < weights.size(); ++v) w += weights[v] * t.first.e[v];
        if (w != weight) return false;
    }
    return true;
}

std::size_t SparsePoly::max_coeff_bits() const {
    std::size_t bits = 0;
    for (const auto& t : terms_) bits = std::max(bits, t.second.integer().bit_length());
    return bits;
}

std::string SparsePoly::text_form() const {
    std::ostringstream os;
    for (const auto& t : terms_) {
        os << ring_->str(t.second);
        for (std::size_t v = 0; v < vars_->size(); ++v)
            if (t.first.e[v] != 0) os << " " << (*vars_)[v] << ":" << t.first.e[v];
        os << "\n";
    }
    return os.str();
}

SparsePoly SparsePoly::parse_text_form(const std::string& text, RingPtr ring, VarList vars) {
    if (!ring->same_as(*integer_ring())) throw Error("parse_text_form supports Z coefficients only");
    std::vector<Term> terms;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string coeff_tok;
        if (!(ls >> coeff_tok)) continue;
        Integer c;
        try {
            c = Integer(coeff_tok);
        } catch (const std::exception&) {
            throw CacheFormatError("bad coefficient '" + coeff_tok + "'");
        }
        Monomial m{std::vector<std::uint32_t>(vars->size(), 0)};
        std::string tok;
        while (ls >> tok) {
            auto colon = tok.find(':');
            if (colon == std::string::npos) throw CacheFormatError("bad term token '" + tok + "'");
            std::string name = tok.substr(0, colon);
            std::string exp_s = tok.substr(colon + 1);
            auto it = std::find(vars->begin(), vars->end(), name);
            if (it == vars->end()) throw CacheFormatError("unknown variable '" + name + "'");
            unsigned long e = 0;
            try {
                e = std::stoul(exp_s);
            } catch (const std::exception&) {
                throw CacheFormatError("bad exponent '" + exp_s + "'");
            }
            if (e == 0) throw CacheFormatError("zero exponent in '" + tok + "'");
            m.e[static_cast<std::size_t>(it - vars->begin())] += static_cast<std::uint32_t>(e);
        }
        terms.push_back({std::move(m), RingElem(ring, c)});
    }
    return from_terms(std::move(ring), std::move(vars), std::move(terms));
}

SparsePoly SparsePoly::derivative(std::size_t index) const {
    SparsePoly r(ring_, vars_);
    for (const auto& t : terms_) {
        std::uint32_t e = t.first.e[index];
        if (e == 0) continue;
        Monomial m = t.first;
        m.e[index] = e - 1;
        RingElem c = ring_->mul(t.second, ring_->from_long(static_cast<long>(e)));
        if (!ring_->is_zero(c)) r.terms_.push_back({std::move(m), std::move(c)});
    }
    r.sort_and_prune();
    return r;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = ring_->str(t.second);
        bool negative = !c.empty() && c[0] == '-';
        if (first) {
            if (negative) {
                os << "-";
                c = c.substr(1);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) c = c.substr(1);
        }
        first = false;
        bool has_var = t.first.total_degree() > 0;
        bool coeff_is_one = (c == "1");
        if (!has_var || !coeff_is_one) os << c;
        bool wrote = !has_var || !coeff_is_one;
        for (std::size_t v = 0; v < vars_->size(); ++v) {
            if (t.first.e[v] == 0) continue;
            if (wrote) os << "*";
            os << (*vars_)[v];
            if (t.first.e[v] > 1) os << "^" << t.first.e[v];
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<RingElem> finite_ring_enumerate(const RingPtr& r) {
    auto n = r->cardinality();
    if (!n) throw Error(r->name() + " is not finite");
    std::vector<RingElem> out;
    out.reserve(*n);
    for (std::uint64_t i = 0; i < *n; ++i) out.push_back(r->element_at(i));
    return out;
}

std::vector<RingElem> find_roots(const SparsePoly& f, const RingPtr& field) {
    if (f.vars()->size() != 1) throw Error("find_roots needs a univariate polynomial");
    if (f.is_zero()) throw Error("find_roots needs a nonzero polynomial");
    if (field->residue_char() == 0 || field->precision() != 1)
        throw Error("find_roots needs a finite field (k = 1)");
    std::vector<RingElem> roots;
    for (const RingElem& a : finite_ring_enumerate(field)) {
        RingElem v = f.evaluate(std::span<const RingElem>(&a, 1), field);
        if (field->is_zero(v)) roots.push_back(a);
    }
    return roots;
}

RingElem hensel_root(const SparsePoly& f, const RingElem& r0) {
    const RingPtr& R = r0.parent();
    if (f.vars()->size() != 1) throw Error("hensel_root needs a univariate polynomial");
    if (R->residue_char() == 0) throw Error("hensel_root needs a local ring Z/p^k or GR(p^k,d)");
    SparsePoly df = f.derivative(0);
    RingElem fr = f.evaluate(std::span<const RingElem>(&r0, 1), R);
    if (R->is_unit(fr)) throw Error("hensel_root: r0 is not a root mod p");
    RingElem dfr = df.evaluate(std::span<const RingElem>(&r0, 1), R);
    if (!R->is_unit(dfr)) throw NonUnitDerivativeError("f'(r0) is not a unit");
    RingElem r = r0;
    for (int iter = 0; iter < 64; ++iter) {
        RingElem v = f.evaluate(std::span<const RingElem>(&r, 1), R);
        if (R->is_zero(v)) return r;
        RingElem d = df.evaluate(std::span<const RingElem>(&r, 1), R);
        r = R->sub(r, R->mul(v, R->inv(d)));
    }
    throw Error("hensel_root: no convergence");
}

}  // namespace witt
