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

#include "witt/unipoly.hpp"

#include <sstream>

namespace witt {

UniPoly::UniPoly(RingPtr ring, std::vector<RingElem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(RingPtr ring, long c) {
    RingElem e = ring->from_long(c);
    return UniPoly(std::move(ring), {e});
}

UniPoly UniPoly::x(RingPtr ring) {
    std::vector<RingElem> c{ring->zero(), ring->one()};
    return UniPoly(std::move(ring), std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && ring_->is_zero(c_.back())) c_.pop_back();
}

RingElem UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<RingElem> r(std::max(c_.size(), o.c_.size()), ring_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ring_->add(coeff(i), o.coeff(i));
    return UniPoly(ring_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<RingElem> r(std::max(c_.size(), o.c_.size()), ring_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ring_->sub(coeff(i), o.coeff(i));
    return UniPoly(ring_, std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<RingElem> r(c_.size(), ring_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ring_->neg(c_[i]);
    return UniPoly(ring_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(ring_);
    std::vector<RingElem> r(c_.size() + o.c_.size() - 1, ring_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (ring_->is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = ring_->add(r[i + j], ring_->mul(c_[i], o.c_[j]));
    }
    return UniPoly(ring_, std::move(r));
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!ring_->eq(c_[i], o.c_[i])) return false;
    return true;
}

UniPoly UniPoly::scaled(const RingElem& c) const {
    std::vector<RingElem> r(c_.size(), ring_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ring_->mul(c_[i], c);
    return UniPoly(ring_, std::move(r));
}

UniPoly UniPoly::scaled(long c) const { return scaled(ring_->from_long(c)); }

UniPoly UniPoly::shifted(std::size_t e) const {
    if (is_zero()) return *this;
    std::vector<RingElem> r(c_.size() + e, ring_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
    return UniPoly(ring_, std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = constant(ring_, 1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1U) r = r * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return r;
}

RingElem UniPoly::evaluate(const RingElem& v) const {
    RingElem acc = ring_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = ring_->add(ring_->mul(acc, v), c_[i]);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() < 2) return zero(ring_);
    std::vector<RingElem> r(c_.size() - 1, ring_->zero());
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = ring_->mul(c_[i], ring_->from_long(static_cast<long>(i)));
    return UniPoly(ring_, std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod_monic(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero() || !b.ring()->eq(b.leading(), b.ring()->one()))
        throw Error("divmod_monic needs a monic divisor");
    const RingPtr& R = a.ring();
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) return {zero(R), a};
    std::vector<RingElem> rem = a.c_;
    std::vector<RingElem> quot(static_cast<std::size_t>(da - db + 1), R->zero());
    for (long d = da; d >= db; --d) {
        RingElem c = rem[static_cast<std::size_t>(d)];
        if (R->is_zero(c)) continue;
        quot[static_cast<std::size_t>(d - db)] = c;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(d - db + i)] =
                R->sub(rem[static_cast<std::size_t>(d - db + i)], R->mul(c, b.c_[static_cast<std::size_t>(i)]));
    }
    rem.resize(static_cast<std::size_t>(db), R->zero());
    return {UniPoly(R, std::move(quot)), UniPoly(R, std::move(rem))};
}

SparsePoly UniPoly::to_sparse(const std::string& var) const {
    VarList vars = make_vars({var});
    std::vector<SparsePoly::Term> terms;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (ring_->is_zero(c_[i])) continue;
        terms.push_back({Monomial{{static_cast<std::uint32_t>(i)}}, c_[i]});
    }
    return SparsePoly::from_terms(ring_, vars, std::move(terms));
}

UniPoly UniPoly::from_sparse(const SparsePoly& f) {
    if (f.vars()->size() != 1) throw Error("from_sparse needs a univariate polynomial");
    std::vector<RingElem> c(f.degree() + 1, f.ring()->zero());
    for (const auto& t : f.terms()) c[t.first.e[0]] = t.second;
    return UniPoly(f.ring(), std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (ring_->is_zero(c_[i])) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = ring_->str(c_[i]);
        if (i == 0 || cs != "1") os << cs;
        if (i > 0) {
            if (cs != "1") os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace witt
