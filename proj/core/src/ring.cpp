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

#include "witt/ring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace witt {

RingElem Ring::pow(const RingElem& a, unsigned long e) const {
    RingElem r = one();
    RingElem base = a;
    while (e > 0) {
        if (e & 1UL) r = mul(r, base);
        e >>= 1UL;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Z

namespace {

class IntegerRing final : public Ring {
   public:
    std::string name() const override { return "Z"; }
    RingElem zero() const override { return RingElem(self(), Integer(0)); }
    RingElem one() const override { return RingElem(self(), Integer(1)); }
    RingElem from_integer(const Integer& v) const override { return RingElem(self(), v); }
    RingElem add(const RingElem& a, const RingElem& b) const override {
        return RingElem(self(), a.integer() + b.integer());
    }
    RingElem sub(const RingElem& a, const RingElem& b) const override {
        return RingElem(self(), a.integer() - b.integer());
    }
    RingElem neg(const RingElem& a) const override { return RingElem(self(), -a.integer()); }
    RingElem mul(const RingElem& a, const RingElem& b) const override {
        return RingElem(self(), a.integer() * b.integer());
    }
    bool eq(const RingElem& a, const RingElem& b) const override { return a.integer() == b.integer(); }
    bool is_zero(const RingElem& a) const override { return a.integer().is_zero(); }
    std::string str(const RingElem& a) const override { return a.integer().str(); }
    bool same_as(const Ring& other) const override { return dynamic_cast<const IntegerRing*>(&other) != nullptr; }
    bool is_unit(const RingElem& a) const override {
        return a.integer() == Integer(1) || a.integer() == Integer(-1);
    }
    RingElem inv(const RingElem& a) const override {
        if (!is_unit(a)) throw NotAUnitError(a.integer().str() + " in Z");
        return a;
    }
};

std::int64_t mod_norm(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// (p, k) for prime-power m, or (0, 0).
std::pair<long, long> prime_power_split(std::int64_t m) {
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long k = 0;
            std::int64_t v = m;
            while (v % p == 0) {
                v /= p;
                ++k;
            }
            return v == 1 ? std::pair<long, long>{static_cast<long>(p), k} : std::pair<long, long>{0, 0};
        }
    }
    return {static_cast<long>(m), 1};  // m itself prime
}

// ---------------------------------------------------------------------------
// Z/m

class ZmodRing final : public Ring {
   public:
    explicit ZmodRing(std::int64_t m) : m_(m) {
        if (m < 2 || m >= (std::int64_t{1} << 31)) throw Error("Z/m requires 2 <= m < 2^31");
        auto [p, k] = prime_power_split(m);
        p_ = p;
        k_ = k;
    }
    std::int64_t modulus() const { return m_; }

    std::string name() const override { return "Z/" + std::to_string(m_); }
    RingElem zero() const override { return RingElem(self(), std::int64_t{0}); }
    RingElem one() const override { return RingElem(self(), std::int64_t{1 % m_}); }
    RingElem from_integer(const Integer& v) const override {
        return RingElem(self(), v.mod(Integer(static_cast<long>(m_))).to_i64());
    }
    RingElem add(const RingElem& a, const RingElem& b) const override {
        std::int64_t s = a.i64() + b.i64();
        if (s >= m_) s -= m_;
        return RingElem(self(), s);
    }
    RingElem sub(const RingElem& a, const RingElem& b) const override {
        std::int64_t s = a.i64() - b.i64();
        if (s < 0) s += m_;
        return RingElem(self(), s);
    }
    RingElem neg(const RingElem& a) const override {
        return RingElem(self(), a.i64() == 0 ? std::int64_t{0} : m_ - a.i64());
    }
    RingElem mul(const RingElem& a, const RingElem& b) const override {
        return RingElem(self(), (a.i64() * b.i64()) % m_);
    }
    bool eq(const RingElem& a, const RingElem& b) const override { return a.i64() == b.i64(); }
    bool is_zero(const RingElem& a) const override { return a.i64() == 0; }
    std::string str(const RingElem& a) const override { return std::to_string(a.i64()); }
    bool same_as(const Ring& other) const override {
        auto* o = dynamic_cast<const ZmodRing*>(&other);
        return o != nullptr && o->m_ == m_;
    }
    std::optional<std::uint64_t> cardinality() const override { return static_cast<std::uint64_t>(m_); }
    RingElem element_at(std::uint64_t i) const override { return RingElem(self(), static_cast<std::int64_t>(i)); }
    long residue_char() const override { return p_; }
    long precision() const override { return k_; }
    bool is_unit(const RingElem& a) const override { return std::gcd(a.i64(), m_) == 1; }
    RingElem inv(const RingElem& a) const override {
        mpz_class r;
        mpz_class v(static_cast<long>(a.i64())), m(static_cast<long>(m_));
        if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0)
            throw NotAUnitError(std::to_string(a.i64()) + " in " + name());
        return RingElem(self(), Integer(r).to_i64());
    }

   private:
    std::int64_t m_;
    long p_ = 0;
    long k_ = 0;
};

// ---------------------------------------------------------------------------
// dense polynomials over F_p (helpers for Galois ring moduli)

using FpPoly = std::vector<std::int64_t>;  // coefficients, index = degree

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    fp_trim(r);
    return r;
}

std::int64_t fp_inv_scalar(std::int64_t a, long p) {
    std::int64_t r = 1;
    std::int64_t base = mod_norm(a, p);
    long e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// remainder of a modulo b (b nonzero)
FpPoly fp_rem(FpPoly a, const FpPoly& b, long p) {
    fp_trim(a);
    std::int64_t lead_inv = fp_inv_scalar(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::int64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_norm(a[shift + i] - c * b[i], p);
        fp_trim(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FpPoly fp_powmod_xq(const FpPoly& f, long p, long e_of_p, long p_base) {
    // x^(p_base^e_of_p) mod f, by square-and-multiply on the exponent
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p_base), static_cast<unsigned long>(e_of_p));
    FpPoly result{0, 1};  // x
    result = fp_rem(result, f, p);
    FpPoly acc{1};
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = fp_rem(fp_mul(acc, acc, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = fp_rem(fp_mul(acc, result, p), f, p);
    }
    return acc;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::int64_t>& monic_coeffs, long p) {
    FpPoly f = monic_coeffs;
    for (auto& c : f) c = mod_norm(c, p);
    fp_trim(f);
    if (f.size() < 2 || f.back() != 1) return false;
    long d = static_cast<long>(f.size()) - 1;
    if (d == 1) return true;
    // x^(p^d) == x mod f
    FpPoly xq = fp_powmod_xq(f, p, d, p);
    FpPoly x_minus{0, 1};
    FpPoly diff = xq;
    diff.resize(std::max(diff.size(), x_minus.size()), 0);
    diff[1] = mod_norm(diff[1] - 1, p);
    fp_trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(d/q)) - x, f) == 1 for prime divisors q of d
    for (long q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool q_prime = true;
        for (long t = 2; t * t <= q; ++t)
            if (q % t == 0) q_prime = false;
        if (!q_prime) continue;
        FpPoly xe = fp_powmod_xq(f, p, d / q, p);
        xe.resize(std::max<std::size_t>(xe.size(), 2), 0);
        xe[1] = mod_norm(xe[1] - 1, p);
        fp_trim(xe);
        FpPoly g = fp_gcd(f, xe, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::int64_t> tabulated_irreducible(long p, long d) {
    if (d < 1) throw Error("Galois ring degree must be >= 1");
    if (d == 1) return {0};  // f = x
    // first monic irreducible of degree d in base-p coefficient order,
    // nonzero constant term; coefficients returned are c_0..c_{d-1}
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    for (mpz_class c = 1; c < bound; ++c) {
        std::vector<std::int64_t> coeffs(d, 0);
        mpz_class v = c;
        for (long i = 0; i < d; ++i) {
            coeffs[i] = mpz_class(v % p).get_si();
            v /= p;
        }
        if (coeffs[0] == 0) continue;
        std::vector<std::int64_t> f = coeffs;
        f.push_back(1);
        if (is_irreducible_mod_p(f, p)) return coeffs;
    }
    throw Error("no irreducible found");  // unreachable for d >= 1
}

// ---------------------------------------------------------------------------
// GR(p^k, d)

namespace {

class GaloisRing final : public Ring {
   public:
    GaloisRing(long p, long k, std::vector<std::int64_t> modulus) : p_(p), k_(k) {
        if (p < 2 || k < 1) throw Error("GR(p^k, d) requires p >= 2, k >= 1");
        q_ = 1;
        for (long i = 0; i < k; ++i) {
            q_ *= p;
            if (q_ >= (std::int64_t{1} << 31)) throw Error("GR(p^k, d): p^k too large");
        }
        if (modulus.size() < 2 || modulus.back() != 1) throw Error("GR modulus must be monic of degree >= 1");
        d_ = static_cast<long>(modulus.size()) - 1;
        f_ = std::move(modulus);
        for (auto& c : f_) c = mod_norm(c, q_);
        f_.back() = 1;
        std::vector<std::int64_t> fbar = f_;
        for (auto& c : fbar) c = mod_norm(c, p_);
        if (!is_irreducible_mod_p(fbar, p_)) throw Error("GR modulus is not irreducible mod p");
    }

    long p() const { return p_; }
    long k() const { return k_; }
    long d() const { return d_; }
    const std::vector<std::int64_t>& modulus() const { return f_; }

    std::string name() const override {
        return "GR(" + std::to_string(p_) + "^" + std::to_string(k_) + ",d=" + std::to_string(d_) + ")";
    }
    RingElem zero() const override { return RingElem(self(), std::vector<std::int64_t>(d_, 0)); }
    RingElem one() const override {
        std::vector<std::int64_t> v(d_, 0);
        v[0] = 1 % q_;
        return RingElem(self(), v);
    }
    RingElem from_integer(const Integer& v) const override {
        std::vector<std::int64_t> c(d_, 0);
        c[0] = v.mod(Integer(static_cast<long>(q_))).to_i64();
        return RingElem(self(), c);
    }
    RingElem add(const RingElem& a, const RingElem& b) const override {
        std::vector<std::int64_t> r(d_);
        const auto& x = a.coeffs();
        const auto& y = b.coeffs();
        for (long i = 0; i < d_; ++i) {
            std::int64_t s = x[i] + y[i];
            r[i] = s >= q_ ? s - q_ : s;
        }
        return RingElem(self(), std::move(r));
    }
    RingElem sub(const RingElem& a, const RingElem& b) const override {
        std::vector<std::int64_t> r(d_);
        const auto& x = a.coeffs();
        const auto& y = b.coeffs();
        for (long i = 0; i < d_; ++i) {
            std::int64_t s = x[i] - y[i];
            r[i] = s < 0 ? s + q_ : s;
        }
        return RingElem(self(), std::move(r));
    }
    RingElem neg(const RingElem& a) const override {
        std::vector<std::int64_t> r(d_);
        const auto& x = a.coeffs();
        for (long i = 0; i < d_; ++i) r[i] = x[i] == 0 ? 0 : q_ - x[i];
        return RingElem(self(), std::move(r));
    }
    RingElem mul(const RingElem& a, const RingElem& b) const override {
        const auto& x = a.coeffs();
        const auto& y = b.coeffs();
        std::vector<std::int64_t> prod(2 * d_ - 1, 0);
        for (long i = 0; i < d_; ++i) {
            if (x[i] == 0) continue;
            for (long j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % q_;
        }
        // reduce by the monic modulus
        for (long deg = 2 * d_ - 2; deg >= d_; --deg) {
            std::int64_t c = prod[deg];
            if (c == 0) continue;
            prod[deg] = 0;
            for (long i = 0; i < d_; ++i)
                prod[deg - d_ + i] = mod_norm(prod[deg - d_ + i] - c * f_[i], q_);
        }
        prod.resize(d_);
        return RingElem(self(), std::move(prod));
    }
    bool eq(const RingElem& a, const RingElem& b) const override { return a.coeffs() == b.coeffs(); }
    bool is_zero(const RingElem& a) const override {
        const auto& x = a.coeffs();
        return std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; });
    }
    std::string str(const RingElem& a) const override {
        if (d_ == 1) return std::to_string(a.coeffs()[0]);
        std::ostringstream os;
        os << "[";
        const auto& x = a.coeffs();
        for (long i = 0; i < d_; ++i) os << (i ? "," : "") << x[i];
        os << "]";
        return os.str();
    }
    bool same_as(const Ring& other) const override {
        auto* o = dynamic_cast<const GaloisRing*>(&other);
        return o != nullptr && o->p_ == p_ && o->k_ == k_ && o->f_ == f_;
    }
    std::optional<std::uint64_t> cardinality() const override {
        std::uint64_t n = 1;
        for (long i = 0; i < d_; ++i) n *= static_cast<std::uint64_t>(q_);
        return n;
    }
    RingElem element_at(std::uint64_t i) const override {
        std::vector<std::int64_t> c(d_);
        for (long j = 0; j < d_; ++j) {
            c[j] = static_cast<std::int64_t>(i % static_cast<std::uint64_t>(q_));
            i /= static_cast<std::uint64_t>(q_);
        }
        return RingElem(self(), std::move(c));
    }
    long residue_char() const override { return p_; }
    long precision() const override { return k_; }
    bool is_unit(const RingElem& a) const override {
        const auto& x = a.coeffs();
        return std::any_of(x.begin(), x.end(), [this](std::int64_t c) { return c % p_ != 0; });
    }
    RingElem inv(const RingElem& a) const override {
        if (!is_unit(a)) throw NotAUnitError(str(a) + " in " + name());
        RingElem v = residue_inverse(a);
        // Newton lift: v <- v(2 - a v), doubling p-adic precision
        RingElem two = from_long(2);
        for (long prec = 1; prec < k_; prec *= 2) v = mul(v, sub(two, mul(a, v)));
        if (!eq(mul(a, v), one())) throw Error("inversion failed in " + name());
        return v;
    }

   private:
    // inverse of the residue of a in F_p[x]/(f mod p), lifted coefficientwise
    RingElem residue_inverse(const RingElem& a) const {
        FpPoly fbar(f_.begin(), f_.end());
        for (auto& c : fbar) c = mod_norm(c, p_);
        FpPoly abar(a.coeffs().begin(), a.coeffs().end());
        for (auto& c : abar) c = mod_norm(c, p_);
        fp_trim(abar);
        // extended Euclid: s*abar + t*fbar = gcd
        FpPoly r0 = fbar, r1 = abar, s0 = {}, s1 = {1};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            FpPoly q;
            FpPoly r2 = r0;
            std::int64_t lead_inv = fp_inv_scalar(r1.back(), p_);
            while (r2.size() >= r1.size() && !r2.empty()) {
                std::int64_t c = r2.back() * lead_inv % p_;
                std::size_t shift = r2.size() - r1.size();
                if (q.size() < shift + 1) q.resize(shift + 1, 0);
                q[shift] = c;
                for (std::size_t i = 0; i < r1.size(); ++i)
                    r2[shift + i] = mod_norm(r2[shift + i] - c * r1[i], p_);
                fp_trim(r2);
            }
            FpPoly s2 = s0;  // s2 = s0 - q*s1
            FpPoly qs = fp_mul(q, s1, p_);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = mod_norm(s2[i] - qs[i], p_);
            fp_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd (a nonzero constant, since fbar is irreducible and abar != 0)
        std::int64_t g_inv = fp_inv_scalar(r0.empty() ? 1 : r0.back(), p_);
        std::vector<std::int64_t> v(d_, 0);
        for (std::size_t i = 0; i < s0.size() && i < static_cast<std::size_t>(d_); ++i)
            v[i] = s0[i] * g_inv % p_;
        return RingElem(self(), std::move(v));
    }

    long p_, k_, d_;
    std::int64_t q_;
    std::vector<std::int64_t> f_;
};

}  // namespace

RingPtr integer_ring() {
    static RingPtr instance = std::make_shared<IntegerRing>();
    return instance;
}

RingPtr make_zmod(std::int64_t m) { return std::make_shared<ZmodRing>(m); }

RingPtr make_prime_field(long p) { return make_zmod(p); }

RingPtr make_galois_ring(long p, long k, long d) {
    if (d == 1) return make_zmod([&] {
        std::int64_t q = 1;
        for (long i = 0; i < k; ++i) q *= p;
        return q;
    }());
    auto c = tabulated_irreducible(p, d);
    c.push_back(1);
    return std::make_shared<GaloisRing>(p, k, std::move(c));
}

RingPtr make_galois_ring(long p, long k, std::vector<std::int64_t> modulus) {
    return std::make_shared<GaloisRing>(p, k, std::move(modulus));
}

std::optional<std::int64_t> zmod_modulus(const Ring& r) {
    auto* z = dynamic_cast<const ZmodRing*>(&r);
    if (z == nullptr) return std::nullopt;
    return z->modulus();
}

std::optional<GaloisRingInfo> galois_ring_info(const Ring& r) {
    auto* g = dynamic_cast<const GaloisRing*>(&r);
    if (g == nullptr) return std::nullopt;
    return GaloisRingInfo{g->p(), g->k(), g->d(), g->modulus()};
}

RingPtr residue_ring(const RingPtr& r) {
    long p = r->residue_char();
    if (p == 0) throw Error(r->name() + " has no residue ring");
    if (auto gi = galois_ring_info(*r)) {
        std::vector<std::int64_t> fbar = gi->modulus;
        for (auto& c : fbar) c = mod_norm(c, p);
        fbar.back() = 1;
        return std::make_shared<GaloisRing>(p, 1, std::move(fbar));
    }
    return make_zmod(p);
}

RingElem reduce_mod_p(const RingPtr& r, const RingElem& a) {
    long p = r->residue_char();
    RingPtr res = residue_ring(r);
    if (auto gi = galois_ring_info(*r)) {
        std::vector<std::int64_t> c = a.coeffs();
        for (auto& x : c) x = mod_norm(x, p);
        return RingElem(res, std::move(c));
    }
    return RingElem(res, a.i64() % p);
}

RingElem lift_from_residue(const RingPtr& r, const RingElem& a) {
    if (galois_ring_info(*r)) return RingElem(r, a.coeffs());
    return RingElem(r, a.i64());
}

bool galois_is_scalar(const RingElem& a) {
    if (!galois_ring_info(*a.parent())) return true;
    const auto& c = a.coeffs();
    return std::all_of(c.begin() + 1, c.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t galois_scalar_value(const RingElem& a) {
    if (!galois_ring_info(*a.parent())) return a.i64();
    return a.coeffs()[0];
}

}  // namespace witt
