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

#include "witt/elliptic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace witt {

namespace {

std::int64_t ipow64(long p, long e) {
    std::int64_t r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

// canonical transport between the local rings used here (Z/p^k and
// GR(p^k, d) at matching residue characteristic, any precisions)
RingElem map_local_elem(const RingElem& v, const RingPtr& target) {
    const Ring& src = *v.parent();
    auto src_gal = galois_ring_info(src);
    auto tgt_gal = galois_ring_info(*target);
    if (!src_gal) {
        return target->from_long(v.i64());
    }
    if (!tgt_gal) {
        if (!galois_is_scalar(v)) throw Error("element does not descend to " + target->name());
        return target->from_long(galois_scalar_value(v));
    }
    if (src_gal->d != tgt_gal->d) throw Error("Galois ring degree mismatch");
    std::int64_t q = ipow64(tgt_gal->p, tgt_gal->k);
    std::vector<std::int64_t> c = v.coeffs();
    for (auto& x : c) x %= q;
    return RingElem(target, std::move(c));
}

}  // namespace

EllipticCurve make_curve(const RingPtr& R, const RingElem& a, const RingElem& b) {
    EllipticCurve e{R, a, b};
    RingElem disc = curve_discriminant(e);
    if (!R->is_unit(disc)) throw SingularCurveError("discriminant " + R->str(disc) + " is not a unit");
    return e;
}

EllipticCurve make_curve(const RingPtr& R, long a, long b) {
    return make_curve(R, R->from_long(a), R->from_long(b));
}

RingElem curve_discriminant(const EllipticCurve& e) {
    const RingPtr& R = e.R;
    RingElem a3 = R->pow(e.a, 3), b2 = R->mul(e.b, e.b);
    return R->mul(R->from_long(-16),
                  R->add(R->mul(R->from_long(4), a3), R->mul(R->from_long(27), b2)));
}

RingElem j_invariant(const EllipticCurve& e) {
    const RingPtr& R = e.R;
    RingElem a3 = R->mul(R->from_long(4), R->pow(e.a, 3));
    RingElem den = R->add(a3, R->mul(R->from_long(27), R->mul(e.b, e.b)));
    return R->mul(R->from_long(1728), R->mul(a3, R->inv(den)));
}

EllipticCurve curve_from_j(const RingElem& j, const RingPtr& R) {
    RingElem c1728 = R->from_long(1728);
    if (!R->is_unit(j)) throw SpecialJError("j = 0 mod p has extra automorphisms");
    RingElem den = R->sub(c1728, j);
    if (!R->is_unit(den)) throw SpecialJError("j = 1728 mod p has extra automorphisms");
    RingElem s = R->mul(j, R->inv(den));
    return make_curve(R, R->mul(R->from_long(3), s), R->mul(R->from_long(2), s));
}

EllipticCurve map_curve(const EllipticCurve& e, const RingPtr& target) {
    return EllipticCurve{target, map_local_elem(e.a, target), map_local_elem(e.b, target)};
}

PointCount count_points_trace(const EllipticCurve& e) {
    auto m = zmod_modulus(*e.R);
    if (!m || e.R->precision() != 1) throw Error("count_points_trace needs a prime field F_p");
    long p = e.R->residue_char();
    if (p > 1000) throw Error("count_points_trace is capped at p <= 1000");
    std::vector<char> is_square(static_cast<std::size_t>(p), 0);
    for (long t = 0; t < p; ++t) is_square[static_cast<std::size_t>(t * t % p)] = 1;
    std::int64_t a = e.a.i64(), b = e.b.i64();
    std::uint64_t n = 1;  // infinity
    for (long x = 0; x < p; ++x) {
        std::int64_t fx = ((x * x % p) * x % p + a * x % p + b) % p;
        if (fx == 0)
            n += 1;
        else if (is_square[static_cast<std::size_t>(fx)])
            n += 2;
    }
    PointCount pc;
    pc.n_points = n;
    pc.trace = static_cast<long>(p + 1 - static_cast<long>(n));
    return pc;
}

bool is_ordinary(const EllipticCurve& e) {
    PointCount pc = count_points_trace(e);
    long p = e.R->residue_char();
    return pc.trace % p != 0;
}

// ---------------------------------------------------------------------------
// division polynomials, as pairs A(x) + B(x) y with y^2 reduced to f(x)

namespace {

struct YPoly {
    UniPoly a, b;
};

YPoly ymul(const YPoly& u, const YPoly& v, const UniPoly& f) {
    return YPoly{u.a * v.a + (u.b * v.b) * f, u.a * v.b + u.b * v.a};
}

YPoly ysub(const YPoly& u, const YPoly& v) { return YPoly{u.a - v.a, u.b - v.b}; }

// z / (2y) for z with zero y-part: (A)/(2y) = y A / (2 f); needs f | A.
YPoly ydiv_2y(const YPoly& z, const UniPoly& f, const RingElem& inv2) {
    if (!z.b.is_zero()) throw Error("division polynomial parity violated");
    auto [q, r] = UniPoly::divmod_monic(z.a, f);
    if (!r.is_zero()) throw Error("division polynomial: 2y division not exact");
    return YPoly{UniPoly::zero(f.ring()), q.scaled(inv2)};
}

std::vector<YPoly> psi_table(const EllipticCurve& e, long m_max) {
    const RingPtr& R = e.R;
    UniPoly f(R, {e.b, e.a, R->zero(), R->one()});  // x^3 + a x + b
    const RingElem A = e.a, B = e.b;
    RingElem A2 = R->mul(A, A), A3 = R->mul(A2, A), B2 = R->mul(B, B), AB = R->mul(A, B);
    auto none = UniPoly::zero(R);
    std::vector<YPoly> psi;
    psi.push_back({none, none});                       // psi_0 = 0
    psi.push_back({UniPoly::constant(R, 1), none});    // psi_1 = 1
    psi.push_back({none, UniPoly::constant(R, 2)});    // psi_2 = 2y
    // psi_3 = 3x^4 + 6Ax^2 + 12Bx - A^2
    psi.push_back({UniPoly(R, {R->neg(A2), R->mul(R->from_long(12), B), R->mul(R->from_long(6), A),
                               R->zero(), R->from_long(3)}),
                   none});
    // psi_4 = 4y (x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)
    psi.push_back({none, UniPoly(R, {R->mul(R->from_long(-4),
                                            R->add(R->mul(R->from_long(8), B2), A3)),
                                     R->mul(R->from_long(-16), AB),
                                     R->mul(R->from_long(-20), A2),
                                     R->mul(R->from_long(80), B),
                                     R->zero(),
                                     R->mul(R->from_long(20), A),
                                     R->from_long(4)})});
    RingElem inv2 = R->inv(R->from_long(2));
    for (long m = 5; m <= m_max; ++m) {
        long t = m / 2;
        if (m % 2 == 1) {
            YPoly val = ysub(ymul(psi[t + 2], ymul(ymul(psi[t], psi[t], f), psi[t], f), f),
                             ymul(psi[t - 1], ymul(ymul(psi[t + 1], psi[t + 1], f), psi[t + 1], f), f));
            psi.push_back(val);
        } else {
            YPoly bracket = ysub(ymul(psi[t + 2], ymul(psi[t - 1], psi[t - 1], f), f),
                                 ymul(psi[t - 2], ymul(psi[t + 1], psi[t + 1], f), f));
            psi.push_back(ydiv_2y(ymul(psi[t], bracket, f), f, inv2));
        }
    }
    return psi;
}

}  // namespace

UniPoly division_polynomial(const EllipticCurve& e, long m) {
    if (m < 1 || m % 2 == 0 || m > 13) throw Error("division_polynomial supports odd m <= 13");
    auto psi = psi_table(e, m);
    if (!psi[static_cast<std::size_t>(m)].b.is_zero()) throw Error("odd division polynomial has a y part");
    return psi[static_cast<std::size_t>(m)].a;
}

// ---------------------------------------------------------------------------
// affine point arithmetic over local rings

bool point_on_curve(const EllipticCurve& e, const CurvePoint& p) {
    if (p.infinity) return true;
    const RingPtr& R = e.R;
    RingElem lhs = R->mul(p.y, p.y);
    RingElem rhs = R->add(R->add(R->pow(p.x, 3), R->mul(e.a, p.x)), e.b);
    return R->eq(lhs, rhs);
}

CurvePoint point_neg(const EllipticCurve& e, const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint{false, p.x, e.R->neg(p.y)};
}

CurvePoint point_add(const EllipticCurve& e, const CurvePoint& p, const CurvePoint& q) {
    const RingPtr& R = e.R;
    if (p.infinity) return q;
    if (q.infinity) return p;
    RingElem dx = R->sub(q.x, p.x);
    RingElem lambda;
    if (R->is_unit(dx)) {
        lambda = R->mul(R->sub(q.y, p.y), R->inv(dx));
    } else {
        RingElem sy = R->add(p.y, q.y);
        if (R->is_unit(sy)) {
            // (y1-y2)(y1+y2) = (x1-x2)(x1^2+x1x2+x2^2+a)
            RingElem num =
                R->add(R->add(R->add(R->mul(p.x, p.x), R->mul(p.x, q.x)), R->mul(q.x, q.x)), e.a);
            lambda = R->mul(num, R->inv(sy));
        } else if (R->is_zero(dx) && R->is_zero(sy)) {
            return CurvePoint{};  // P + (-P)
        } else {
            throw BadReductionError("point addition with non-unit denominators");
        }
    }
    RingElem x3 = R->sub(R->sub(R->mul(lambda, lambda), p.x), q.x);
    RingElem y3 = R->sub(R->mul(lambda, R->sub(p.x, x3)), p.y);
    return CurvePoint{false, std::move(x3), std::move(y3)};
}

CurvePoint point_double(const EllipticCurve& e, const CurvePoint& p) { return point_add(e, p, p); }

// ---------------------------------------------------------------------------
// etale kernel via an exact order-p point at one digit of extra precision

long unit_root_order(long a_p, long p) {
    long lambda = ((a_p % p) + p) % p;
    if (lambda == 0) throw NotOrdinaryError("trace is divisible by p");
    long r = 1, v = lambda;
    while (v != 1) {
        v = v * lambda % p;
        ++r;
    }
    return r;
}

namespace {

// v = 0 mod p^e?
bool divisible_by_pe(const RingElem& v, long p, long e) {
    std::int64_t pe = ipow64(p, e);
    if (galois_ring_info(*v.parent())) {
        for (auto c : v.coeffs())
            if (c % pe != 0) return false;
        return true;
    }
    return v.i64() % pe == 0;
}

// (v / p^e) mod p as an element of the residue field F
RingElem downshift_to_residue(const RingElem& v, long p, long e, const RingPtr& F) {
    std::int64_t pe = ipow64(p, e);
    if (galois_ring_info(*v.parent())) {
        std::vector<std::int64_t> c = v.coeffs();
        for (auto& x : c) x = (x / pe) % p;
        return RingElem(F, std::move(c));
    }
    return RingElem(F, (v.i64() / pe) % p);
}

/// Finds u with x([a]P(u)) = x([a+1]P(u)) over the working ring, where
/// P(u) = (x0 + p u, y(u)) and a = (p-1)/2; that equality is exactly the
/// order-p condition [p]P(u) = O for points reducing into the etale part.
class TorsionPointSearch {
   public:
    TorsionPointSearch(EllipticCurve curve, RingPtr field, RingElem x0, RingElem y0, long p, long k)
        : e_(std::move(curve)),
          S_(e_.R),
          F_(std::move(field)),
          x0_(std::move(x0)),
          y0_(std::move(y0)),
          p_(p),
          digits_(k) {}

    // nullopt when the search space is exhausted (wrong residue root)
    std::optional<CurvePoint> run() {
        RingElem u = S_->zero();
        if (!g_value(u)) return std::nullopt;
        if (solve_digit(u, 0)) return lift_point(solution_);
        return std::nullopt;
    }

   private:
    std::optional<CurvePoint> lift_point(const RingElem& u) const {
        RingElem x = S_->add(x0_, S_->mul(S_->from_long(p_), u));
        // Newton for y^2 = f(x) from the residue branch y0
        RingElem fx = S_->add(S_->add(S_->pow(x, 3), S_->mul(e_.a, x)), e_.b);
        RingElem y = y0_;
        for (int it = 0; it < 24; ++it) {
            RingElem err = S_->sub(S_->mul(y, y), fx);
            if (S_->is_zero(err)) return CurvePoint{false, x, y};
            RingElem dy = S_->mul(S_->from_long(2), y);
            if (!S_->is_unit(dy)) return std::nullopt;
            y = S_->sub(y, S_->mul(err, S_->inv(dy)));
        }
        return std::nullopt;
    }

    // x([a]P) - x([a+1]P) with a = (p-1)/2
    std::optional<RingElem> g_value(const RingElem& u) const {
        auto pt = lift_point(u);
        if (!pt) return std::nullopt;
        long a = (p_ - 1) / 2;
        try {
            CurvePoint cur = *pt;  // [i]P as i climbs
            RingElem x_a = cur.x;  // correct already when a == 1
            for (long i = 2; i <= a + 1; ++i) {
                cur = (i == 2) ? point_double(e_, cur) : point_add(e_, cur, *pt);
                if (cur.infinity) return std::nullopt;
                if (i == a) x_a = cur.x;
            }
            return S_->sub(x_a, cur.x);
        } catch (const BadReductionError&) {
            return std::nullopt;
        } catch (const NotAUnitError&) {
            return std::nullopt;
        }
    }

    bool accept(const RingElem& g, long stage) const {
        long need = std::min<long>(2 + stage, digits_ + 1);
        return divisible_by_pe(g, p_, need);
    }

    bool solve_digit(const RingElem& u, long stage) {
        if (stage == digits_) {
            solution_ = u;
            return true;
        }
        if (++nodes_ > 200000) throw Error("torsion point search exceeded its node budget");
        auto g0 = g_value(u);
        if (!g0) return false;
        std::int64_t pj = ipow64(p_, stage);
        auto with_digit = [&](const RingElem& t) {
            return S_->add(u, S_->mul(S_->from_long(pj), lift_from_residue(S_, t)));
        };
        // digit relation: G(u + p^stage t)/p^(1+stage) = c0 + gamma t (mod p)
        RingElem c0 = downshift_to_residue(*g0, p_, 1 + stage, F_);
        RingElem t1 = F_->element_at(1);  // the element 1
        auto g1 = g_value(with_digit(t1));
        std::optional<RingElem> gamma;
        if (g1) gamma = F_->sub(downshift_to_residue(*g1, p_, 1 + stage, F_), c0);
        if (gamma && F_->is_unit(*gamma)) {
            RingElem t = F_->neg(F_->mul(c0, F_->inv(*gamma)));
            RingElem next = with_digit(t);
            auto gt = g_value(next);
            if (gt && accept(*gt, stage) && solve_digit(next, stage + 1)) return true;
            return false;  // unit-slope digit equation has a unique solution
        }
        // degenerate slope: every digit is a candidate
        auto fcard = F_->cardinality();
        for (std::uint64_t i = 0; i < *fcard; ++i) {
            RingElem next = with_digit(F_->element_at(i));
            auto gt = g_value(next);
            if (gt && accept(*gt, stage) && solve_digit(next, stage + 1)) return true;
        }
        return false;
    }

    EllipticCurve e_;
    RingPtr S_;
    RingPtr F_;
    RingElem x0_, y0_;
    long p_;
    long digits_;
    RingElem solution_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

KernelPolynomial etale_kernel_poly(const EllipticCurve& e) {
    const RingPtr& R = e.R;
    long p = R->residue_char();
    long k = R->precision();
    if (p < 5 || k < 1 || !zmod_modulus(*R))
        throw Error("etale_kernel_poly needs a curve over Z/p^k with p >= 5");

    EllipticCurve ebar = map_curve(e, make_zmod(p));
    PointCount pc = count_points_trace(ebar);
    if (pc.trace % p == 0) throw NotOrdinaryError("a_p = " + std::to_string(pc.trace));
    long r = unit_root_order(pc.trace, p);

    // one digit of extra precision: order-p points over GR(p^(k+1), r) have
    // x-coordinates determined mod p^k by the etale subgroup alone
    RingPtr S = make_galois_ring(p, k + 1, r);
    RingPtr F = residue_ring(S);
    EllipticCurve eS = map_curve(e, S);
    EllipticCurve eF = map_curve(e, F);

    UniPoly psi_p = division_polynomial(eF, p);
    auto fcard = F->cardinality();
    std::vector<RingElem> roots;
    for (std::uint64_t i = 0; i < *fcard; ++i) {
        RingElem x = F->element_at(i);
        if (F->is_zero(psi_p.evaluate(x))) roots.push_back(x);
    }
    if (roots.empty()) throw BadReductionError("p-division polynomial has no residue roots");

    UniPoly fbar(F, {eF.b, eF.a, F->zero(), F->one()});
    for (const RingElem& xbar : roots) {
        // y on the curve above xbar, in the residue field
        RingElem fx = fbar.evaluate(xbar);
        if (F->is_zero(fx)) continue;  // 2-torsion x, not an order-p point
        std::optional<RingElem> ybar;
        for (std::uint64_t i = 1; i < *fcard; ++i) {
            RingElem y = F->element_at(i);
            if (F->eq(F->mul(y, y), fx)) {
                ybar = y;
                break;
            }
        }
        if (!ybar) continue;  // not liftable at this root, retry with another

        TorsionPointSearch search(eS, F, lift_from_residue(S, xbar), lift_from_residue(S, *ybar), p, k);
        auto q = search.run();
        if (!q) continue;

        // multiples [i]Q, i = 1..(p+1)/2, all affine with unit denominators
        long d = (p - 1) / 2;
        std::vector<CurvePoint> mult;
        mult.push_back(*q);
        for (long i = 2; i <= d + 1; ++i)
            mult.push_back(i == 2 ? point_double(eS, mult[0]) : point_add(eS, mult.back(), *q));
        // order-p witness: [(p-1)/2]Q = -[(p+1)/2]Q, and Q != O mod p by construction
        const CurvePoint& at_d = mult[static_cast<std::size_t>(d - 1)];
        const CurvePoint& at_d1 = mult[static_cast<std::size_t>(d)];
        if (!S->eq(at_d.x, at_d1.x) || !S->is_zero(S->add(at_d.y, at_d1.y)))
            throw Error("torsion search returned a non-torsion point");

        UniPoly h = UniPoly::constant(S, 1);
        for (long i = 0; i < d; ++i)
            h = h * UniPoly(S, {S->neg(mult[static_cast<std::size_t>(i)].x), S->one()});

        // descend coefficients to Z/p^k
        std::vector<RingElem> hc;
        bool ok = true;
        for (long i = 0; i <= h.degree(); ++i) {
            RingElem c = h.coeff(static_cast<std::size_t>(i));
            std::int64_t pk = ipow64(p, k);
            std::int64_t value = 0;
            if (galois_ring_info(*S)) {
                const auto& cc = c.coeffs();
                for (std::size_t t = 1; t < cc.size(); ++t)
                    if (cc[t] % pk != 0) ok = false;
                value = cc[0] % pk;
            } else {
                value = c.i64() % pk;
            }
            hc.push_back(R->from_long(static_cast<long>(value)));
        }
        if (!ok) throw Error("etale kernel polynomial failed Galois descent");
        KernelPolynomial kp;
        kp.h = UniPoly(R, std::move(hc));
        kp.subgroup_order = p;
        return kp;
    }
    throw BadReductionError("no residue root of the p-division polynomial lifts");
}

// ---------------------------------------------------------------------------
// Velu / Kohel quotient

EllipticCurve velu_quotient(const EllipticCurve& e, const KernelPolynomial& kernel) {
    const RingPtr& R = e.R;
    const UniPoly& h = kernel.h;
    long d = h.degree();
    if (d < 1) throw Error("velu_quotient needs a nontrivial kernel polynomial");
    if (!R->eq(h.leading(), R->one())) throw Error("kernel polynomial must be monic");

    RingElem t, w;
    if (d == 1) {
        RingElem xT = R->neg(h.coeff(0));
        RingElem fxT = R->add(R->add(R->pow(xT, 3), R->mul(e.a, xT)), e.b);
        RingElem txT = R->add(R->mul(R->from_long(3), R->mul(xT, xT)), e.a);
        if (R->is_zero(fxT)) {
            // 2-torsion kernel point
            t = txT;
            w = R->mul(xT, txT);
        } else {
            t = R->add(R->mul(R->from_long(6), R->mul(xT, xT)), R->mul(R->from_long(2), e.a));
            RingElem u = R->mul(R->from_long(4), fxT);
            w = R->add(u, R->mul(xT, t));
        }
    } else {
        // power sums from the coefficients (Newton's identities)
        RingElem e1 = R->neg(h.coeff(static_cast<std::size_t>(d - 1)));
        RingElem e2 = d >= 2 ? h.coeff(static_cast<std::size_t>(d - 2)) : R->zero();
        RingElem e3 = d >= 3 ? R->neg(h.coeff(static_cast<std::size_t>(d - 3))) : R->zero();
        RingElem p1 = e1;
        RingElem p2 = R->sub(R->mul(e1, p1), R->mul(R->from_long(2), e2));
        RingElem p3 = R->add(R->sub(R->mul(e1, p2), R->mul(e2, p1)), R->mul(R->from_long(3), e3));
        RingElem dd = R->from_long(d);
        t = R->add(R->mul(R->from_long(6), p2), R->mul(R->from_long(2), R->mul(e.a, dd)));
        w = R->add(R->add(R->mul(R->from_long(10), p3), R->mul(R->from_long(6), R->mul(e.a, p1))),
                   R->mul(R->from_long(4), R->mul(e.b, dd)));
    }
    RingElem a2 = R->sub(e.a, R->mul(R->from_long(5), t));
    RingElem b2 = R->sub(e.b, R->mul(R->from_long(7), w));
    try {
        return make_curve(R, a2, b2);
    } catch (const SingularCurveError& err) {
        throw SingularImageError(err.what());
    }
}

// ---------------------------------------------------------------------------
// canonical lift

LiftResult canonical_lift_j(const EllipticCurve& e_over_fp, long k) {
    const RingPtr& Fp = e_over_fp.R;
    long p = Fp->residue_char();
    if (!zmod_modulus(*Fp) || Fp->precision() != 1) throw Error("canonical_lift_j starts from F_p");
    if (p < 5 || p > 13) throw Error("canonical_lift_j supports p in {5, 7, 11, 13}");
    if (k < 1 || k > kMaxLiftPrecision)
        throw Error("canonical_lift_j supports 1 <= k <= " + std::to_string(kMaxLiftPrecision));
    if (!is_ordinary(e_over_fp)) throw NotOrdinaryError("supersingular curve has no canonical lift here");
    RingElem j0 = j_invariant(e_over_fp);
    if (Fp->is_zero(j0) || Fp->eq(j0, Fp->from_long(1728)))
        throw SpecialJError("j in {0, 1728} is out of scope");

    RingPtr R = make_zmod(ipow64(p, k));
    EllipticCurve cur = map_curve(e_over_fp, R);
    LiftResult res;
    res.j_trace.push_back(j_invariant(cur));
    if (k == 1) {
        res.j = res.j_trace.back();
        return res;
    }
    long cap = 4 * (k - 1);
    for (long it = 1; it <= cap; ++it) {
        KernelPolynomial kern = etale_kernel_poly(cur);
        cur = velu_quotient(cur, kern);
        RingElem j = j_invariant(cur);
        res.j_trace.push_back(j);
        res.iterations = it;
        if (!Fp->eq(map_local_elem(j, Fp), j0))
            throw Error("lift iteration left the residue fiber (bug)");
        std::size_t n = res.j_trace.size();
        if (n >= 3 && R->eq(res.j_trace[n - 1], res.j_trace[n - 2]) &&
            R->eq(res.j_trace[n - 2], res.j_trace[n - 3])) {
            res.j = j;
            return res;
        }
    }
    std::ostringstream os;
    os << "no stabilization within " << cap << " iterations; j-trace:";
    for (const auto& j : res.j_trace) os << " " << R->str(j);
    throw NoConvergenceError(os.str());
}

// ---------------------------------------------------------------------------
// CM oracle

CMTable CMTable::parse(const std::string& text) {
    CMTable table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long d = 0;
        if (!(ls >> d)) throw Error("cm table: bad line '" + line + "'");
        std::vector<Integer> coeffs;
        std::string tok;
        while (ls >> tok) coeffs.emplace_back(tok);
        if (coeffs.size() < 2) throw Error("cm table: too few coefficients for D=" + std::to_string(d));
        if (!(coeffs.back() == Integer(1)))
            throw Error("cm table: polynomial for D=" + std::to_string(d) + " is not monic");
        table.entries_[d] = std::move(coeffs);
    }
    return table;
}

CMTable CMTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open cm table '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::optional<std::vector<Integer>> CMTable::lookup(long d) const {
    auto it = entries_.find(d);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

RingElem cm_oracle_j(const EllipticCurve& e_over_fp, long k, const CMTable& table) {
    const RingPtr& Fp = e_over_fp.R;
    long p = Fp->residue_char();
    PointCount pc = count_points_trace(e_over_fp);
    if (pc.trace % p == 0) throw NotOrdinaryError("supersingular");
    long d = pc.trace * pc.trace - 4 * p;
    auto entry = table.lookup(d);
    if (!entry) throw UnsupportedDiscriminantError("D = " + std::to_string(d) + " not tabulated");
    if (entry->size() != 2)
        throw UnsupportedDiscriminantError("D = " + std::to_string(d) + " has class number " +
                                           std::to_string(entry->size() - 1));
    Integer j_cm = -(*entry)[0];  // root of X + c0
    if (!Fp->eq(Fp->from_integer(j_cm), j_invariant(e_over_fp)))
        throw CMTableMismatchError("tabulated j does not reduce to j(E) mod p");
    RingPtr R = make_zmod(ipow64(p, k));
    return R->from_integer(j_cm);
}

VpFactorizationReport verify_vp_factorization(const EllipticCurve& e_over_fp, long k) {
    LiftResult lift = canonical_lift_j(e_over_fp, k);
    long p = e_over_fp.R->residue_char();
    RingPtr R = make_zmod(ipow64(p, k));
    VpFactorizationReport report;
    report.j_canonical = lift.j;
    if (k == 1) {
        report.j_after_quotient = lift.j;
        report.fixed = true;
        return report;
    }
    EllipticCurve canonical = curve_from_j(lift.j, R);
    EllipticCurve after = velu_quotient(canonical, etale_kernel_poly(canonical));
    report.j_after_quotient = j_invariant(after);
    report.fixed = R->eq(report.j_after_quotient, report.j_canonical);
    return report;
}

}  // namespace witt
