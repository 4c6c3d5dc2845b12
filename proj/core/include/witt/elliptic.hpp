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

#ifndef WITT_ELLIPTIC_HPP
#define WITT_ELLIPTIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/ring.hpp"
#include "witt/unipoly.hpp"

namespace witt {

/// Short-Weierstrass curve y^2 = x^3 + a x + b over a finite local ring,
/// nonsingular (discriminant a unit).
struct EllipticCurve {
    RingPtr R;
    RingElem a;
    RingElem b;
};

/// Checks the discriminant -16(4a^3 + 27b^2) is a unit.
EllipticCurve make_curve(const RingPtr& R, const RingElem& a, const RingElem& b);
EllipticCurve make_curve(const RingPtr& R, long a, long b);
RingElem curve_discriminant(const EllipticCurve& e);
RingElem j_invariant(const EllipticCurve& e);

/// Curve with prescribed j-invariant: a = 3j/(1728-j), b = 2j/(1728-j).
/// Throws SpecialJError when j = 0 or 1728 modulo p.
EllipticCurve curve_from_j(const RingElem& j, const RingPtr& R);

/// Reduce the coefficients into another local ring (e.g. Z/p^k -> Z/p).
EllipticCurve map_curve(const EllipticCurve& e, const RingPtr& target);

struct PointCount {
    std::uint64_t n_points = 0;  // including the point at infinity
    long trace = 0;              // a_p = p + 1 - n_points
};
/// Exhaustive quadratic-character count over F_p, p <= 1000.
PointCount count_points_trace(const EllipticCurve& e);
bool is_ordinary(const EllipticCurve& e);

/// Standard division polynomial psi_m (odd m <= 13), a polynomial in x of
/// degree (m^2-1)/2.
UniPoly division_polynomial(const EllipticCurve& e, long m);

/// Monic kernel polynomial of an order-p subgroup: the x-coordinates of
/// the nonzero points, degree (p-1)/2.
struct KernelPolynomial {
    UniPoly h;
    long subgroup_order = 0;
};

/// The etale order-p subgroup of a curve over Z/p^k with ordinary
/// reduction: the kernel of the Verschiebung lift. Computed from an exact
/// order-p point over GR(p^(k+1), r) at one digit of extra precision,
/// where r is the multiplicative order of the unit root mod p; the
/// coefficients descend to Z/p^k.
KernelPolynomial etale_kernel_poly(const EllipticCurve& e);

/// Velu/Kohel quotient by the subgroup with kernel polynomial h, expressed
/// in the power sums of h's roots; only h's coefficients are used.
EllipticCurve velu_quotient(const EllipticCurve& e, const KernelPolynomial& kernel);

/// Hilbert class polynomial table: D -> coefficients (constant term
/// first). Text lines `D c_0 c_1 ... c_h`.
class CMTable {
   public:
    static CMTable load_file(const std::string& path);
    static CMTable parse(const std::string& text);

    std::optional<std::vector<Integer>> lookup(long d) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<long, std::vector<Integer>>& entries() const { return entries_; }

   private:
    std::map<long, std::vector<Integer>> entries_;
};

struct LiftResult {
    RingElem j;                     // stabilized j-invariant over Z/p^k
    std::vector<RingElem> j_trace;  // j-invariants of the iterates
    long iterations = 0;
};

constexpr long kMaxLiftPrecision = 4;

/// Serre-Tate canonical lift of an ordinary curve over F_p (p >= 5,
/// j not 0 or 1728) to Z/p^k: iterates the quotient by the etale kernel
/// until the j-invariant stabilizes twice, with a cap of 4(k-1) steps.
LiftResult canonical_lift_j(const EllipticCurve& e_over_fp, long k);

/// Independent CM oracle: for D = a_p^2 - 4p with class number 1 in the
/// table, the integer root of the Hilbert class polynomial mod p^k.
RingElem cm_oracle_j(const EllipticCurve& e_over_fp, long k, const CMTable& table);

struct VpFactorizationReport {
    RingElem j_canonical;
    RingElem j_after_quotient;
    bool fixed = false;
};
/// Fixed-point witness of the factorization of [p] through the
/// Verschiebung lift: one more etale quotient at the canonical lift must
/// leave j unchanged.
VpFactorizationReport verify_vp_factorization(const EllipticCurve& e_over_fp, long k);

/// Multiplicative order of a_p modulo p (the residue of the unit root).
long unit_root_order(long a_p, long p);

// --- affine point arithmetic over local rings (exposed for tests) ---
struct CurvePoint {
    bool infinity = true;
    RingElem x, y;
};
CurvePoint point_neg(const EllipticCurve& e, const CurvePoint& p);
/// Addition using the chord slope or the conjugate slope
/// (x1^2+x1x2+x2^2+a)/(y1+y2), whichever denominator is a unit.
CurvePoint point_add(const EllipticCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_double(const EllipticCurve& e, const CurvePoint& p);
bool point_on_curve(const EllipticCurve& e, const CurvePoint& p);

}  // namespace witt

#endif
