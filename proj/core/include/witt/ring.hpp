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

#ifndef WITT_RING_HPP
#define WITT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "witt/integer.hpp"

namespace witt {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Value of some Ring. The payload alternatives cover all concrete rings:
/// int64 residues (Z/m), Integer (Z), residue polynomials (Galois rings) and
/// component vectors (truncated Witt rings over any base).
class RingElem {
   public:
    using List = std::vector<RingElem>;
    using Payload = std::variant<std::int64_t, Integer, std::vector<std::int64_t>, List>;

    RingElem() = default;
    RingElem(RingPtr ring, Payload v) : ring_(std::move(ring)), v_(std::move(v)) {}

    const RingPtr& parent() const { return ring_; }
    const Payload& value() const { return v_; }

    std::int64_t i64() const { return std::get<std::int64_t>(v_); }
    const Integer& integer() const { return std::get<Integer>(v_); }
    const std::vector<std::int64_t>& coeffs() const { return std::get<std::vector<std::int64_t>>(v_); }
    const List& list() const { return std::get<List>(v_); }

   private:
    RingPtr ring_;
    Payload v_;
};

/// A commutative ring with 1, element construction from Z, and optional
/// finite enumeration / local-ring structure. All elements are immutable
/// values; operations are pure.
class Ring : public std::enable_shared_from_this<Ring> {
   public:
    virtual ~Ring() = default;

    virtual std::string name() const = 0;
    virtual RingElem zero() const = 0;
    virtual RingElem one() const = 0;
    virtual RingElem from_integer(const Integer& v) const = 0;
    RingElem from_long(long v) const { return from_integer(Integer(v)); }

    virtual RingElem add(const RingElem& a, const RingElem& b) const = 0;
    virtual RingElem neg(const RingElem& a) const = 0;
    virtual RingElem mul(const RingElem& a, const RingElem& b) const = 0;
    virtual RingElem sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }
    virtual bool eq(const RingElem& a, const RingElem& b) const = 0;
    virtual bool is_zero(const RingElem& a) const { return eq(a, zero()); }
    virtual std::string str(const RingElem& a) const = 0;

    /// Structural identity (same kind and parameters), not pointer identity.
    virtual bool same_as(const Ring& other) const = 0;

    /// Number of elements for finite rings, nullopt otherwise.
    virtual std::optional<std::uint64_t> cardinality() const { return std::nullopt; }
    /// Deterministic enumeration; valid for 0 <= i < cardinality().
    virtual RingElem element_at(std::uint64_t /*i*/) const {
        throw Error(name() + " is not enumerable");
    }

    /// Residue characteristic p and precision k for local rings Z/p^k and
    /// GR(p^k, d); both return 0 for rings without that structure.
    virtual long residue_char() const { return 0; }
    virtual long precision() const { return 0; }

    virtual bool is_unit(const RingElem& /*a*/) const {
        throw Error(name() + " does not support unit tests");
    }
    virtual RingElem inv(const RingElem& /*a*/) const {
        throw Error(name() + " does not support inversion");
    }

    RingElem pow(const RingElem& a, unsigned long e) const;

   protected:
    RingPtr self() const { return std::static_pointer_cast<const Ring>(shared_from_this()); }
};

inline RingElem operator+(const RingElem& a, const RingElem& b) { return a.parent()->add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return a.parent()->sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return a.parent()->mul(a, b); }
inline RingElem operator-(const RingElem& a) { return a.parent()->neg(a); }
inline bool operator==(const RingElem& a, const RingElem& b) { return a.parent()->eq(a, b); }
inline bool operator!=(const RingElem& a, const RingElem& b) { return !a.parent()->eq(a, b); }

/// The ring of integers Z.
RingPtr integer_ring();

/// Z/m for any modulus 2 <= m < 2^31.
RingPtr make_zmod(std::int64_t m);

/// Galois ring GR(p^k, d) = (Z/p^k)[x]/(f) with the tabulated monic
/// irreducible f of degree d lifted from F_p. make_prime_field(p) = Z/p.
RingPtr make_galois_ring(long p, long k, long d);
RingPtr make_galois_ring(long p, long k, std::vector<std::int64_t> modulus);
RingPtr make_prime_field(long p);

/// The tabulated irreducible for (p, d): coefficients c_0..c_{d-1} of
/// f = x^d + c_{d-1} x^{d-1} + ... + c_0 over F_p. Deterministic: the first
/// monic irreducible in base-p coefficient order with nonzero constant term.
std::vector<std::int64_t> tabulated_irreducible(long p, long d);
bool is_irreducible_mod_p(const std::vector<std::int64_t>& monic_coeffs, long p);

/// Access to Z/m internals (modulus) and GR internals where generic code
/// needs them; each returns nullopt when the ring is of a different kind.
std::optional<std::int64_t> zmod_modulus(const Ring& r);
struct GaloisRingInfo {
    long p;
    long k;
    long d;
    std::vector<std::int64_t> modulus;  // degree d, monic; coefficients in [0, p^k)
};
std::optional<GaloisRingInfo> galois_ring_info(const Ring& r);

/// For a local ring (Z/p^k or GR(p^k,d)): the residue ring mod p and the
/// two maps between them. reduce maps to the residue ring; lift takes the
/// canonical representative (coefficients in [0,p)).
RingPtr residue_ring(const RingPtr& r);
RingElem reduce_mod_p(const RingPtr& r, const RingElem& a);
RingElem lift_from_residue(const RingPtr& r, const RingElem& a);

/// Scalar embedding Z/p^k -> GR(p^k, d) and its partial inverse.
bool galois_is_scalar(const RingElem& a);
std::int64_t galois_scalar_value(const RingElem& a);

}  // namespace witt

#endif
