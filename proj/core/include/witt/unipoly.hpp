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

#ifndef WITT_UNIPOLY_HPP
#define WITT_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "witt/poly.hpp"
#include "witt/ring.hpp"

namespace witt {

/// Dense univariate polynomial over a Ring; the workhorse for division
/// polynomials and kernel polynomials.
class UniPoly {
   public:
    UniPoly() = default;
    UniPoly(RingPtr ring, std::vector<RingElem> coeffs);  // coeffs[i] * x^i

    static UniPoly zero(RingPtr ring) { return UniPoly(std::move(ring), {}); }
    static UniPoly constant(RingPtr ring, const RingElem& c) { return UniPoly(ring, {c}); }
    static UniPoly constant(RingPtr ring, long c);
    static UniPoly x(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<RingElem>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const RingElem& leading() const { return c_.back(); }
    RingElem coeff(std::size_t i) const;  // zero beyond the degree

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly scaled(const RingElem& c) const;
    UniPoly scaled(long c) const;
    UniPoly shifted(std::size_t e) const;  // * x^e
    UniPoly pow(unsigned e) const;

    RingElem evaluate(const RingElem& v) const;
    UniPoly derivative() const;

    /// Quotient and remainder by a monic divisor.
    static std::pair<UniPoly, UniPoly> divmod_monic(const UniPoly& a, const UniPoly& b);

    SparsePoly to_sparse(const std::string& var = "x") const;
    static UniPoly from_sparse(const SparsePoly& f);

    std::string str(const std::string& var = "x") const;

   private:
    void trim();
    RingPtr ring_;
    std::vector<RingElem> c_;
};

}  // namespace witt

#endif
