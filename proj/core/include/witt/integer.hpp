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

#ifndef WITT_INTEGER_HPP
#define WITT_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "witt/errors.hpp"

namespace witt {

/// Arbitrary-precision integer in canonical (sign + magnitude, no leading
/// zero limbs) form. Backed by GMP; every operation is exact.
class Integer {
   public:
    Integer() : v_(0) {}
    Integer(long v) : v_(v) {}  // NOLINT: implicit by design
    explicit Integer(const std::string& decimal) : v_(decimal, 10) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    const mpz_class& raw() const { return v_; }

    Integer operator+(const Integer& o) const { return Integer(mpz_class(v_ + o.v_)); }
    Integer operator-(const Integer& o) const { return Integer(mpz_class(v_ - o.v_)); }
    Integer operator*(const Integer& o) const { return Integer(mpz_class(v_ * o.v_)); }
    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer& operator+=(const Integer& o) {
        v_ += o.v_;
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        v_ -= o.v_;
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        v_ *= o.v_;
        return *this;
    }

    bool operator==(const Integer& o) const { return v_ == o.v_; }
    bool operator!=(const Integer& o) const { return v_ != o.v_; }
    bool operator<(const Integer& o) const { return v_ < o.v_; }
    bool operator<=(const Integer& o) const { return v_ <= o.v_; }
    bool operator>(const Integer& o) const { return v_ > o.v_; }
    bool operator>=(const Integer& o) const { return v_ >= o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return mpz_sgn(v_.get_mpz_t()); }

    Integer pow(unsigned long e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
        return Integer(r);
    }

    bool divisible_by(const Integer& d) const {
        return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
    }

    /// Exact quotient; throws NotDivisibleError when the division has a remainder.
    Integer divexact(const Integer& d) const {
        if (d.is_zero()) throw NotDivisibleError("division by zero");
        if (!divisible_by(d)) throw NotDivisibleError(str() + " by " + d.str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
        return Integer(q);
    }

    /// Residue normalized into [0, m).
    Integer mod(const Integer& m) const {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
        return Integer(r);
    }

    /// Fits in int64_t?
    bool fits_i64() const { return v_.fits_slong_p(); }
    std::int64_t to_i64() const { return v_.get_si(); }

    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }

    std::string str() const { return v_.get_str(); }

   private:
    mpz_class v_;
};

inline Integer operator*(long a, const Integer& b) { return Integer(a) * b; }

}  // namespace witt

#endif
