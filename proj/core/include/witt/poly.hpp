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

#ifndef WITT_POLY_HPP
#define WITT_POLY_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "witt/ring.hpp"

namespace witt {

using VarList = std::shared_ptr<const std::vector<std::string>>;
VarList make_vars(std::vector<std::string> names);

/// Exponent vector over a fixed variable list.
struct Monomial {
    std::vector<std::uint32_t> e;

    std::uint64_t total_degree() const;
    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded lexicographic order: compares total degree first, then the
/// exponent vectors lexicographically over the declared variable list.
/// Returns true when a sorts strictly before b (a is the "larger" term).
bool grlex_before(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// Sparse multivariate polynomial over a coefficient ring, with named
/// variables and terms kept in canonical (descending grlex) order.
/// No zero coefficients are stored.
class SparsePoly {
   public:
    using Term = std::pair<Monomial, RingElem>;

    SparsePoly() = default;
    SparsePoly(RingPtr ring, VarList vars) : ring_(std::move(ring)), vars_(std::move(vars)) {}

    static SparsePoly zero(RingPtr ring, VarList vars) { return SparsePoly(std::move(ring), std::move(vars)); }
    static SparsePoly constant(RingPtr ring, VarList vars, const RingElem& c);
    static SparsePoly constant(RingPtr ring, VarList vars, long c);
    static SparsePoly variable(RingPtr ring, VarList vars, std::size_t index, std::uint32_t exp = 1);
    /// Build from unsorted term data; merges duplicates and drops zeros.
    static SparsePoly from_terms(RingPtr ring, VarList vars, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const VarList& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t degree() const;  // total degree; 0 for the zero polynomial

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly scaled(const RingElem& c) const;
    SparsePoly scaled(const Integer& c) const;
    SparsePoly scaled(long c) const;
    SparsePoly pow(std::uint32_t e) const;

    /// Termwise exact division by a nonzero integer; coefficient ring must
    /// be Z. Throws NotDivisibleError naming the offending term.
    SparsePoly exact_div_by_int(const Integer& c) const;

    /// Evaluate at values[i] for variable i, producing an element of
    /// `target`. When the coefficient ring differs from `target` the
    /// coefficients must be integers (mapped through from_integer).
    RingElem evaluate(std::span<const RingElem> values, const RingPtr& target) const;

    /// Substitute a polynomial for every variable (all over the same ring /
    /// variable list as the replacements).
    SparsePoly substitute(std::span<const SparsePoly> replacements) const;

    /// Re-express over a different variable list; old variable i becomes
    /// new variable `where[i]`. Fails if a used variable is not mapped.
    SparsePoly with_vars(VarList new_vars, std::span<const std::size_t> where) const;

    /// True when every term has weighted degree `weight` under the given
    /// per-variable weights.
    bool is_isobaric(std::span<const std::uint64_t> weights, std::uint64_t weight) const;

    /// Largest coefficient bit length (coefficients over Z).
    std::size_t max_coeff_bits() const;

    /// Canonical text form: one term per line, `<coeff> <var>:<exp> ...`,
    /// zero exponents omitted, terms in canonical order. The zero
    /// polynomial prints as an empty string.
    std::string text_form() const;
    static SparsePoly parse_text_form(const std::string& text, RingPtr ring, VarList vars);

    /// Derivative with respect to variable `index`.
    SparsePoly derivative(std::size_t index) const;

    std::string str() const;  // human-readable one-line form

   private:
    void sort_and_prune();

    RingPtr ring_;
    VarList vars_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// substrate operations on polynomials over finite local rings

/// All elements of a finite ring, in enumeration order.
std::vector<RingElem> finite_ring_enumerate(const RingPtr& r);

/// Exact root set of a nonzero univariate polynomial over a finite field
/// (Z/p or GR(p, 1, d)), found by full enumeration.
std::vector<RingElem> find_roots(const SparsePoly& f, const RingPtr& field);

/// Unique root r = r0 (mod p) of f over Z/p^k or GR(p^k, d), by Newton
/// iteration; requires f(r0) = 0 (mod p) and f'(r0) a unit.
RingElem hensel_root(const SparsePoly& f, const RingElem& r0);

}  // namespace witt

#endif
