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

#ifndef WITT_DELTA_RING_HPP
#define WITT_DELTA_RING_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

/// A truncated delta-structure: a tower of rings R_0 <- R_1 <- ... <- R_N
/// with degree-shifting maps delta_m: R_{m+1} -> R_m and structure
/// surjections tau_m: R_{m+1} -> R_m. The delta-ring axioms hold in the
/// shifted sense, with tau applied to the plain-ring arguments.
struct DeltaTower {
    long p = 0;
    std::vector<RingPtr> levels;
    std::vector<std::function<RingElem(const RingElem&)>> delta;  // delta[m]: levels[m+1] -> levels[m]
    std::vector<std::function<RingElem(const RingElem&)>> tau;    // tau[m]:   levels[m+1] -> levels[m]
    std::string label;
};

/// Fermat-quotient value (x - x^p)/p of the canonical representative,
/// reduced into Z/target_mod.
std::int64_t fermat_quotient_int(long p, std::int64_t representative, std::int64_t target_mod);

/// R_m = Z/p^(m+1) with the Fermat quotient as delta.
DeltaTower fermat_tower(long p, long N);
/// Same levels with delta = 0; fails axiom (1) (negative control).
DeltaTower zero_delta_tower(long p, long N);
/// R_m = W_m(base) with the shift operator as delta and truncation as tau.
DeltaTower witt_shift_tower(RingPtr base, long p, long N);

struct SampleSpec {
    bool exhaustive = true;
    std::size_t count = 0;       // random sample size when not exhaustive
    std::uint64_t seed = 1;
};

struct AxiomFailure {
    std::size_t level = 0;
    int axiom = 0;  // 1 = additive, 2 = multiplicative, 3 = delta(1) = 0
    std::string x, y, lhs, rhs;
};

struct DeltaValidationReport {
    bool pass = true;
    std::uint64_t checked = 0;
    std::vector<AxiomFailure> failures;  // capped
};

DeltaValidationReport validate_delta(const DeltaTower& tower, const SampleSpec& spec);

/// Z[T_1..T_r] with prescribed values delta(T_i); delta of an arbitrary
/// element comes from the closed formula delta(f) = (f(phi(T)) - f^p)/p
/// with phi(T_i) = T_i^p + p delta(T_i), which on integer constants is the
/// Fermat quotient.
class DeltaPolyRing {
   public:
    DeltaPolyRing(long p, VarList gens, std::vector<SparsePoly> delta_of_gens);

    long p() const { return p_; }
    const VarList& gens() const { return gens_; }
    const SparsePoly& delta_of_gen(std::size_t i) const { return delta_[i]; }

    SparsePoly apply_phi(const SparsePoly& f) const;
    SparsePoly apply_delta(const SparsePoly& f) const;

   private:
    long p_;
    VarList gens_;
    std::vector<SparsePoly> delta_;
};

/// Axiom identities for a DeltaPolyRing on deterministic sample pairs.
DeltaValidationReport validate_delta(const DeltaPolyRing& ring, std::size_t sample_pairs,
                                     std::uint64_t seed = 1);

/// delta from a Frobenius lift on a p-torsion free presented ring:
/// checks that phi(T_i) = T_i^p mod (p, relations) first, then recovers
/// delta(T_i) = (phi(T_i) - T_i^p)/p by exact division. Relations must be
/// zero mod p or monic and univariate (quotients beyond that are out of
/// scope of the substrate).
DeltaPolyRing delta_from_frobenius(long p, const VarList& gens,
                                   const std::vector<SparsePoly>& relations,
                                   const std::vector<SparsePoly>& phi_of_gens);

/// phi(T_i) = T_i^p + p delta(T_i) for every generator.
std::vector<SparsePoly> frobenius_from_delta(const DeltaPolyRing& ring);

/// All delta-structures on the Hopf algebra of mu_{p^{n_1}} x ... x
/// mu_{p^{n_r}} compatible with comultiplication, with coefficients solved
/// exhaustively over Z/p^k. Generators with n_i = 0 are dropped (the
/// trivial factor). Per generator g, solutions[g] lists every coefficient
/// vector a_{I,(g)} over the monomial basis; the full solution set is the
/// product across generators.
struct HopfSolveReport {
    long p = 0;
    std::vector<unsigned> exponents;
    long k = 0;
    std::size_t basis_size = 0;
    std::vector<std::vector<std::vector<std::int64_t>>> solutions_per_gen;

    bool zero_only() const;
    std::uint64_t total_solutions() const;
};

HopfSolveReport hopf_delta_solve(long p, const std::vector<unsigned>& exponents, long k,
                                 std::uint64_t enumeration_cap = (std::uint64_t{1} << 24));

/// Solution-set stability between consecutive truncation levels: the
/// reductions mod p^k of the level-(k+1) solutions equal the level-k set.
bool hopf_solutions_stable(const HopfSolveReport& at_k, const HopfSolveReport& at_k_plus_1);

}  // namespace witt

#endif
