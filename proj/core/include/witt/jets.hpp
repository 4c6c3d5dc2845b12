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

#ifndef WITT_JETS_HPP
#define WITT_JETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "witt/poly.hpp"
#include "witt/witt_laws.hpp"

namespace witt {

/// Finitely presented ring Z[g_1..g_r]/(f_1..f_s).
struct RingPresentation {
    VarList gens;
    std::vector<SparsePoly> relations;  // over Z in gens
};

/// Grammar: `Z[g1,...,gr]` or `Z[g1,...,gr]/(f1, ..., fs)` with
/// integer-coefficient polynomials, `*` optional, `^` for powers.
/// Whitespace-insensitive; errors carry the byte position.
RingPresentation parse_presentation(const std::string& text);

/// Printed in the same grammar the parser accepts (roundtrip property).
std::string presentation_str(const RingPresentation& pres);

/// A single polynomial in the relation grammar over the given generators
/// (zero is allowed here, unlike for relations).
SparsePoly parse_polynomial(const std::string& text, const VarList& gens);

/// Jet variable list for generators g and order n: level-major,
/// [g1_0, ..., gr_0, g1_1, ..., gr_1, ...]; lower-order lists are prefixes.
VarList jet_vars(const VarList& gens, long n);

/// delta^j of a relation, over the order-j jet variables, computed by the
/// closed formula delta(F) = (F(phi) - F^p)/p with
/// phi(g_m) = g_m^p + p g_{m+1} on the p-torsion free polynomial cover.
SparsePoly prolong(const SparsePoly& f, long p, long j);

struct JetPresentation {
    long p = 0;
    long n = 0;
    std::size_t original_gens = 0;
    RingPresentation pres;  // gens jet_vars(...), relations delta^j(f_i), 0 <= j <= n
};

JetPresentation jet_presentation(const RingPresentation& a, long p, long n);

/// All assignments of the generators to elements of C satisfying every
/// relation. Throws TooLargeError when |C|^r exceeds the bound.
constexpr std::uint64_t kDefaultEnumerationBound = 1000000;
std::vector<std::vector<RingElem>> enumerate_points(const RingPresentation& pres, const RingPtr& C,
                                                    std::uint64_t bound = kDefaultEnumerationBound);

/// |J^n(A)(C)| versus |A(W_n(C))|, which the jet construction must equate.
struct AdjunctionReport {
    std::uint64_t count_jet = 0;
    std::uint64_t count_witt = 0;
    bool pass = false;
};
AdjunctionReport adjunction_check(const RingPresentation& a, long p, long n, const RingPtr& C,
                                  std::uint64_t bound = kDefaultEnumerationBound);

/// Image of a jet point under the coghost map: n+1 points of A over C,
/// the j-th being Z_j applied to each generator's jet coordinates.
/// Each output tuple is checked against A's relations.
std::vector<std::vector<RingElem>> coghost_eval(const RingPresentation& a,
                                                const std::vector<RingElem>& jet_point, long p,
                                                long n, const RingPtr& C);

}  // namespace witt

#endif
