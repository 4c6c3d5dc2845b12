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

#ifndef WITT_WITT_VECTOR_HPP
#define WITT_WITT_VECTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "witt/ring.hpp"
#include "witt/witt_laws.hpp"

namespace witt {

/// W_n(R): ring structure on R^(n+1) in Buium-Joyal coordinates, with
/// addition/multiplication/negation given by the cached universal laws.
/// Iterated rings W_n(W_m(R)) arise by passing a Witt ring as the base.
RingPtr make_witt_ring(RingPtr base, long p, long n, LawProvider* laws = nullptr);

struct WittRingInfo {
    RingPtr base;
    long p;
    long n;
};
std::optional<WittRingInfo> witt_ring_info(const Ring& r);

/// Element of W_n(R) from components (x_0, ..., x_n).
RingElem make_witt_vector(const RingPtr& witt_ring, std::vector<RingElem> components);
const std::vector<RingElem>& witt_components(const RingElem& a);

/// tau: (x_0..x_n) -> (x_0..x_{n-1}), a ring homomorphism.
RingElem witt_truncate(const RingElem& a);
/// delta: (x_0..x_n) -> (x_1..x_n), the degree-shifting delta operator.
RingElem witt_delta_shift(const RingElem& a);
/// phi = tau(x)^p + p delta(x): W_n(R) -> W_{n-1}(R), a ring homomorphism.
RingElem witt_frobenius(const RingElem& a);
/// V: W_{n-1}(R) -> W_n(R); computed through the classical coordinates,
/// where V is (w_0..w_{n-1}) -> (0, w_0..w_{n-1}).
RingElem witt_verschiebung(const RingElem& a);

/// Ghost tuple <Z_0(x), ..., Z_n(x)> in R^(n+1).
std::vector<RingElem> witt_ghost(const RingElem& a);

/// Coordinate conversions between Buium-Joyal and classical Witt components.
std::vector<RingElem> bj_to_classical(const RingElem& a);
RingElem classical_to_bj(const RingPtr& witt_ring, const std::vector<RingElem>& classical);

/// Delta: W_{m+n}(R) -> W_n(W_m(R)), the window map
/// (x_0..x_{m+n}) -> ((x_0..x_m), (x_1..x_{m+1}), ..., (x_n..x_{m+n})).
RingElem witt_coplethysm(const RingElem& a, long m, long n);

/// Equalizer membership for z in W_n(W_1(R)): z is in the image of Delta
/// iff tau(z) = Delta(W_n(tau)(z)), i.e. iff its windows chain. Returns the
/// unique preimage in W_{n+1}(R) when they do.
struct EqualizerVerdict {
    bool in_image = false;
    RingElem preimage;                          // valid when in_image
    std::optional<std::size_t> witness_index;   // first broken link otherwise
};
EqualizerVerdict coplethysm_equalizer_check(const RingElem& z);

/// Ghost-component retraction of Delta: <<a_0,b_0>,...,<a_n,b_n>> ->
/// <a_0,...,a_n,b_n>.
std::vector<RingElem> ghost_retraction(const std::vector<std::pair<RingElem, RingElem>>& g);

/// Least e >= 1 with p^e = 0 in the given Witt ring, or nullopt below the
/// bound (a bug sentinel for p-adic inputs).
std::optional<long> p_nilpotency_degree(const RingPtr& witt_ring, long bound = 64);

}  // namespace witt

#endif
