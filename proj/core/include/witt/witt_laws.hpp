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

#ifndef WITT_WITT_LAWS_HPP
#define WITT_WITT_LAWS_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

/// The universal polynomials of p-typical Witt vector arithmetic in
/// Buium-Joyal coordinates:
///   Sum / Product / Negation - the ring laws S_n, P_n, N_n,
///   Ghost                    - Z_n, expressing the n-fold Frobenius in
///                               iterated shift operators,
///   WittGhost                - the classical ghost w_n = sum p^i x_i^(p^(n-i)),
///   BJFromWitt / WittFromBJ  - the coordinate changes between the two
///                               systems (identity through level 1).
enum class LawKind { Sum, Product, Negation, Ghost, WittGhost, BJFromWitt, WittFromBJ };

std::string law_kind_name(LawKind kind);
std::optional<LawKind> law_kind_from_name(const std::string& name);
bool law_kind_is_binary(LawKind kind);  // uses y-variables as well

/// Generation is capped at desk scale; term counts grow superexponentially.
constexpr long kMaxLawPrime = 7;
constexpr long kMaxLawLevel = 5;

struct UniversalPolynomial {
    long p = 0;
    long n = 0;
    LawKind kind = LawKind::Ghost;
    SparsePoly body;  // over Z, in x0..xn (and y0..yn for binary kinds)
};

/// Variable list for a level-n law: x0..xn, then y0..yn when binary.
VarList law_vars(long n, bool binary);

/// Generate levels 0..n of one family. Sum/Product/Negation are solved
/// levelwise by matching ghost components, finishing each level with an
/// exact division by p^n; Ghost/WittGhost come from their recursions;
/// the conversions match the two ghost families against each other.
std::vector<UniversalPolynomial> generate_family(long p, long n, LawKind kind);

/// Directory-backed store of generated polynomials, one file per
/// (p, n, kind). Files carry the header `WITTPOLY v1 p=<p> n=<n> kind=<kind>`
/// followed by the canonical text form. Single writer, many readers.
class PolyCache {
   public:
    explicit PolyCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(long p, long n, LawKind kind) const;

    void store(const UniversalPolynomial& poly) const;
    UniversalPolynomial load(long p, long n, LawKind kind) const;
    bool contains(long p, long n, LawKind kind) const;

   private:
    std::filesystem::path dir_;
};

/// Memoized access to law families, optionally backed by a PolyCache
/// (loaded when present, stored after generation otherwise).
class LawProvider {
   public:
    LawProvider() = default;
    explicit LawProvider(std::filesystem::path cache_dir) : cache_(PolyCache(std::move(cache_dir))) {}

    std::shared_ptr<const UniversalPolynomial> get(long p, long n, LawKind kind);

    /// Process-wide provider (no disk cache unless configured).
    static LawProvider& global();
    void set_cache_dir(std::filesystem::path dir);
    void clear_cache_dir();

   private:
    std::mutex mu_;
    std::map<std::tuple<long, long, int>, std::shared_ptr<const UniversalPolynomial>> memo_;
    std::optional<PolyCache> cache_;
};

}  // namespace witt

#endif
