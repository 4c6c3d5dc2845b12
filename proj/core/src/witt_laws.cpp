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

#include "witt/witt_laws.hpp"

#include <fstream>
#include <sstream>

namespace witt {

std::string law_kind_name(LawKind kind) {
    switch (kind) {
        case LawKind::Sum: return "sum";
        case LawKind::Product: return "product";
        case LawKind::Negation: return "negation";
        case LawKind::Ghost: return "ghost";
        case LawKind::WittGhost: return "wittghost";
        case LawKind::BJFromWitt: return "bj-from-witt";
        case LawKind::WittFromBJ: return "witt-from-bj";
    }
    return "?";
}

std::optional<LawKind> law_kind_from_name(const std::string& name) {
    for (LawKind k : {LawKind::Sum, LawKind::Product, LawKind::Negation, LawKind::Ghost,
                      LawKind::WittGhost, LawKind::BJFromWitt, LawKind::WittFromBJ})
        if (law_kind_name(k) == name) return k;
    return std::nullopt;
}

bool law_kind_is_binary(LawKind kind) { return kind == LawKind::Sum || kind == LawKind::Product; }

VarList law_vars(long n, bool binary) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(binary ? 2 * (n + 1) : n + 1));
    for (long i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
    if (binary)
        for (long i = 0; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return make_vars(std::move(names));
}

namespace {

void check_ceilings(long p, long n) {
    bool prime_ok = (p == 2 || p == 3 || p == 5 || p == 7);
    if (!prime_ok || n < 0 || n > kMaxLawLevel)
        throw Error("law generation supports primes p <= " + std::to_string(kMaxLawPrime) +
                    " and levels n <= " + std::to_string(kMaxLawLevel));
}

// x_i -> x_{i+shift} within the same variable list (used variables only)
SparsePoly shift_vars(const SparsePoly& f, std::size_t shift) {
    std::vector<std::size_t> where(f.vars()->size());
    for (std::size_t i = 0; i < where.size(); ++i) where[i] = i + shift;
    return f.with_vars(f.vars(), where);
}

// Buium-Joyal ghost polynomials Z_0..Z_n over the given unary variable list:
// Z_0 = x0, Z_m = Z_{m-1}(x0..)^p + p * Z_{m-1}(x1..).
std::vector<SparsePoly> ghost_family(long p, long n, const VarList& vars) {
    std::vector<SparsePoly> z;
    z.reserve(static_cast<std::size_t>(n + 1));
    z.push_back(SparsePoly::variable(integer_ring(), vars, 0));
    for (long m = 1; m <= n; ++m)
        z.push_back(z.back().pow(static_cast<std::uint32_t>(p)) + shift_vars(z.back(), 1).scaled(p));
    return z;
}

// classical ghost w_m = sum_{i<=m} p^i x_i^(p^(m-i))
std::vector<SparsePoly> witt_ghost_family(long p, long n, const VarList& vars) {
    std::vector<SparsePoly> w;
    for (long m = 0; m <= n; ++m) {
        SparsePoly acc = SparsePoly::zero(integer_ring(), vars);
        for (long i = 0; i <= m; ++i) {
            std::uint32_t e = 1;
            for (long t = 0; t < m - i; ++t) e *= static_cast<std::uint32_t>(p);
            acc = acc + SparsePoly::variable(integer_ring(), vars, static_cast<std::size_t>(i), e)
                            .scaled(Integer(p).pow(static_cast<unsigned long>(i)));
        }
        w.push_back(std::move(acc));
    }
    return w;
}

/// Levelwise ghost-matching solver. Given targets t_m (the ghost images the
/// law family must realize), produces laws L_m with Z_m(L_0..L_m) = t_m,
/// using that x_m occurs in Z_m linearly with coefficient p^m.
class GhostMatcher {
   public:
    GhostMatcher(long p, std::vector<SparsePoly> targets) : p_(p), targets_(std::move(targets)) {}

    std::vector<SparsePoly> solve() {
        laws_.push_back(targets_[0]);  // Z_0 = x0
        for (std::size_t m = 1; m < targets_.size(); ++m) {
            SparsePoly rest = window_with_zero(0, m);
            laws_.push_back((targets_[m] - rest).exact_div_by_int(Integer(p_).pow(m)));
        }
        return laws_;
    }

   private:
    // C(s, j) = Z_j(L_s, ..., L_{s+j}); for s = 0 this equals the target.
    const SparsePoly& window(std::size_t s, std::size_t j) {
        if (s == 0) return targets_[j];
        if (j == 0) return laws_[s];
        auto key = std::make_pair(s, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        SparsePoly v = window(s, j - 1).pow(static_cast<std::uint32_t>(p_)) + window(s + 1, j - 1).scaled(p_);
        return memo_.emplace(key, std::move(v)).first->second;
    }

    // Z_m(L_0, ..., L_{m-1}, 0), via Z_j(v_0..v_j) = Z_{j-1}(v_0..)^p + p Z_{j-1}(v_1..)
    SparsePoly window_with_zero(std::size_t s, std::size_t m) {
        if (s == m) return SparsePoly::zero(targets_[0].ring(), targets_[0].vars());
        return window(s, m - 1 - s).pow(static_cast<std::uint32_t>(p_)) +
               window_with_zero(s + 1, m).scaled(p_);
    }

    long p_;
    std::vector<SparsePoly> targets_;
    std::vector<SparsePoly> laws_;
    std::map<std::pair<std::size_t, std::size_t>, SparsePoly> memo_;
};

// restrict a level-m law to its own variable list
UniversalPolynomial restrict_level(long p, long m, LawKind kind, const SparsePoly& body, long full_n) {
    bool binary = law_kind_is_binary(kind);
    VarList vars_m = law_vars(m, binary);
    std::vector<std::size_t> where(body.vars()->size(), vars_m->size());
    for (long i = 0; i <= m; ++i) {
        where[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        if (binary) where[static_cast<std::size_t>(full_n + 1 + i)] = static_cast<std::size_t>(m + 1 + i);
    }
    return UniversalPolynomial{p, m, kind, body.with_vars(vars_m, where)};
}

}  // namespace

std::vector<UniversalPolynomial> generate_family(long p, long n, LawKind kind) {
    check_ceilings(p, n);
    const RingPtr Z = integer_ring();
    std::vector<UniversalPolynomial> out;

    if (kind == LawKind::Ghost || kind == LawKind::WittGhost) {
        VarList vars = law_vars(n, false);
        auto fam = kind == LawKind::Ghost ? ghost_family(p, n, vars) : witt_ghost_family(p, n, vars);
        for (long m = 0; m <= n; ++m) out.push_back(restrict_level(p, m, kind, fam[m], n));
        return out;
    }

    if (kind == LawKind::Sum || kind == LawKind::Product || kind == LawKind::Negation) {
        bool binary = law_kind_is_binary(kind);
        VarList vars = law_vars(n, binary);
        auto zx = ghost_family(p, n, vars);  // already in x-slots
        std::vector<SparsePoly> targets;
        if (binary) {
            std::vector<std::size_t> to_y(vars->size());
            for (std::size_t i = 0; i < to_y.size(); ++i) to_y[i] = i + static_cast<std::size_t>(n + 1);
            for (long m = 0; m <= n; ++m) {
                SparsePoly zy = zx[m].with_vars(vars, to_y);
                targets.push_back(kind == LawKind::Sum ? zx[m] + zy : zx[m] * zy);
            }
        } else {
            for (long m = 0; m <= n; ++m) targets.push_back(-zx[m]);
        }
        auto laws = GhostMatcher(p, std::move(targets)).solve();
        for (long m = 0; m <= n; ++m) out.push_back(restrict_level(p, m, kind, laws[m], n));
        return out;
    }

    // coordinate conversions
    VarList vars = law_vars(n, false);
    auto z = ghost_family(p, n, vars);
    auto w = witt_ghost_family(p, n, vars);
    if (kind == LawKind::WittFromBJ) {
        // w_m(c_0..c_m) = Z_m(x): c_m = (Z_m - sum_{i<m} p^i c_i^(p^(m-i))) / p^m
        std::vector<SparsePoly> c;
        c.push_back(SparsePoly::variable(Z, vars, 0));
        for (long m = 1; m <= n; ++m) {
            SparsePoly rest = SparsePoly::zero(Z, vars);
            for (long i = 0; i < m; ++i) {
                std::uint32_t e = 1;
                for (long t = 0; t < m - i; ++t) e *= static_cast<std::uint32_t>(p);
                rest = rest + c[static_cast<std::size_t>(i)].pow(e).scaled(Integer(p).pow(static_cast<unsigned long>(i)));
            }
            c.push_back((z[m] - rest).exact_div_by_int(Integer(p).pow(static_cast<unsigned long>(m))));
        }
        for (long m = 0; m <= n; ++m) out.push_back(restrict_level(p, m, kind, c[m], n));
        return out;
    }
    if (kind == LawKind::BJFromWitt) {
        // Z_m(b_0..b_m) = w_m(x): solved by ghost matching against targets w_m
        auto b = GhostMatcher(p, w).solve();
        for (long m = 0; m <= n; ++m) out.push_back(restrict_level(p, m, kind, b[m], n));
        return out;
    }
    throw Error("unknown law kind");
}

// ---------------------------------------------------------------------------
// cache

PolyCache::PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path PolyCache::path_for(long p, long n, LawKind kind) const {
    return dir_ / (law_kind_name(kind) + "_p" + std::to_string(p) + "_n" + std::to_string(n) + ".wpoly");
}

void PolyCache::store(const UniversalPolynomial& poly) const {
    std::filesystem::create_directories(dir_);
    auto path = path_for(poly.p, poly.n, poly.kind);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write " + tmp.string());
        out << "WITTPOLY v1 p=" << poly.p << " n=" << poly.n << " kind=" << law_kind_name(poly.kind)
            << "\n";
        out << poly.body.text_form();
        out << "END\n";
    }
    std::filesystem::rename(tmp, path);
}

bool PolyCache::contains(long p, long n, LawKind kind) const {
    return std::filesystem::exists(path_for(p, n, kind));
}

UniversalPolynomial PolyCache::load(long p, long n, LawKind kind) const {
    auto path = path_for(p, n, kind);
    std::ifstream in(path);
    if (!in) throw CacheMissError(path.string());
    std::string header;
    if (!std::getline(in, header)) throw CacheFormatError(path.string() + ": empty file");
    std::istringstream hs(header);
    std::string magic, ver, ptok, ntok, ktok;
    hs >> magic >> ver >> ptok >> ntok >> ktok;
    if (magic != "WITTPOLY" || ver != "v1" || ptok.rfind("p=", 0) != 0 || ntok.rfind("n=", 0) != 0 ||
        ktok.rfind("kind=", 0) != 0)
        throw CacheFormatError(path.string() + ": bad header '" + header + "'");
    long fp = 0, fn = 0;
    try {
        fp = std::stol(ptok.substr(2));
        fn = std::stol(ntok.substr(2));
    } catch (const std::exception&) {
        throw CacheFormatError(path.string() + ": bad header numbers");
    }
    auto fkind = law_kind_from_name(ktok.substr(5));
    if (!fkind) throw CacheFormatError(path.string() + ": unknown kind in header");
    if (fp != p || fn != n || *fkind != kind)
        throw CacheKeyMismatchError(path.string() + ": header says (p=" + std::to_string(fp) +
                                    ", n=" + std::to_string(fn) + ", kind=" + law_kind_name(*fkind) +
                                    ")");
    std::ostringstream body;
    std::string line;
    bool terminated = false;
    while (std::getline(in, line)) {
        if (line == "END") {
            terminated = true;
            continue;
        }
        if (terminated && !line.empty()) throw CacheFormatError(path.string() + ": data after END");
        if (!terminated) body << line << "\n";
    }
    if (!terminated) throw CacheFormatError(path.string() + ": missing END (truncated file)");
    UniversalPolynomial poly;
    poly.p = p;
    poly.n = n;
    poly.kind = kind;
    try {
        poly.body = SparsePoly::parse_text_form(body.str(), integer_ring(), law_vars(n, law_kind_is_binary(kind)));
    } catch (const CacheFormatError&) {
        throw;
    } catch (const Error& e) {
        throw CacheFormatError(path.string() + ": " + e.what());
    }
    return poly;
}

// ---------------------------------------------------------------------------
// provider

LawProvider& LawProvider::global() {
    static LawProvider instance;
    return instance;
}

void LawProvider::set_cache_dir(std::filesystem::path dir) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_ = PolyCache(std::move(dir));
}

void LawProvider::clear_cache_dir() {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.reset();
}

std::shared_ptr<const UniversalPolynomial> LawProvider::get(long p, long n, LawKind kind) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(p, n, static_cast<int>(kind));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (cache_ && cache_->contains(p, n, kind)) {
        auto poly = std::make_shared<const UniversalPolynomial>(cache_->load(p, n, kind));
        memo_[key] = poly;
        return poly;
    }
    auto family = generate_family(p, n, kind);
    std::shared_ptr<const UniversalPolynomial> wanted;
    for (auto& lvl : family) {
        auto lvl_key = std::make_tuple(p, lvl.n, static_cast<int>(kind));
        auto ptr = std::make_shared<const UniversalPolynomial>(std::move(lvl));
        if (memo_.find(lvl_key) == memo_.end()) memo_[lvl_key] = ptr;
        if (cache_ && !cache_->contains(p, ptr->n, kind)) cache_->store(*ptr);
        if (ptr->n == n) wanted = memo_[lvl_key];
    }
    return wanted;
}

}  // namespace witt
