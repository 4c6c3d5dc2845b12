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

#include "witt/jets.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "witt/witt_vector.hpp"

namespace witt {

namespace {

/// Recursive-descent parser for the presentation grammar.
class Parser {
   public:
    explicit Parser(const std::string& text) : s_(text) {}

    RingPresentation parse() {
        skip_ws();
        expect_char('Z', "expected 'Z'");
        expect_char('[', "expected '['");
        std::vector<std::string> names;
        names.push_back(parse_ident());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            names.push_back(parse_ident());
            skip_ws();
        }
        expect_char(']', "expected ']' or ','");
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j]) throw DuplicateGeneratorError(names[i]);
        RingPresentation pres;
        pres.gens = make_vars(names);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            expect_char('(', "expected '('");
            pres.relations.push_back(parse_poly(pres.gens));
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                pres.relations.push_back(parse_poly(pres.gens));
                skip_ws();
            }
            expect_char(')', "expected ')' or ','");
        }
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected trailing input");
        for (const auto& r : pres.relations)
            if (r.is_zero()) throw SyntaxError(0, "zero relation");
        return pres;
    }

    SparsePoly parse_single_poly(const VarList& gens) {
        SparsePoly f = parse_poly(gens);
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected trailing input");
        return f;
    }

   private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect_char(char c, const std::string& msg) {
        skip_ws();
        if (peek() != c) throw SyntaxError(pos_, msg);
        ++pos_;
    }

    std::string parse_ident() {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "expected identifier");
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Integer parse_integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "expected integer");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(s_.substr(start, pos_ - start));
    }

    // factor := integer | ident ('^' integer)?
    SparsePoly parse_factor(const VarList& gens) {
        skip_ws();
        const RingPtr Z = integer_ring();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            return SparsePoly::constant(Z, gens, RingElem(Z, parse_integer()));
        }
        std::size_t at = pos_;
        std::string name = parse_ident();
        auto it = std::find(gens->begin(), gens->end(), name);
        if (it == gens->end()) throw SyntaxError(at, "unknown generator '" + name + "'");
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            Integer exp = parse_integer();
            if (exp.sign() <= 0 || !exp.fits_i64() || exp.to_i64() > 1 << 16)
                throw SyntaxError(pos_, "exponent out of range");
            e = static_cast<std::uint32_t>(exp.to_i64());
        }
        return SparsePoly::variable(Z, gens, static_cast<std::size_t>(it - gens->begin()), e);
    }

    bool at_factor_start() {
        skip_ws();
        return std::isdigit(static_cast<unsigned char>(peek())) ||
               std::isalpha(static_cast<unsigned char>(peek()));
    }

    // term := factor (('*')? factor)*
    SparsePoly parse_term(const VarList& gens) {
        SparsePoly t = parse_factor(gens);
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                t = t * parse_factor(gens);
            } else if (at_factor_start()) {
                t = t * parse_factor(gens);
            } else {
                return t;
            }
        }
    }

    // poly := ['+'|'-'] term (('+'|'-') term)*
    SparsePoly parse_poly(const VarList& gens) {
        skip_ws();
        SparsePoly acc = SparsePoly::zero(integer_ring(), gens);
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        SparsePoly t = parse_term(gens);
        acc = negate ? acc - t : acc + t;
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                ++pos_;
                t = parse_term(gens);
                acc = negate ? acc - t : acc + t;
            } else {
                return acc;
            }
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RingPresentation parse_presentation(const std::string& text) { return Parser(text).parse(); }

SparsePoly parse_polynomial(const std::string& text, const VarList& gens) {
    return Parser(text).parse_single_poly(gens);
}

std::string presentation_str(const RingPresentation& pres) {
    std::ostringstream os;
    os << "Z[";
    for (std::size_t i = 0; i < pres.gens->size(); ++i) os << (i ? "," : "") << (*pres.gens)[i];
    os << "]";
    if (!pres.relations.empty()) {
        os << "/(";
        for (std::size_t i = 0; i < pres.relations.size(); ++i)
            os << (i ? ", " : "") << pres.relations[i].str();
        os << ")";
    }
    return os.str();
}

VarList jet_vars(const VarList& gens, long n) {
    std::vector<std::string> names;
    names.reserve(gens->size() * static_cast<std::size_t>(n + 1));
    for (long m = 0; m <= n; ++m)
        for (const auto& g : *gens) names.push_back(g + "_" + std::to_string(m));
    // prolonged generator names must stay distinct
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw DuplicateGeneratorError("jet variable " + names[i]);
    return make_vars(std::move(names));
}

namespace {

// embed a polynomial over jet_vars(gens, m) into jet_vars(gens, m+1)
SparsePoly embed_one_level(const SparsePoly& f, const VarList& up) {
    std::vector<std::size_t> where(f.vars()->size());
    for (std::size_t i = 0; i < where.size(); ++i) where[i] = i;  // level-major prefix
    return f.with_vars(up, where);
}

}  // namespace

SparsePoly prolong(const SparsePoly& f, long p, long j) {
    if (j < 0) throw Error("prolong needs j >= 0");
    const RingPtr Z = integer_ring();
    const VarList gens = f.vars();
    const std::size_t r = gens->size();
    // rename g -> g_0
    VarList v0 = jet_vars(gens, 0);
    std::vector<std::size_t> id(r);
    for (std::size_t i = 0; i < r; ++i) id[i] = i;
    SparsePoly cur = f.with_vars(v0, id);
    for (long m = 0; m < j; ++m) {
        VarList next = jet_vars(gens, m + 1);
        SparsePoly embedded = embed_one_level(cur, next);
        // phi(g_t) = g_t^p + p g_{t+1} for every jet variable of level <= m
        std::vector<SparsePoly> phi_images;
        phi_images.reserve(next->size());
        for (std::size_t idx = 0; idx < next->size(); ++idx) {
            std::size_t level = idx / r;
            if (level <= static_cast<std::size_t>(m)) {
                phi_images.push_back(
                    SparsePoly::variable(Z, next, idx, static_cast<std::uint32_t>(p)) +
                    SparsePoly::variable(Z, next, idx + r).scaled(p));
            } else {
                phi_images.push_back(SparsePoly::variable(Z, next, idx));  // unused
            }
        }
        SparsePoly shifted = embedded.substitute(phi_images);
        cur = (shifted - embedded.pow(static_cast<std::uint32_t>(p))).exact_div_by_int(Integer(p));
    }
    return cur;
}

JetPresentation jet_presentation(const RingPresentation& a, long p, long n) {
    JetPresentation jp;
    jp.p = p;
    jp.n = n;
    jp.original_gens = a.gens->size();
    jp.pres.gens = jet_vars(a.gens, n);
    for (long j = 0; j <= n; ++j) {
        for (const auto& f : a.relations) {
            SparsePoly pj = prolong(f, p, j);
            std::vector<std::size_t> where(pj.vars()->size());
            for (std::size_t i = 0; i < where.size(); ++i) where[i] = i;
            jp.pres.relations.push_back(pj.with_vars(jp.pres.gens, where));
        }
    }
    return jp;
}

std::vector<std::vector<RingElem>> enumerate_points(const RingPresentation& pres, const RingPtr& C,
                                                    std::uint64_t bound) {
    auto card = C->cardinality();
    if (!card) throw Error("enumerate_points needs a finite ring");
    const std::size_t r = pres.gens->size();
    long double total_f = 1;
    for (std::size_t i = 0; i < r; ++i) total_f *= static_cast<long double>(*card);
    if (total_f > static_cast<long double>(bound))
        throw TooLargeError("|C|^r with |C| = " + std::to_string(*card) + ", r = " +
                            std::to_string(r) + " exceeds bound " + std::to_string(bound));
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= *card;

    std::vector<std::vector<RingElem>> points;
    std::vector<RingElem> assignment(r);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < r; ++i) {
            assignment[i] = C->element_at(v % *card);
            v /= *card;
        }
        bool ok = true;
        for (const auto& f : pres.relations) {
            if (!C->is_zero(f.evaluate(assignment, C))) {
                ok = false;
                break;
            }
        }
        if (ok) points.push_back(assignment);
    }
    return points;
}

AdjunctionReport adjunction_check(const RingPresentation& a, long p, long n, const RingPtr& C,
                                  std::uint64_t bound) {
    AdjunctionReport report;
    JetPresentation jp = jet_presentation(a, p, n);
    report.count_jet = enumerate_points(jp.pres, C, bound).size();

    RingPtr W = make_witt_ring(C, p, n);
    RingPresentation over_witt{a.gens, a.relations};
    report.count_witt = enumerate_points(over_witt, W, bound).size();
    report.pass = report.count_jet == report.count_witt;
    return report;
}

std::vector<std::vector<RingElem>> coghost_eval(const RingPresentation& a,
                                                const std::vector<RingElem>& jet_point, long p,
                                                long n, const RingPtr& C) {
    const std::size_t r = a.gens->size();
    if (jet_point.size() != r * static_cast<std::size_t>(n + 1))
        throw ShapeMismatchError("jet point has wrong arity");
    auto& laws = LawProvider::global();
    std::vector<std::vector<RingElem>> out;
    for (long j = 0; j <= n; ++j) {
        auto z = laws.get(p, j, LawKind::Ghost);
        std::vector<RingElem> point;
        point.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<RingElem> coords;
            for (long m = 0; m <= j; ++m) coords.push_back(jet_point[static_cast<std::size_t>(m) * r + i]);
            point.push_back(z->body.evaluate(coords, C));
        }
        for (const auto& f : a.relations)
            if (!C->is_zero(f.evaluate(point, C)))
                throw Error("coghost image violates a relation (ghost maps must be homomorphisms)");
        out.push_back(std::move(point));
    }
    return out;
}

}  // namespace witt
