/*
   Copyright 2026 The fqt Authors

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

/**
 * @file local_symbols.hpp
 * @brief Residue classes of 2-fold Pfister forms at the places of F_q(T).
 *
 * Odd characteristic: the form is <1,-a> (x) <1,-c> with c = 1+4b and its
 * residue is the tame symbol (a, c)_v. Characteristic 2: the quadratic slot
 * is first reduced modulo {x^2 + x} until its pole is odd or gone, then the
 * unit case reads off a trace and the wild case uses the residue of the
 * differential b da/a.
 */

#ifndef FQT_LOCAL_SYMBOLS_HPP
#define FQT_LOCAL_SYMBOLS_HPP

#include <string>
#include <vector>

#include "pfister_form.hpp"

namespace fqt {

/// Element of I_q^1(k)/I_q^2(k) = Z/2 for a finite field k.
struct GradedWittClass {
    Field residue_field;
    int bit = 0;
    friend bool operator==(const GradedWittClass& x, const GradedWittClass& y) {
        return x.residue_field == y.residue_field && x.bit == y.bit;
    }
};

using RamSet = PlaceSet;

/// 1 iff <<b]> is anisotropic over the finite field of b.
inline int one_fold_class(const FFElem& b) {
    const Field& k = b.field();
    if (k->p() == 2) return static_cast<int>(absolute_trace(b).index());
    const FFElem c = FFElem::one(k) + FFElem(k, k->from_int(4)) * b;
    if (c == FFElem::zero(k)) throw Error(ErrorKind::DegenerateSlot, "1+4b vanishes in the residue field");
    return is_square(c) ? 0 : 1;
}

namespace detail {

inline void require_odd(const Field& f, const char* what) {
    if (f->p() == 2) throw Error(ErrorKind::CharTwoUnsupported, std::string(what) + " needs odd characteristic");
}
inline void require_two(const Field& f, const char* what) {
    if (f->p() != 2) throw Error(ErrorKind::WrongCharacteristic, std::string(what) + " needs characteristic 2");
}

/// Quadratic character of a nonzero residue as +1 / -1.
inline int residue_character(const Poly& r, const Place& v) { return residue_is_square(r, v) ? 1 : -1; }

}  // namespace detail

/// Tame Hilbert symbol (a, c)_v in odd characteristic.
inline int tame_symbol(const RatFunc& a, const RatFunc& c, const Place& v) {
    detail::require_odd(a.field(), "tame_symbol");
    if (a.is_zero() || c.is_zero()) throw Error(ErrorKind::ZeroElement, "tame symbol of zero");
    const int alpha = valuation(a, v), gamma = valuation(c, v);
    int chi = 1;
    if ((alpha & 1) && (gamma & 1)) chi *= detail::residue_character(Poly::constant(a.field(), a.field()->neg(1)), v);
    if (gamma & 1) chi *= detail::residue_character(unit_residue(a, v), v);
    if (alpha & 1) chi *= detail::residue_character(unit_residue(c, v), v);
    return chi;
}

/// Anisotropy of <1,-a,-c,ac> over the completion at v, by its two residue forms.
inline bool springer_oracle(const RatFunc& a, const RatFunc& c, const Place& v) {
    detail::require_odd(a.field(), "springer_oracle");
    const Field& f = a.field();
    const RatFunc one = RatFunc::one(f);
    const RatFunc pi = v.uniformizer();
    std::vector<FFElem> even, odd;
    for (const RatFunc& coef : {one, -a, -c, a * c}) {
        const int k = valuation(coef, v);
        const FFElem u = residue_at(coef * pow(pi, -k), v);
        (k % 2 == 0 ? even : odd).push_back(u);
    }
    auto anisotropic = [](const std::vector<FFElem>& form) {
        if (form.size() <= 1) return true;
        if (form.size() >= 3) return false;
        return !is_square(-(form[0] * form[1]));
    };
    return anisotropic(even) && anisotropic(odd);
}

/// Characteristic 2: b' = b - c^2 - c with v(b') >= 0 or v(b') odd negative.
inline RatFunc as_reduce(RatFunc b, const Place& v) {
    detail::require_two(b.field(), "as_reduce");
    const Field& f = b.field();
    while (!b.is_zero()) {
        const int k = valuation(b, v);
        if (k >= 0 || (-k) % 2 == 1) break;
        const int j = -k / 2;
        RatFunc c;
        if (v.is_infinity()) {
            c = RatFunc::constant(f, f->sqrt_char2(unit_residue(b, v).coeff(0))) * pow(RatFunc::t(f), j);
        } else {
            const Poly lambda = residue_sqrt_char2(unit_residue(b, v), v);
            c = RatFunc(lambda) / pow(RatFunc(v.poly()), j);
        }
        b = b - c * c - c;
    }
    return b;
}

/// Trace to F_2 of Res_v(b da/a); bit 1 means <<a, b]] is ramified at v.
inline int schmidt_witt_residue(const RatFunc& a, const RatFunc& b, const Place& v) {
    detail::require_two(a.field(), "schmidt_witt_residue");
    if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "bilinear slot must be nonzero");
    const Field& f = a.field();
    // da/a = (n'd - nd') / (nd)
    const Poly& n = a.num();
    const Poly& d = a.den();
    const Poly dn = n.derivative() * d - n * d.derivative();
    if (dn.is_zero() || b.is_zero()) return 0;
    const RatFunc w = b * RatFunc(dn, n * d);
    const Poly& num = w.num();
    const Poly& den = w.den();
    std::uint64_t res = 0;  // F_q-trace of the residue, as an index in F_q
    if (v.is_infinity()) {
        const Poly r = num % den;
        if (!r.is_zero() && r.degree() == den.degree() - 1) res = f->mul(r.lc(), f->inv(den.lc()));
    } else {
        const int e = multiplicity(den, v.poly());
        if (e == 0) return 0;
        const Poly pe = pow(v.poly(), static_cast<std::uint64_t>(e));
        const Poly rest = den / pe;
        const Poly g = mulmod(num % pe, invmod(rest, pe), pe);
        res = g.coeff(pe.degree() - 1);
    }
    return static_cast<int>(f->trace(res));
}

/// Which local rule decided a residue class; used for evidence traces.
struct ResidueEvidence {
    Place place;
    int bit = 0;
    std::string rule;
    std::string detail;
};

inline ResidueEvidence residue_evidence(const PfisterForm& q, const Place& v) {
    ResidueEvidence ev{v, 0, "", ""};
    if (q.mode() == CharMode::Odd) {
        const RatFunc c = q.c();
        const int va = valuation(q.a(), v), vc = valuation(c, v);
        const int sym = tame_symbol(q.a(), c, v);
        ev.bit = sym == -1 ? 1 : 0;
        ev.rule = (va % 2 == 0 && vc % 2 == 0) ? "even-valuations" : "tame-symbol";
        ev.detail = "v(a)=" + std::to_string(va) + " v(1+4b)=" + std::to_string(vc) + " symbol=" + std::to_string(sym);
        return ev;
    }
    const RatFunc b2 = as_reduce(q.b(), v);
    const int va = valuation(q.a(), v);
    const int vb = b2.is_zero() ? kInfiniteValuation : valuation(b2, v);
    ev.detail = "v(a)=" + std::to_string(va) + " reduced b=" + to_string(b2);
    if (vb > 0) {
        ev.rule = "split-slot";
    } else if (vb == 0) {
        ev.rule = "unit-slot";
        if (va % 2 != 0) ev.bit = static_cast<int>(residue_trace(unit_residue(b2, v), v));
    } else {
        ev.rule = "wild-differential";
        ev.bit = schmidt_witt_residue(q.a(), b2, v);
    }
    return ev;
}

/// The residue class of q at v.
inline GradedWittClass residue_class(const PfisterForm& q, const Place& v) {
    return {residue_field(v), residue_evidence(q, v).bit};
}

/// Places where the residue of q can be nonzero: supports of the slots.
inline PlaceSet delta_candidates(const PfisterForm& q) {
    PlaceSet cand;
    auto add = [&](const RatFunc& x) {
        if (x.is_zero()) return;
        for (const auto& [v, k] : support(x)) cand.push_back(v);
    };
    add(q.a());
    add(q.b());
    if (q.mode() == CharMode::Odd) add(q.c());
    return make_place_set(std::move(cand));
}

/// Ramification set of q; its cardinality is checked to be even.
inline RamSet delta(const PfisterForm& q) {
    RamSet out;
    for (const auto& v : delta_candidates(q))
        if (residue_evidence(q, v).bit == 1) out.push_back(v);
    if (out.size() % 2 != 0)
        throw Error(ErrorKind::ReciprocityViolation, "odd ramification set for " + to_string(q));
    return out;
}

/// Ramification set of the quaternion-type form <1,-x> (x) <1,-y> (odd characteristic).
inline RamSet hilbert_ramification(const RatFunc& x, const RatFunc& y) {
    detail::require_odd(x.field(), "hilbert_ramification");
    PlaceSet cand;
    for (const auto& [v, k] : support(x)) cand.push_back(v);
    for (const auto& [v, k] : support(y)) cand.push_back(v);
    RamSet out;
    for (const auto& v : make_place_set(std::move(cand)))
        if (tame_symbol(x, y, v) == -1) out.push_back(v);
    return out;
}

}  // namespace fqt

#endif
