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
 * @file reciprocity.hpp
 * @brief Transfers between finite fields, the residue/transfer complex for
 * 2-fold Pfister forms, and a constructor realizing even place sets as
 * ramification sets.
 */

#ifndef FQT_RECIPROCITY_HPP
#define FQT_RECIPROCITY_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "local_symbols.hpp"

namespace fqt {

/// Transfer I_q^1(L)/I_q^2(L) -> I_q^1(K)/I_q^2(K) for finite K inside L; it preserves the bit.
inline GradedWittClass transfer_class(const GradedWittClass& cls, const Field& base) {
    const Field& big = cls.residue_field;
    if (big->p() != base->p() || big->m() % base->m() != 0)
        throw Error(ErrorKind::FieldMismatch, "transfer target is not a subfield");
    return {base, cls.bit};
}

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Zeros of a quadratic form on F_p^n given as a callback on coordinate vectors.
template <class Form>
std::uint64_t count_zeros(std::uint32_t p, std::uint32_t n, Form form) {
    std::vector<std::uint32_t> x(n, 0);
    std::uint64_t zeros = 0;
    const std::uint64_t total = ipow(p, n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < n; ++i) {
            x[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (form(x) == 0) ++zeros;
    }
    return zeros;
}

/// Zero counts of the reference forms H^m and H^{m-1} + [1, -e] over F_p, e anisotropic.
inline std::pair<std::uint64_t, std::uint64_t> reference_counts(std::uint32_t p, std::uint32_t m) {
    const Field fp = make_field(p, 1);
    std::uint64_t e = 1;
    while (fp->add(1, fp->mul(fp->from_int(4), e)) == 0 || one_fold_class(FFElem(fp, e)) == 0) ++e;
    auto hyperbolic = [&](const std::vector<std::uint32_t>& x) {
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i < m; ++i) s += std::uint64_t(x[2 * i]) * x[2 * i + 1];
        return s % p;
    };
    auto mixed = [&](const std::vector<std::uint32_t>& x) {
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i + 1 < m; ++i) s += std::uint64_t(x[2 * i]) * x[2 * i + 1];
        const std::uint64_t u = x[2 * m - 2], w = x[2 * m - 1];
        s += u * u + (p - 1) * u * w + (p - e) * w % p * w;
        return s % p;
    };
    return {count_zeros(p, 2 * m, hyperbolic), count_zeros(p, 2 * m, mixed)};
}

}  // namespace detail

/// Transfer of <<b]> over L = F_{p^m} along the F_p-functional with the given
/// coordinate coefficients, classified by counting zeros of the 2m-dimensional form.
inline GradedWittClass transfer_explicit(const FFElem& b, const std::vector<std::uint64_t>& functional) {
    const Field& big = b.field();
    const std::uint32_t p = big->p(), m = big->m();
    if (functional.size() != m) throw Error(ErrorKind::InvalidArgument, "functional needs one coefficient per basis element");
    bool nonzero = false;
    for (auto s : functional) nonzero = nonzero || s % p != 0;
    if (!nonzero) throw Error(ErrorKind::ZeroFunctional, "transfer along the zero functional");
    if (p != 2 && (FFElem::one(big) + FFElem(big, big->from_int(4)) * b) == FFElem::zero(big))
        throw Error(ErrorKind::DegenerateSlot, "1+4b vanishes");

    auto form = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> xc(v.begin(), v.begin() + m), yc(v.begin() + m, v.end());
        const FFElem x = FFElem::from_coeffs(big, xc), y = FFElem::from_coeffs(big, yc);
        const auto val = (x * x - x * y - b * y * y).coeffs();
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i < m; ++i) s += (functional[i] % p) * val[i];
        return s % p;
    };
    const std::uint64_t zeros = detail::count_zeros(p, 2 * m, form);
    const auto [hyp, aniso] = detail::reference_counts(p, m);
    const Field fp = make_field(p, 1);
    if (zeros == hyp) return {fp, 0};
    if (zeros == aniso) return {fp, 1};
    throw Error(ErrorKind::ReciprocityViolation, "transferred form has an impossible zero count");
}

/// Evidence for the residue/transfer complex on one form.
struct ReciprocityReport {
    PfisterForm form;
    RamSet delta;
    std::vector<std::pair<Place, GradedWittClass>> residues;  // every candidate place, canonical order
    int transferred_sum = 0;
};

inline ReciprocityReport reciprocity_check(const PfisterForm& q) {
    ReciprocityReport rep{q, {}, {}, 0};
    const Field& base = q.field();
    for (const auto& v : delta_candidates(q)) {
        const GradedWittClass cls = residue_class(q, v);
        rep.residues.emplace_back(v, cls);
        if (cls.bit) rep.delta.push_back(v);
        rep.transferred_sum ^= transfer_class(cls, base).bit;
    }
    if (rep.transferred_sum != 0)
        throw Error(ErrorKind::ReciprocityViolation, "residue transfers do not cancel for " + to_string(q));
    return rep;
}

/// Image of a base-field element of F_q(T) in F_{q^k}(T) under the canonical embedding.
inline Poly extend_scalars(const Poly& f, const Field& big) {
    std::vector<std::uint64_t> c;
    for (auto x : f.coeffs()) c.push_back(embed(FFElem(f.field(), x), big).index());
    return Poly(big, std::move(c));
}
inline RatFunc extend_scalars(const RatFunc& x, const Field& big) {
    return RatFunc(extend_scalars(x.num(), big), extend_scalars(x.den(), big));
}
inline PfisterForm extend_scalars(const PfisterForm& q, const Field& big) {
    return PfisterForm(extend_scalars(q.a(), big), extend_scalars(q.b(), big));
}

/// Places of F' = F_{q^k}(T) above a place of F_q(T).
inline std::vector<Place> places_above(const Place& v, const Field& big) {
    if (v.is_infinity()) return {Place::infinity(big)};
    std::vector<Place> out;
    for (const auto& [fac, mult] : factorize(extend_scalars(v.poly(), big))) out.push_back(Place::finite_unchecked(fac));
    return out;
}

struct RealizeOptions {
    int degree_cap = 16;
    int attempts_per_stage = 256;
    std::uint64_t seed = 0;
};

namespace detail {

/// Least residue representative (polynomial of degree < deg v) accepted by pred.
template <class Pred>
Poly least_residue(const Place& v, Pred pred) {
    const Field& f = v.field();
    const std::uint64_t count = ipow(f->size(), static_cast<std::uint64_t>(v.degree()));
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        Poly r = Poly::from_index(f, idx);
        if (pred(r)) return r;
    }
    throw Error(ErrorKind::SearchExhausted, "no residue with the requested property at " + to_string(v));
}

inline bool units_on(const PfisterForm& q, const PlaceSet& u) {
    for (const auto& v : u) {
        if (q.b().is_zero() || valuation(q.b(), v) != 0) return false;
        if (valuation(q.c(), v) != 0) return false;
    }
    return true;
}

}  // namespace detail

/// A form with ramification set exactly S whose slots b and 1+4b are units on U.
/// Search with verification; throws OddCardinality or SearchExhausted.
inline PfisterForm realize(const Field& f, PlaceSet s, PlaceSet u, const RealizeOptions& opt = {}) {
    s = make_place_set(std::move(s));
    u = make_place_set(std::move(u));
    if (s.size() % 2 != 0)
        throw Error(ErrorKind::OddCardinality, "a ramification set has even cardinality; got " + std::to_string(s.size()));
    const bool odd = f->p() != 2;
    if (s.empty()) {
        std::uint64_t b = 0;
        if (!u.empty()) {
            b = 1;
            while (odd && f->add(1, f->mul(f->from_int(4), b)) == 0) ++b;
        }
        return PfisterForm(RatFunc::one(f), RatFunc::constant(f, b));
    }

    // Bilinear slot: uniformizers of the finite places of S, with a parity fix at infinity.
    Poly a = Poly::one(f);
    int sdeg = 0, maxdeg = 1;
    for (const auto& v : s) {
        maxdeg = std::max(maxdeg, v.degree());
        if (v.is_infinity()) continue;
        a = a * v.poly();
        sdeg += v.degree();
    }
    const bool inf_in_s = contains(s, Place::infinity(f));
    std::optional<Place> z;
    if ((sdeg % 2 == 1) != inf_in_s) {
        z = least_finite_place(f, [&](const Place& v) { return v.degree() % 2 == 1 && !contains(s, v) && !contains(u, v); });
        a = a * z->poly();
    }
    const RatFunc ra(a);

    // Residue targets for the search variable x (x = 1+4b in odd characteristic, x = b otherwise).
    std::vector<ApproxTarget> targets;
    PlaceSet constrained = make_place_set([&] {
        PlaceSet k = s;
        k.insert(k.end(), u.begin(), u.end());
        if (z) k.push_back(*z);
        return k;
    }());
    for (const auto& v : constrained) {
        RatFunc t;
        if (contains(s, v)) {
            t = RatFunc(detail::least_residue(v, [&](const Poly& r) {
                return odd ? !residue_is_square(r % v.poly(), v) : residue_trace(r % v.poly(), v) == 1;
            }));
        } else if (z && v == *z) {
            t = odd ? RatFunc::one(f) : RatFunc::zero(f);
        } else {
            t = odd ? RatFunc::constant(f, 2) : RatFunc::one(f);
        }
        targets.push_back({v, t, 1});
    }
    const RatFunc x0 = approximate(f, targets);

    Poly gfin = Poly::one(f);
    for (const auto& v : constrained)
        if (!v.is_infinity()) gfin = gfin * v.poly();
    const bool inf_constrained = contains(constrained, Place::infinity(f));
    const Place spare = least_finite_place(f, [&](const Place& v) { return !contains(constrained, v); });

    std::mt19937_64 rng(opt.seed);
    const RatFunc four_inv = odd ? RatFunc::constant(f, f->inv(f->from_int(4))) : RatFunc::one(f);
    int bound = maxdeg + 2;
    for (;; bound *= 2) {
        const int stage_bound = std::min(bound, opt.degree_cap);
        RatFunc g(gfin);
        if (inf_constrained) {
            int e = (gfin.degree() + stage_bound + spare.degree() - 1) / spare.degree();
            if (e % 2) ++e;
            g = g / pow(RatFunc(spare.poly()), e);
        }
        for (int attempt = 0; attempt < opt.attempts_per_stage; ++attempt) {
            std::vector<std::uint64_t> hc(static_cast<std::size_t>(stage_bound));
            for (auto& c : hc) c = attempt == 0 ? 0 : rng() % f->size();
            const RatFunc x = x0 + g * RatFunc(Poly(f, std::move(hc)));
            if (x.is_zero()) continue;
            const RatFunc b = odd ? (x - RatFunc::one(f)) * four_inv : x;
            const PfisterForm q(ra, b);
            if (!detail::units_on(q, u)) continue;
            if (delta(q) == s) return q;
        }
        if (stage_bound >= opt.degree_cap)
            throw Error(ErrorKind::SearchExhausted, "realize reached degree bound " + std::to_string(stage_bound));
    }
}

}  // namespace fqt

#endif
