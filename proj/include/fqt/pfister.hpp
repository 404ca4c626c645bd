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
 * @file pfister.hpp
 * @brief Isometry-preserving rewrites of 2-fold Pfister forms and the
 * isometry test by ramification sets.
 */

#ifndef FQT_PFISTER_HPP
#define FQT_PFISTER_HPP

#include <utility>

#include "reciprocity.hpp"

namespace fqt {

/// Odd characteristic: b -> c^2 b + (c^2 - 1)/4, so 1+4b' = c^2 (1+4b).
/// Characteristic 2: b -> b + c^2 + c.
inline PfisterForm quad_slot_shift(const PfisterForm& q, const RatFunc& c) {
    const Field& f = q.field();
    if (q.mode() == CharMode::Two) return PfisterForm(q.a(), q.b() + c * c + c);
    if (c.is_zero()) throw Error(ErrorKind::ZeroShiftUnit, "slot shift by zero");
    const RatFunc c2 = c * c;
    const RatFunc four_inv = RatFunc::constant(f, f->inv(f->from_int(4)));
    return PfisterForm(q.a(), c2 * q.b() + (c2 - RatFunc::one(f)) * four_inv);
}

/// Two forms are isometric iff their ramification sets agree.
inline bool equivalent(const PfisterForm& q1, const PfisterForm& q2) {
    if (q1.field() != q2.field()) throw Error(ErrorKind::FieldMismatch, "forms over different fields");
    return delta(q1) == delta(q2);
}

/// Rewrites <<x, y>>^b as <<a1, a2>>^b with a1 a unit at every place of S (odd characteristic).
/// The result is verified by comparing ramification sets.
inline std::pair<RatFunc, RatFunc> bilinear_unit_rewrite(const RatFunc& x, const RatFunc& y, const PlaceSet& s_in) {
    const Field& f = x.field();
    if (f->p() == 2) throw Error(ErrorKind::CharTwoUnsupported, "bilinear rewriting is implemented in odd characteristic");
    if (x.is_zero() || y.is_zero()) throw Error(ErrorKind::ZeroElement, "bilinear slots must be nonzero");
    const PlaceSet s = make_place_set(s_in);
    if (s.empty()) return {x, y};
    const RamSet target = hilbert_ramification(x, y);

    // Square scaling onto the valuation patterns (0,1), (1,0), (1,1), (2,2).
    std::vector<ValuationConstraint> ux, uy, us;
    for (const auto& v : s) {
        const int vx = valuation(x, v), vy = valuation(y, v);
        const int px = ((vx % 2) + 2) % 2, py = ((vy % 2) + 2) % 2;
        const int tx = (px == 0 && py == 0) ? 2 : px;
        const int ty = (px == 0 && py == 0) ? 2 : py;
        ux.push_back({v, (tx - vx) / 2, {}});
        uy.push_back({v, (ty - vy) / 2, {}});
        us.push_back({v, (tx == 2) ? 2 : (tx == 1 && ty == 1 ? 1 : 0), {}});
    }
    const RatFunc sx = weak_approx(f, ux), sy = weak_approx(f, uy);
    const RatFunc x1 = x * sx * sx;
    RatFunc y1 = y * sy * sy;
    if (x1 + y1 == RatFunc::zero(f)) {
        const Place extra = least_finite_place(f, [&](const Place& v) { return !contains(s, v); });
        std::vector<ValuationConstraint> pc;
        for (const auto& v : s) pc.push_back({v, 0, {}});
        pc.push_back({extra, 1, {}});
        const RatFunc e = weak_approx(f, pc);
        y1 = y1 * e * e;
    }

    // s with the valuations above; try unit rescalings until ts + rs != tr.
    const RatFunc s0 = weak_approx(f, us);
    for (std::uint64_t k = 1; k < f->size(); ++k) {
        const RatFunc sv = s0 * RatFunc::constant(f, k);
        const RatFunc t = x1 / sv, r = y1 / sv;
        const RatFunc a1 = t * sv + r * sv - t * r;
        if (a1.is_zero()) continue;
        const RatFunc a2 = t * r * (t * sv + r * sv);
        bool units = true;
        for (const auto& v : s) units = units && valuation(a1, v) == 0;
        if (!units) continue;
        if (hilbert_ramification(a1, a2) == target) return {a1, a2};
    }
    throw Error(ErrorKind::SearchExhausted, "bilinear rewrite found no admissible (r, s, t)");
}

/// A form isometric to q with b and 1+4b units on S; rebuilt from delta(q) when q itself fails.
inline PfisterForm normalize_at(const PfisterForm& q, const PlaceSet& s, const RealizeOptions& opt = {}) {
    if (detail::units_on(q, s)) return q;
    PfisterForm out = realize(q.field(), delta(q), s, opt);
    if (delta(out) != delta(q) || !detail::units_on(out, s))
        throw Error(ErrorKind::SearchExhausted, "normalization failed verification");
    return out;
}

}  // namespace fqt

#endif
