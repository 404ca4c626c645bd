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
 * @file definability.hpp
 * @brief Membership procedures for the sets J_c(q), H_c(q), the union of
 * maximal ideals outside S, and the ring of S-integers, together with
 * witness-producing checks of the three set identities relating them to
 * squares and units of R = intersection of O_v over v in S.
 *
 * Every procedure decides membership semantically. Witnesses are always
 * re-verified by direct valuation checks.
 */

#ifndef FQT_DEFINABILITY_HPP
#define FQT_DEFINABILITY_HPP

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pfister.hpp"

namespace fqt {

// ---- J and H ----

/// x in J_c(q): v(x) >= 1 for every v in delta(q) with v(c) odd.
inline bool j_member(const RatFunc& x, const RatFunc& c, const RamSet& dq) {
    if (c.is_zero()) throw Error(ErrorKind::ZeroElement, "J_c needs c != 0");
    for (const auto& v : dq)
        if (valuation(c, v) % 2 != 0 && valuation(x, v) < 1) return false;
    return true;
}
inline bool j_member(const RatFunc& x, const RatFunc& c, const PfisterForm& q) { return j_member(x, c, delta(q)); }

/// x in H_c(q): v(x) >= -v(c) for every v in delta(q) with v(c) < 0.
inline bool h_member(const RatFunc& x, const RatFunc& c, const RamSet& dq) {
    if (c.is_zero()) throw Error(ErrorKind::ZeroElement, "H_c needs c != 0");
    for (const auto& v : dq) {
        const int vc = valuation(c, v);
        if (vc < 0 && valuation(x, v) < -vc) return false;
    }
    return true;
}
inline bool h_member(const RatFunc& x, const RatFunc& c, const PfisterForm& q) { return h_member(x, c, delta(q)); }

// ---- helpers on R = intersection of O_v, v in S ----

namespace detail {

inline bool in_ring(const RatFunc& x, const PlaceSet& s) {
    if (x.is_zero()) return true;
    for (const auto& v : s)
        if (valuation(x, v) < 0) return false;
    return true;
}

inline bool is_ring_unit(const RatFunc& x, const PlaceSet& s) {
    if (x.is_zero()) return false;
    for (const auto& v : s)
        if (valuation(x, v) != 0) return false;
    return true;
}

/// x times an element fixing the valuations on S to the requested values.
inline RatFunc with_valuations(const RatFunc& x, const PlaceSet& s, const std::vector<int>& target) {
    std::vector<ValuationConstraint> cs;
    for (std::size_t i = 0; i < s.size(); ++i) cs.push_back({s[i], target[i] - valuation(x, s[i]), {}});
    return x * weak_approx(x.field(), cs);
}

inline Poly sample_poly(std::mt19937_64& rng, const Field& f, int max_deg) {
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = rng() % f->size();
    if (c.back() == 0) c.back() = 1;
    return Poly(f, std::move(c));
}

}  // namespace detail

/// Nonzero sample with numerator and denominator of degree <= max_deg.
inline RatFunc sample_element(std::mt19937_64& rng, const Field& f, int max_deg) {
    return RatFunc(detail::sample_poly(rng, f, max_deg), detail::sample_poly(rng, f, max_deg));
}

// ---- the three identities ----

struct JacobSample {
    std::string direction;  // "soundness" or "completeness"
    std::string x;
    bool ok = false;
    std::string witness;
};

struct JacobReport {
    int identity = 0;
    PlaceSet s;
    std::optional<RatFunc> c;
    std::uint64_t seed = 0;
    std::vector<JacobSample> samples;
    int failures() const {
        int n = 0;
        for (const auto& x : samples) n += x.ok ? 0 : 1;
        return n;
    }
};

/// Right-hand sides of the identities, decided by valuations.
inline bool jacob_rhs(int identity, const RatFunc& x, const PlaceSet& s, const RatFunc* c) {
    if (identity == 1) {
        if (x.is_zero()) return false;
        for (const auto& v : s)
            if (valuation(x, v) % 2 != 0) return false;
        return true;
    }
    if (identity == 2) {
        for (const auto& v : s)
            if (valuation(*c, v) % 2 != 0 && valuation(x, v) < 1) return false;
        return true;
    }
    for (const auto& v : s) {
        const int vc = valuation(*c, v);
        if (vc < 0 && valuation(x, v) < -vc) return false;
    }
    return true;
}

namespace detail {

struct Witness {
    RatFunc x;
    std::string text;
    bool verified = false;
};

// identity 1: x = y^2 u with u in R^x
inline Witness jacob1_complete(const RatFunc& x, const PlaceSet& s) {
    std::vector<ValuationConstraint> cs;
    for (const auto& v : s) cs.push_back({v, valuation(x, v) / 2, {}});
    const RatFunc y = weak_approx(x.field(), cs);
    const RatFunc u = x / (y * y);
    return {x, "y=" + to_string(y) + "; u=" + to_string(u), is_ring_unit(u, s) && y * y * u == x};
}

inline bool jacob2_lhs_parts(const RatFunc& t, const RatFunc& r, const RatFunc& y, const RatFunc& c, const PlaceSet& s) {
    if (t != c * y * y) return false;
    const RatFunc one_minus = RatFunc::one(t.field()) - t;
    if (one_minus.is_zero()) return false;
    for (const auto& v : s)
        if (valuation(one_minus, v) % 2 != 0) return false;
    return in_ring(r, s);
}

// identity 2: x = t r with t = c y^2, 1 - t in F^2 R^x, r in R
inline Witness jacob2_complete(const RatFunc& x, const PlaceSet& s, const RatFunc& c) {
    const Field& f = x.field();
    if (x.is_zero()) return {x, "t=c; r=0", true};
    std::vector<ValuationConstraint> cs;
    for (const auto& v : s) {
        const int vc = valuation(c, v);
        if (vc % 2 != 0) {
            cs.push_back({v, (1 - vc) / 2, {}});
            continue;
        }
        int e = std::min(0, valuation(x, v));
        if (e % 2 != 0) --e;
        std::optional<RatFunc> res;
        if (e == 0) {
            // residue of t = c y^2 must differ from 1
            const Poly c0 = unit_residue(c, v);
            const std::uint64_t count = detail::ipow(f->size(), static_cast<std::uint64_t>(v.degree()));
            for (std::uint64_t idx = 1; idx < count && !res; ++idx) {
                const Poly yr = Poly::from_index(f, idx);
                const Poly tr = mulmod(c0, mulmod(yr, yr, v.poly()), v.poly());
                if (!(tr == Poly::one(f))) res = RatFunc(yr);
            }
            if (!res) e = -2;
        }
        cs.push_back({v, (e - vc) / 2, res});
    }
    const RatFunc y = weak_approx(f, cs);
    const RatFunc t = c * y * y;
    const RatFunc r = x / t;
    return {x, "t=" + to_string(t) + "; r=" + to_string(r), jacob2_lhs_parts(t, r, y, c, s) && t * r == x};
}

// identity 3: 1/x = r/c + c/r' with r, r' in R, r' != 0
inline Witness jacob3_complete(const RatFunc& x, const PlaceSet& s, const RatFunc& c) {
    const Field& f = x.field();
    if (x.is_zero()) return {x, "zero", true};
    std::vector<ApproxTarget> ts;
    const RatFunc sigma = (c * x).inverse();
    for (const auto& v : s) {
        const int alpha = valuation(c / x, v);
        if (alpha < 0)
            ts.push_back({v, sigma, -2 * valuation(c, v)});
        else
            ts.push_back({v, RatFunc::one(f), 1});
    }
    const RatFunc sv = approximate(f, ts);
    if (sv.is_zero()) return {x, "degenerate s", false};
    const RatFunc rp = sv.inverse();
    const RatFunc r = c / x - c * c * sv;
    const bool ok = in_ring(r, s) && in_ring(rp, s) && x.inverse() == r / c + c / rp;
    return {x, "r=" + to_string(r) + "; r'=" + to_string(rp), ok};
}

}  // namespace detail

/// Checks both inclusions of identity 1, 2 or 3 on seeded samples; failures are recorded, not thrown.
inline JacobReport jacoblem_verify(const Field& f, const PlaceSet& s_in, int identity, std::optional<RatFunc> c,
                                   int n_samples, std::uint64_t seed, int degree_bound = 3) {
    const PlaceSet s = make_place_set(s_in);
    if (s.empty()) throw Error(ErrorKind::InvalidArgument, "jacoblem needs a nonempty S");
    if (identity < 1 || identity > 3) throw Error(ErrorKind::InvalidArgument, "identity must be 1, 2 or 3");
    if (identity > 1 && (!c || c->is_zero())) throw Error(ErrorKind::InvalidArgument, "identities 2 and 3 need c != 0");
    JacobReport rep{identity, s, c, seed, {}};
    std::mt19937_64 rng(seed);
    const RatFunc* cp = c ? &*c : nullptr;
    auto draw = [&](int i) { return sample_element(rng, f, i % 5 == 4 ? degree_bound + 3 : degree_bound); };
    auto into_ring = [&](const RatFunc& z) {
        std::vector<int> tv;
        for (const auto& v : s) tv.push_back(std::max(0, valuation(z, v)) + static_cast<int>(rng() % 2));
        return detail::with_valuations(z, s, tv);
    };
    auto unit = [&](const RatFunc& z) { return detail::with_valuations(z, s, std::vector<int>(s.size(), 0)); };

    // soundness: left-hand elements built from explicit parts land in the right-hand set
    for (int i = 0; i < n_samples; ++i) {
        JacobSample smp{"soundness", "", false, ""};
        RatFunc x;
        if (identity == 1) {
            const RatFunc y = draw(i), u = unit(draw(i));
            x = y * y * u;
            smp.witness = "y=" + to_string(y) + "; u=" + to_string(u);
        } else if (identity == 2) {
            // t = c y^2 with v(1-t) even on S: choose v(t) = 1 or 3 on Odd(c), even elsewhere
            RatFunc t, y;
            bool found = false;
            for (int attempt = 0; attempt < 64 && !found; ++attempt) {
                std::vector<int> tv;
                for (const auto& v : s) {
                    const int vc = valuation(*c, v);
                    const int want = vc % 2 != 0 ? 1 + 2 * static_cast<int>(rng() % 2) : 2 * (static_cast<int>(rng() % 3) - 1);
                    tv.push_back((want - vc) / 2);
                }
                y = detail::with_valuations(draw(i), s, tv);
                t = *c * y * y;
                found = detail::jacob2_lhs_parts(t, RatFunc::one(f), y, *c, s);
            }
            if (!found) {
                smp.x = "none";
                smp.witness = "generator exhausted";
                rep.samples.push_back(smp);
                continue;
            }
            const RatFunc r = (i % 7 == 0) ? RatFunc::zero(f) : into_ring(draw(i));
            x = t * r;
            smp.witness = "t=" + to_string(t) + "; r=" + to_string(r);
        } else {
            const RatFunc r = (i % 6 == 0) ? RatFunc::zero(f) : into_ring(draw(i));
            const RatFunc rp = into_ring(draw(i));
            const RatFunc z = r / *c + *c / rp;
            x = z.is_zero() ? RatFunc::zero(f) : z.inverse();
            smp.witness = "r=" + to_string(r) + "; r'=" + to_string(rp);
        }
        smp.x = to_string(x);
        smp.ok = jacob_rhs(identity, x, s, cp) || (identity == 3 && x.is_zero());
        rep.samples.push_back(smp);
    }

    // completeness: right-hand elements receive explicit witnesses
    for (int i = 0; i < n_samples; ++i) {
        RatFunc x = draw(i);
        std::vector<int> tv;
        for (const auto& v : s) {
            int k = valuation(x, v);
            if (identity == 1 && k % 2 != 0) ++k;
            if (identity == 2 && valuation(*c, v) % 2 != 0 && k < 1) k = 1 + static_cast<int>(rng() % 2);
            if (identity == 3) {
                const int vc = valuation(*c, v);
                if (vc < 0 && k < -vc) k = -vc + static_cast<int>(rng() % 2);
            }
            tv.push_back(k);
        }
        x = detail::with_valuations(x, s, tv);
        JacobSample smp{"completeness", to_string(x), false, ""};
        if (!jacob_rhs(identity, x, s, cp)) {
            smp.witness = "sampler left the right-hand set";
            rep.samples.push_back(smp);
            continue;
        }
        const detail::Witness w = identity == 1   ? detail::jacob1_complete(x, s)
                                  : identity == 2 ? detail::jacob2_complete(x, s, *c)
                                                  : detail::jacob3_complete(x, s, *c);
        smp.ok = w.verified;
        smp.witness = w.text;
        rep.samples.push_back(smp);
    }
    return rep;
}

// ---- Pfister strata ----

/// A pair (a, b) parametrizing <<a, b]].
struct StratumTuple {
    RatFunc a;
    RatFunc b;
};

/// (a, b) lies in the stratum: b, 1+4b units on S and the residue is nontrivial at every v in S.
inline bool stratum_member(const StratumTuple& t, const PlaceSet& s) {
    const Field& f = t.a.field();
    if (t.a.is_zero() || t.b.is_zero()) return false;
    if (f->p() != 2 && (RatFunc::one(f) + RatFunc::constant(f, f->from_int(4)) * t.b).is_zero()) return false;
    const PfisterForm q(t.a, t.b);
    for (const auto& v : s) {
        if (valuation(q.b(), v) != 0 || valuation(q.c(), v) != 0) return false;
        if (residue_class(q, v).bit != 1) return false;
    }
    return true;
}

/// Stratum element with ramification exactly S + {w} and b a unit at w.
inline StratumTuple stratum_witness(const Place& w, const PlaceSet& s_in, const RealizeOptions& opt = {}) {
    const PlaceSet s = make_place_set(s_in);
    if (s.size() % 2 == 0) throw Error(ErrorKind::InvalidArgument, "stratum witnesses need |S| odd");
    if (contains(s, w)) throw Error(ErrorKind::InvalidArgument, "w must lie outside S");
    PlaceSet sw = s;
    sw.push_back(w);
    sw = make_place_set(std::move(sw));
    const PfisterForm q = realize(w.field(), sw, sw, opt);
    StratumTuple t{q.a(), q.b()};
    if (!stratum_member(t, s) || valuation(q.b(), w) < 0 || delta(q) != sw)
        throw Error(ErrorKind::SearchExhausted, "stratum witness failed verification");
    return t;
}

/// Decision procedures for the union of maximal ideals outside S (|S| odd) built from
/// a uniformizer pi and the auxiliary a0; witnesses are cached per place.
class UnionOracle {
   public:
    UnionOracle(const Field& f, const PlaceSet& s, RealizeOptions opt = {}, int pool_size = 3)
        : field_(f), s_(make_place_set(s)), opt_(opt) {
        if (s_.size() % 2 == 0) throw Error(ErrorKind::InvalidArgument, "the stratum method needs |S| odd");
        std::vector<ValuationConstraint> cs;
        for (const auto& v : s_) cs.push_back({v, 1, {}});
        pi_ = weak_approx(f, cs);
        std::vector<ValuationConstraint> c0;
        for (const auto& v : odd_places(pi_)) c0.push_back({v, contains(s_, v) ? 0 : 1, {}});
        for (const auto& v : s_)
            if (!contains(odd_places(pi_), v)) c0.push_back({v, 0, {}});
        a0_ = weak_approx(f, c0);
        for (int k = 1, found = 0; found < pool_size && k <= 8; ++k)
            for (const auto& p : irreducibles_of_degree(f, k)) {
                if (found >= pool_size) break;
                const Place w = Place::finite_unchecked(p);
                if (contains(s_, w)) continue;
                pool_.push_back(witness(w));
                ++found;
            }
    }

    const RatFunc& pi() const noexcept { return pi_; }
    const RatFunc& a0() const noexcept { return a0_; }
    const PlaceSet& s() const noexcept { return s_; }

    /// x in (J_{a0} ∩ J_{a1} ∩ J_{1+4b} ∩ H_b)(<<a1 pi, b]]) for the tuple (a1 pi, b).
    bool tuple_accepts(const RatFunc& x, const StratumTuple& t) const {
        const PfisterForm q(t.a, t.b);
        const RamSet dq = delta(q);
        const RatFunc a1 = t.a / pi_;
        return j_member(x, a0_, dq) && j_member(x, a1, dq) && j_member(x, q.c(), dq) && h_member(x, t.b, dq);
    }

    /// Stratum decision: a witness for some w outside S, or rejection by the witness pool.
    bool member(const RatFunc& x) {
        if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "union membership needs x != 0");
        for (const auto& [w, k] : support(x)) {
            if (k <= 0 || contains(s_, w)) continue;
            if (tuple_accepts(x, witness(w))) return true;
            throw Error(ErrorKind::SearchExhausted, "stratum witness at " + to_string(w) + " does not accept x");
        }
        for (const auto& t : pool_)
            if (tuple_accepts(x, t)) return true;
        return false;
    }

    const StratumTuple& witness(const Place& w) {
        auto it = cache_.find(w);
        if (it == cache_.end()) it = cache_.emplace(w, stratum_witness(w, s_, opt_)).first;
        return it->second;
    }

   private:
    Field field_;
    PlaceSet s_;
    RealizeOptions opt_;
    RatFunc pi_, a0_;
    std::vector<StratumTuple> pool_;
    std::map<Place, StratumTuple> cache_;
};

enum class UnionMethod { Direct, Stratum };
enum class SIntMethod { Direct, Universal };

/// x in the union of m_v over v outside S.
inline bool union_m_member(const RatFunc& x, const PlaceSet& s_in, UnionMethod method) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "union membership needs x != 0");
    const PlaceSet s = make_place_set(s_in);
    if (method == UnionMethod::Direct) {
        for (const auto& [v, k] : support(x))
            if (k > 0 && !contains(s, v)) return true;
        return false;
    }
    UnionOracle oracle(x.field(), s);
    return oracle.member(x);
}

/// Membership in the ring of S-integers, directly or through the union oracle.
class SIntegerOracle {
   public:
    SIntegerOracle(const Field& f, const PlaceSet& s, RealizeOptions opt = {}) : s_(make_place_set(s)) {
        PlaceSet sp = s_;
        if (s_.size() % 2 == 0) {
            v0_ = least_finite_place(f, [&](const Place& v) { return !contains(s_, v); });
            sp.push_back(*v0_);
        }
        union_ = std::make_unique<UnionOracle>(f, sp, opt);
    }

    const std::optional<Place>& extra_place() const noexcept { return v0_; }

    bool member(const RatFunc& x, SIntMethod method) {
        if (x.is_zero()) return true;
        if (method == SIntMethod::Direct) {
            for (const auto& [v, k] : support(x))
                if (k < 0 && !contains(s_, v)) return false;
            return true;
        }
        if (v0_ && valuation(x, *v0_) < 0) return false;
        return !union_->member(x.inverse());
    }

   private:
    PlaceSet s_;
    std::optional<Place> v0_;
    std::unique_ptr<UnionOracle> union_;
};

inline bool s_integers_member(const RatFunc& x, const PlaceSet& s, SIntMethod method) {
    if (x.is_zero()) return true;
    SIntegerOracle oracle(x.field(), s);
    return oracle.member(x, method);
}

}  // namespace fqt

#endif
