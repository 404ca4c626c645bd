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
 * @file function_field.hpp
 * @brief The rational function field F_q(T): elements, places, valuations,
 * residues, supports and approximation.
 *
 * Residues are handled in two forms. Internally a residue is a polynomial
 * reduced modulo P (the modulus is T at infinity, where residues are
 * constants). residue_at() converts to an FFElem of F_{p^{m deg v}} by
 * evaluating at the least root of P.
 */

#ifndef FQT_FUNCTION_FIELD_HPP
#define FQT_FUNCTION_FIELD_HPP

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace fqt {

/// Reduced fraction num/den with den monic.
class RatFunc {
   public:
    RatFunc() = default;
    explicit RatFunc(const Field& f) : num_(f), den_(Poly::one(f)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}  // NOLINT: implicit by design
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc zero(const Field& f) { return RatFunc(f); }
    static RatFunc one(const Field& f) { return RatFunc(Poly::one(f)); }
    static RatFunc constant(const Field& f, std::uint64_t c) { return RatFunc(Poly::constant(f, c)); }
    static RatFunc t(const Field& f) { return RatFunc(Poly::t(f)); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const Field& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_poly() const noexcept { return den_.is_one(); }
    bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFunc inverse() const {
        if (is_zero()) throw Error(ErrorKind::ZeroElement, "inverse of zero in F_q(T)");
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

   private:
    RatFunc(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero denominator");
        const Field f = num_.field() ? num_.field() : den_.field();
        if (num_.is_zero()) {
            num_ = Poly::zero(f);
            den_ = Poly::one(f);
            return;
        }
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const std::uint64_t inv = f->inv(den_.lc());
        if (den_.lc() != 1) {
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_, den_;
};

inline RatFunc pow(const RatFunc& x, int e) {
    if (e < 0) return pow(x.inverse(), -e);
    RatFunc r = RatFunc::one(x.field());
    RatFunc b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const RatFunc& x) {
    auto wrap = [](const Poly& p) {
        std::string s = to_string(p);
        const bool single = p.coeffs().size() - static_cast<std::size_t>(std::count(p.coeffs().begin(), p.coeffs().end(), 0)) <= 1 &&
                            s.find('+') == std::string::npos;
        return single ? s : "(" + s + ")";
    };
    if (x.is_poly()) return to_string(x.num());
    return wrap(x.num()) + "/" + wrap(x.den());
}

/// A place of F_q(T): a monic irreducible polynomial, or infinity.
class Place {
   public:
    Place() = default;

    static Place infinity(const Field& f) {
        Place v;
        v.poly_ = Poly::t(f);
        v.infinite_ = true;
        return v;
    }
    /// Throws InvalidArgument unless P is monic irreducible.
    static Place finite(const Poly& p) {
        if (p.degree() < 1 || p.lc() != 1 || !is_irreducible(p))
            throw Error(ErrorKind::InvalidArgument, "place polynomial must be monic irreducible: " + to_string(p));
        Place v;
        v.poly_ = p;
        return v;
    }
    static Place finite_unchecked(Poly p) {
        Place v;
        v.poly_ = std::move(p);
        return v;
    }

    bool is_infinity() const noexcept { return infinite_; }
    /// The irreducible for finite places; T for infinity (the modulus of its residue ring).
    const Poly& poly() const noexcept { return poly_; }
    const Field& field() const noexcept { return poly_.field(); }
    int degree() const noexcept { return infinite_ ? 1 : poly_.degree(); }
    /// P for finite places, 1/T at infinity.
    RatFunc uniformizer() const {
        return infinite_ ? RatFunc(Poly::one(field()), Poly::t(field())) : RatFunc(poly_);
    }

    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.poly_ == b.poly_);
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    /// Finite places by (degree, coefficients), infinity last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.infinite_ != b.infinite_) return b.infinite_;
        if (a.infinite_) return false;
        return a.poly_ < b.poly_;
    }

   private:
    Poly poly_;
    bool infinite_ = false;
};

inline std::string to_string(const Place& v) { return v.is_infinity() ? "inf" : "(" + to_string(v.poly()) + ")"; }

using PlaceSet = std::vector<Place>;  // kept sorted and duplicate free

inline PlaceSet make_place_set(PlaceSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}
inline bool contains(const PlaceSet& s, const Place& v) { return std::binary_search(s.begin(), s.end(), v); }

inline std::string to_string(const PlaceSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + to_string(s[i]);
    return out + "}";
}

constexpr int kInfiniteValuation = INT_MAX;

inline int valuation(const RatFunc& x, const Place& v) {
    if (x.is_zero()) return kInfiniteValuation;
    if (v.is_infinity()) return x.den().degree() - x.num().degree();
    return multiplicity(x.num(), v.poly()) - multiplicity(x.den(), v.poly());
}

// ---- residue rings O_v / m_v, represented as polynomials modulo poly() ----

namespace detail {

inline Poly strip(Poly f, const Poly& p) {
    while (true) {
        auto [q, r] = Poly::divmod(f, p);
        if (!r.is_zero()) return f;
        f = std::move(q);
    }
}

}  // namespace detail

/// Residue of x * pi_v^{-v(x)} (x != 0), reduced modulo v.poly().
inline Poly unit_residue(const RatFunc& x, const Place& v) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "unit residue of zero");
    const Field& f = x.field();
    if (v.is_infinity()) return Poly::constant(f, f->mul(x.num().lc(), f->inv(x.den().lc())));
    const Poly& p = v.poly();
    const Poly n = detail::strip(x.num(), p) % p;
    const Poly d = detail::strip(x.den(), p) % p;
    return mulmod(n, invmod(d, p), p);
}

/// Residue of an integral x (zero when v(x) > 0); throws NegativeValuation.
inline Poly residue_poly(const RatFunc& x, const Place& v) {
    const int k = valuation(x, v);
    if (k < 0) throw Error(ErrorKind::NegativeValuation, "element has a pole at " + to_string(v));
    if (k > 0) return Poly::zero(x.field());
    return unit_residue(x, v);
}

/// Degree over F_p of the residue field of v.
inline std::uint64_t residue_prime_degree(const Place& v) {
    return std::uint64_t(v.field()->m()) * static_cast<std::uint64_t>(v.degree());
}

/// Quadratic residuosity in the residue field (odd characteristic; nonzero r).
inline bool residue_is_square(const Poly& r, const Place& v) {
    if (r.is_zero() || v.field()->p() == 2) return true;
    return half_norm_power(r, static_cast<std::uint64_t>(v.degree()), v.poly()).is_one();
}

/// Absolute trace of a residue, as an index in F_p.
inline std::uint64_t residue_trace(const Poly& r, const Place& v) {
    const Poly t = additive_trace(r, residue_prime_degree(v), v.poly());
    return t.is_zero() ? 0 : t.coeff(0);
}

/// Square root of a residue in characteristic 2.
inline Poly residue_sqrt_char2(const Poly& r, const Place& v) {
    Poly s = r % v.poly();
    for (std::uint64_t i = 1; i < residue_prime_degree(v); ++i) s = mulmod(s, s, v.poly());
    return s;
}

namespace detail {

struct RootKey {
    const FieldDesc* field;
    std::vector<std::uint64_t> poly;
    bool operator<(const RootKey& o) const { return field != o.field ? field < o.field : poly < o.poly; }
};

/// Least root of the finite place polynomial in F_{p^{m deg v}}.
inline FFElem place_root(const Place& v) {
    static std::mutex mutex;
    static std::map<RootKey, std::uint64_t> cache;
    const Field& base = v.field();
    const Field big = make_field(base->p(), base->m() * static_cast<std::uint32_t>(v.degree()));
    const RootKey key{base.get(), v.poly().coeffs()};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return FFElem(big, it->second);
    }
    std::vector<FFElem> coeffs;
    for (auto c : v.poly().coeffs()) coeffs.push_back(embed(FFElem(base, c), big));
    for (std::uint64_t x = 0; x < big->size(); ++x) {
        FFElem acc = FFElem::zero(big);
        const FFElem xe(big, x);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * xe + coeffs[i];
        if (acc == FFElem::zero(big)) {
            std::lock_guard<std::mutex> lock(mutex);
            cache[key] = x;
            return xe;
        }
    }
    throw Error(ErrorKind::FieldMismatch, "place polynomial has no root in its residue field");
}

}  // namespace detail

/// The residue field F_{q^deg v} as a FieldDesc over F_p.
inline Field residue_field(const Place& v) {
    return make_field(v.field()->p(), v.field()->m() * static_cast<std::uint32_t>(v.degree()));
}

/// Converts an internal residue polynomial into an element of residue_field(v).
inline FFElem residue_to_elem(const Poly& r, const Place& v) {
    const Field big = residue_field(v);
    const Field& base = v.field();
    if (v.is_infinity()) return embed(FFElem(base, r.coeff(0)), big);
    const FFElem root = detail::place_root(v);
    FFElem acc = FFElem::zero(big);
    for (int i = r.degree(); i >= 0; --i) acc = acc * root + embed(FFElem(base, r.coeff(i)), big);
    return acc;
}

/// Image of x in O_v/m_v; throws NegativeValuation.
inline FFElem residue_at(const RatFunc& x, const Place& v) { return residue_to_elem(residue_poly(x, v), v); }

// ---- places ----

/// Monic irreducible polynomials of exact degree d, in canonical order (cached).
inline const std::vector<Poly>& irreducibles_of_degree(const Field& f, int d) {
    static std::mutex mutex;
    static std::map<std::pair<const FieldDesc*, int>, std::vector<Poly>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({f.get(), d});
    if (it != cache.end()) return it->second;
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f->size();
    for (std::uint64_t tail = 0; tail < count; ++tail) {
        Poly cand = Poly::from_index(f, tail) + Poly::monomial(f, 1, d);
        if (is_irreducible(cand)) out.push_back(std::move(cand));
    }
    return cache.emplace(std::make_pair(f.get(), d), std::move(out)).first->second;
}

/// All finite places of degree <= d followed by infinity.
inline std::vector<Place> places_up_to(const Field& f, int d) {
    std::vector<Place> out;
    for (int k = 1; k <= d; ++k)
        for (const auto& p : irreducibles_of_degree(f, k)) out.push_back(Place::finite_unchecked(p));
    out.push_back(Place::infinity(f));
    return out;
}

/// Least finite place (canonical order) accepted by the predicate.
template <class Pred>
Place least_finite_place(const Field& f, Pred pred, int max_degree = 64) {
    for (int k = 1; k <= max_degree; ++k)
        for (const auto& p : irreducibles_of_degree(f, k)) {
            Place v = Place::finite_unchecked(p);
            if (pred(v)) return v;
        }
    throw Error(ErrorKind::SearchExhausted, "no finite place satisfies the requested condition");
}

/// Places with nonzero valuation and their valuations; checks the degree formula.
inline std::vector<std::pair<Place, int>> support(const RatFunc& x) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "support of zero");
    std::vector<std::pair<Place, int>> out;
    long long weighted = 0;
    auto add = [&](const Poly& p, int sign) {
        if (p.degree() < 1) return;
        for (const auto& [fac, mult] : factorize(p)) {
            out.emplace_back(Place::finite_unchecked(fac), sign * mult);
            weighted += static_cast<long long>(sign) * mult * fac.degree();
        }
    };
    add(x.num(), 1);
    add(x.den(), -1);
    const int vinf = x.den().degree() - x.num().degree();
    if (vinf != 0) out.emplace_back(Place::infinity(x.field()), vinf);
    weighted += vinf;
    if (weighted != 0) throw Error(ErrorKind::ReciprocityViolation, "principal divisor of nonzero degree");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// Odd(x): places where v(x) is odd.
inline PlaceSet odd_places(const RatFunc& x) {
    PlaceSet s;
    for (const auto& [v, k] : support(x))
        if (k % 2 != 0) s.push_back(v);
    return s;
}

/// Neg(x): places where v(x) < 0.
inline PlaceSet neg_places(const RatFunc& x) {
    PlaceSet s;
    for (const auto& [v, k] : support(x))
        if (k < 0) s.push_back(v);
    return s;
}

// ---- approximation ----

/// Target for approximate(): v(z - target) >= precision at place.
struct ApproxTarget {
    Place place;
    RatFunc target;
    int precision;
};

namespace detail {

/// x mod P^k for a P-integral x.
inline Poly reduce_integral(const RatFunc& x, const Poly& modulus) {
    if (modulus.degree() == 0) return Poly::zero(x.field());
    return mulmod(x.num() % modulus, invmod(x.den(), modulus), modulus);
}

inline Poly crt(const std::vector<std::pair<Poly, Poly>>& congruences, const Field& f) {
    Poly n = Poly::zero(f);
    Poly m = Poly::one(f);
    for (const auto& [r, mod] : congruences) {
        if (mod.degree() == 0) continue;
        // n + m*s = r (mod mod)
        const Poly s = mulmod((r - n) % mod, invmod(m, mod), mod);
        n = n + m * s;
        m = m * mod;
        n = n % m;
    }
    return n;
}

}  // namespace detail

/// Returns z with v(z - t) >= n for every target; places must be distinct.
inline RatFunc approximate(const Field& f, const std::vector<ApproxTarget>& targets) {
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i].place == targets[j].place)
                throw Error(ErrorKind::InconsistentConstraints, "repeated place " + to_string(targets[i].place));

    std::vector<Place> finite;
    Poly q = Poly::one(f);
    const ApproxTarget* at_inf = nullptr;
    for (const auto& t : targets) {
        if (t.place.is_infinity()) {
            at_inf = &t;
            continue;
        }
        finite.push_back(t.place);
        if (!t.target.is_zero()) {
            const int v = valuation(t.target, t.place);
            if (v < 0) q = q * pow(t.place.poly(), static_cast<std::uint64_t>(-v));
        }
    }
    const Place a = least_finite_place(f, [&](const Place& v) {
        return std::find(finite.begin(), finite.end(), v) == finite.end();
    });

    int e = 0;
    Poly modulus_total = Poly::one(f);
    std::vector<std::pair<Poly, int>> moduli;  // (P^k, k) per finite target
    for (const auto& t : targets) {
        if (t.place.is_infinity()) continue;
        const int m = t.target.is_zero() ? 0 : std::max(0, -valuation(t.target, t.place));
        const int k = std::max(0, t.precision + m);
        moduli.emplace_back(pow(t.place.poly(), static_cast<std::uint64_t>(k)), k);
        modulus_total = modulus_total * moduli.back().first;
    }
    if (at_inf) {
        const int need = at_inf->precision + std::max(modulus_total.degree() - 1, 0) - q.degree();
        if (need > 0) e = (need + a.degree() - 1) / a.degree();
    }
    const Poly denom = pow(a.poly(), static_cast<std::uint64_t>(e)) * q;

    std::vector<std::pair<Poly, Poly>> congruences;
    std::size_t idx = 0;
    for (const auto& t : targets) {
        if (t.place.is_infinity()) continue;
        const Poly& mod = moduli[idx++].first;
        congruences.emplace_back(detail::reduce_integral(t.target * RatFunc(denom), mod), mod);
    }
    Poly n = detail::crt(congruences, f);

    if (at_inf) {
        const int bound = denom.degree() - at_inf->precision;
        const RatFunc w = at_inf->target * RatFunc(denom);
        const Poly wpoly = w.num() / w.den();
        std::vector<std::uint64_t> high(wpoly.coeffs().size(), 0);
        for (int i = std::max(bound + 1, 0); i <= wpoly.degree(); ++i) high[static_cast<std::size_t>(i)] = wpoly.coeff(i);
        const Poly lt(f, std::move(high));
        n = n + modulus_total * ((lt - n) / modulus_total);
    }
    RatFunc z(n, denom);
    for (const auto& t : targets) {
        const RatFunc diff = z - t.target;
        if (!diff.is_zero() && valuation(diff, t.place) < t.precision)
            throw Error(ErrorKind::SearchExhausted, "approximation failed to meet precision at " + to_string(t.place));
    }
    return z;
}

/// Constraint for weak_approx: exact valuation and optional residue of x * pi_v^{-valuation}.
struct ValuationConstraint {
    Place place;
    int valuation;
    std::optional<RatFunc> residue;  // any representative that is a unit at place
};

inline bool satisfies(const RatFunc& x, const ValuationConstraint& c) {
    if (x.is_zero() || valuation(x, c.place) != c.valuation) return false;
    if (!c.residue) return true;
    return unit_residue(x, c.place) == unit_residue(*c.residue, c.place);
}

/// Element with prescribed valuations (and residues) at distinct places; always re-verified.
inline RatFunc weak_approx(const Field& f, const std::vector<ValuationConstraint>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i].place == cs[j].place)
                throw Error(ErrorKind::InconsistentConstraints, "repeated place " + to_string(cs[i].place));
        if (cs[i].residue && (cs[i].residue->is_zero() || valuation(*cs[i].residue, cs[i].place) != 0))
            throw Error(ErrorKind::InvalidArgument, "residue target must be a unit at " + to_string(cs[i].place));
    }
    auto verified = [&](const RatFunc& x) {
        for (const auto& c : cs)
            if (!satisfies(x, c)) return false;
        return true;
    };
    auto constrained = [&](const Place& v) {
        return std::any_of(cs.begin(), cs.end(), [&](const auto& c) { return c.place == v; });
    };

    const bool any_residue = std::any_of(cs.begin(), cs.end(), [](const auto& c) { return c.residue.has_value(); });
    if (!any_residue) {
        RatFunc x = RatFunc::one(f);
        const ValuationConstraint* inf = nullptr;
        for (const auto& c : cs) {
            if (c.place.is_infinity()) {
                inf = &c;
                continue;
            }
            x = x * pow(RatFunc(c.place.poly()), c.valuation);
        }
        bool ok = true;
        if (inf) {
            const int s = inf->valuation - valuation(x, inf->place);
            // small deficits use one irreducible of matching degree; larger ones go through approximate()
            if (s != 0 && std::abs(s) > 3) ok = false;
            if (s != 0 && ok) {
                ok = false;
                for (const auto& p : irreducibles_of_degree(f, std::abs(s))) {
                    const Place cand = Place::finite_unchecked(p);
                    if (constrained(cand)) continue;
                    x = s > 0 ? x / RatFunc(p) : x * RatFunc(p);
                    ok = true;
                    break;
                }
            }
        }
        if (ok && verified(x)) return x;
    }

    std::vector<ApproxTarget> targets;
    for (const auto& c : cs) {
        const RatFunc r = c.residue ? *c.residue : RatFunc::one(f);
        targets.push_back({c.place, r * pow(c.place.uniformizer(), c.valuation), c.valuation + 1});
    }
    RatFunc x = approximate(f, targets);
    if (!verified(x)) throw Error(ErrorKind::SearchExhausted, "weak approximation failed verification");
    return x;
}

}  // namespace fqt

#endif
