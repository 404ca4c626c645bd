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
 * @file poly.hpp
 * @brief Univariate polynomials in T over a finite field F_q, with factorization.
 *
 * Factorization is squarefree decomposition, then distinct-degree splitting,
 * then equal-degree splitting driven by an exhaustive walk over splitting
 * candidates in canonical order, so every run is deterministic.
 */

#ifndef FQT_POLY_HPP
#define FQT_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "base_field.hpp"

namespace fqt {

class Poly {
   public:
    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<std::uint64_t> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly constant(const Field& f, std::uint64_t x) { return Poly(f, {x}); }
    static Poly t(const Field& f) { return Poly(f, {0, 1}); }
    static Poly monomial(const Field& f, std::uint64_t coeff, int deg) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
        c.back() = coeff;
        return Poly(f, std::move(c));
    }
    /// Polynomial whose coefficients are the base-q digits of `index` (low degree first).
    static Poly from_index(const Field& f, std::uint64_t index) {
        std::vector<std::uint64_t> c;
        while (index > 0) {
            c.push_back(index % f->size());
            index /= f->size();
        }
        return Poly(f, std::move(c));
    }

    const Field& field() const noexcept { return field_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    std::uint64_t lc() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(int i) const noexcept {
        return i < 0 || i >= static_cast<int>(c_.size()) ? 0 : c_[static_cast<std::size_t>(i)];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const Field& f = pick(a, b);
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f->add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
        return Poly(f, std::move(r));
    }
    Poly operator-() const {
        std::vector<std::uint64_t> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->neg(c_[i]);
        return Poly(field_, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        const Field& f = pick(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(f);
        std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = f->add(r[i + j], f->mul(a.c_[i], b.c_[j]));
        }
        return Poly(f, std::move(r));
    }
    Poly scaled(std::uint64_t s) const {
        std::vector<std::uint64_t> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], s);
        return Poly(field_, std::move(r));
    }
    Poly monic() const { return is_zero() ? *this : scaled(field_->inv(lc())); }

    /// Euclidean division; throws ZeroPolynomial on a zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        const Field& f = pick(a, b);
        if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
        if (a.degree() < b.degree()) return {Poly(f), a};
        std::vector<std::uint64_t> r = a.c_;
        std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
        const std::uint64_t inv = f->inv(b.lc());
        const std::size_t db = static_cast<std::size_t>(b.degree());
        for (std::size_t k = q.size(); k-- > 0;) {
            const std::uint64_t top = r[k + db];
            if (top == 0) continue;
            const std::uint64_t factor = f->mul(top, inv);
            q[k] = factor;
            for (std::size_t i = 0; i <= db; ++i) r[k + i] = f->sub(r[k + i], f->mul(factor, b.c_[i]));
        }
        return {Poly(f, std::move(q)), Poly(f, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly derivative() const {
        std::vector<std::uint64_t> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(field_->mul(c_[i], field_->from_int(static_cast<long long>(i))));
        return Poly(field_, std::move(r));
    }

    std::uint64_t eval(std::uint64_t x) const {
        std::uint64_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && (a.c_.empty() || a.field_ == b.field_); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Canonical order: by degree, then coefficients from the top down.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static const Field& pick(const Poly& a, const Poly& b) {
        if (a.field_ && b.field_ && a.field_ != b.field_)
            throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
        return a.field_ ? a.field_ : b.field_;
    }

    Field field_;
    std::vector<std::uint64_t> c_;
};

inline Poly pow(Poly base, std::uint64_t e) {
    Poly r = Poly::one(base.field());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::one(m.field()) % m;
    base = base % m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Monic gcd (zero when both inputs vanish).
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    const Field& f = a.field() ? a.field() : b.field();
    Poly r0 = a, r1 = b, s0 = Poly::one(f), s1 = Poly::zero(f), t0 = Poly::zero(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = Poly::divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const std::uint64_t inv = f->inv(r0.lc());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Inverse of a modulo m; throws ZeroElement when gcd(a, m) != 1.
inline Poly invmod(const Poly& a, const Poly& m) {
    auto [g, s, t] = xgcd(a % m, m);
    if (!g.is_one()) throw Error(ErrorKind::ZeroElement, "element not invertible modulo polynomial");
    return s % m;
}

/// Frobenius power x^(q^k) mod m, computed by k successive q-th powers.
inline Poly frobenius_power(const Poly& x, std::uint64_t k, const Poly& m) {
    Poly r = x % m;
    const std::uint64_t q = m.field()->size();
    for (std::uint64_t i = 0; i < k; ++i) r = powmod(r, q, m);
    return r;
}

/// x^((q^k - 1)/2) mod m, written as (prod_{i<k} x^{q^i})^((q-1)/2) to keep exponents small. Odd q only.
inline Poly half_norm_power(const Poly& x, std::uint64_t k, const Poly& m) {
    const std::uint64_t q = m.field()->size();
    Poly acc = Poly::one(m.field()) % m;
    Poly cur = x % m;
    for (std::uint64_t i = 0; i < k; ++i) {
        acc = mulmod(acc, cur, m);
        cur = powmod(cur, q, m);
    }
    return powmod(acc, (q - 1) / 2, m);
}

/// sum_{i<n} x^(p^i) mod m with p the characteristic.
inline Poly additive_trace(const Poly& x, std::uint64_t n, const Poly& m) {
    const std::uint64_t p = m.field()->p();
    Poly acc = Poly::zero(m.field());
    Poly cur = x % m;
    for (std::uint64_t i = 0; i < n; ++i) {
        acc = acc + cur;
        cur = powmod(cur, p, m);
    }
    return acc % m;
}

/// Rabin irreducibility test over F_q.
inline bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly t = Poly::t(f.field());
    if (frobenius_power(t, static_cast<std::uint64_t>(n), f) != t % f) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !detail::is_prime(static_cast<std::uint64_t>(r))) continue;
        Poly h = frobenius_power(t, static_cast<std::uint64_t>(n / r), f) - t;
        if (!gcd(f, h).is_one()) return false;
    }
    return true;
}

namespace detail {

inline Poly pth_root(const Poly& f) {
    const Field& fl = f.field();
    const std::uint64_t p = fl->p();
    std::vector<std::uint64_t> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(fl->pow(f.coeffs()[i], fl->size() / p));
    return Poly(fl, std::move(r));
}

inline void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() < 1) return;
    const Poly df = f.derivative();
    Poly c = gcd(f, df);
    Poly w = f.monic() / c;
    int i = 1;
    while (!w.is_one() && w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<int>(f.field()->p()), out);
}

inline std::vector<std::pair<Poly, int>> distinct_degree(Poly g) {
    std::vector<std::pair<Poly, int>> out;
    const Poly t = Poly::t(g.field());
    Poly h = t % g;
    const std::uint64_t q = g.field()->size();
    for (int i = 1; g.degree() >= 2 * i; ++i) {
        h = powmod(h, q, g);
        Poly d = gcd(g, h - t);
        if (d.degree() > 0) {
            out.emplace_back(d, i);
            g = g / d;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), g.degree());
    return out;
}

inline void equal_degree(const Poly& f, int d, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Field& fl = f.field();
    const std::uint64_t q = fl->size();
    const Poly one = Poly::one(fl);
    // Candidates in canonical index order, starting from T; the walk is exhaustive.
    for (std::uint64_t idx = q;; ++idx) {
        const Poly h = Poly::from_index(fl, idx);
        if (h.degree() >= f.degree()) break;
        Poly s = fl->p() == 2 ? additive_trace(h, std::uint64_t(fl->m()) * d, f)
                              : half_norm_power(h, static_cast<std::uint64_t>(d), f) - one;
        Poly g = gcd(f, s);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, out);
            equal_degree(f / g, d, out);
            return;
        }
    }
    throw Error(ErrorKind::SearchExhausted, "equal-degree splitting found no separating candidate");
}

}  // namespace detail

/// Factorization into monic irreducibles with multiplicities, in canonical order.
/// The leading coefficient of f is not part of the output.
inline std::vector<std::pair<Poly, int>> factorize(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
    std::vector<std::pair<Poly, int>> sqf;
    detail::squarefree(f, 1, sqf);
    std::vector<std::pair<Poly, int>> result;
    for (const auto& [g, mult] : sqf) {
        for (const auto& [part, d] : detail::distinct_degree(g)) {
            std::vector<Poly> pieces;
            detail::equal_degree(part, d, pieces);
            for (auto& piece : pieces) result.emplace_back(std::move(piece), mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    // merge repeated factors coming from different squarefree layers
    std::vector<std::pair<Poly, int>> merged;
    for (auto& entry : result) {
        if (!merged.empty() && merged.back().first == entry.first)
            merged.back().second += entry.second;
        else
            merged.push_back(std::move(entry));
    }
    return merged;
}

/// Multiplicity of the irreducible P in f (f != 0).
inline int multiplicity(Poly f, const Poly& irreducible) {
    int k = 0;
    while (true) {
        auto [q, r] = Poly::divmod(f, irreducible);
        if (!r.is_zero()) return k;
        f = std::move(q);
        ++k;
    }
}

inline std::string coeff_string(const Field& f, std::uint64_t c) { return to_string(FFElem(f, c)); }

/// Renders with variable T; non-prime coefficients are parenthesized, e.g. "(g+1)T^2+T+g".
inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const Field& fl = f.field();
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const std::uint64_t c = f.coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        const std::string cs = coeff_string(fl, c);
        const bool compound = fl->m() > 1 && cs.find_first_of("+g") != std::string::npos && cs != "g";
        if (k == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += compound ? "(" + cs + ")" : cs;
        out += "T";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace fqt

#endif
