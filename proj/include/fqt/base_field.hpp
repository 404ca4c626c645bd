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
 * @file base_field.hpp
 * @brief Exact arithmetic in finite fields F_{p^m}.
 *
 * A field is described by a prime p, a degree m and the canonical modulus: the
 * least monic irreducible polynomial of degree m over F_p, where monic
 * polynomials of degree m are ordered lexicographically by (c_{m-1}, ..., c_0).
 * Elements are stored as their index sum_i c_i p^i, so the canonical element
 * order coincides with the integer order of indices.
 *
 * Fields are interned: make_field(p, m) returns the same shared descriptor for
 * the same arguments, and descriptors are immutable afterwards.
 */

#ifndef FQT_BASE_FIELD_HPP
#define FQT_BASE_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fqt {

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over F_p, low degree first, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    // m is monic in every caller
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * std::uint64_t(m[i])) % p);
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return fp_mod(std::move(r), m, p);
}

inline FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
    FpPoly result{1};
    result = fp_mod(result, m, p);
    base = fp_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = fp_mulmod(result, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        const std::uint32_t inv = fp_inv(b.back(), p);
        FpPoly monic = b;
        for (auto& c : monic) c = static_cast<std::uint32_t>(std::uint64_t(c) * inv % p);
        FpPoly r = fp_mod(a, monic, p);
        a = std::move(monic);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f of degree m is irreducible over F_p iff X^{p^m} = X mod f and
// gcd(X^{p^{m/r}} - X, f) = 1 for every prime r | m.
inline bool fp_is_irreducible(const FpPoly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    auto x_pow_p_k = [&](std::size_t k) {
        FpPoly x{0, 1};
        for (std::size_t i = 0; i < k; ++i) x = fp_powmod(x, p, f, p);
        return x;
    };
    FpPoly full = x_pow_p_k(m);
    FpPoly x = fp_mod(FpPoly{0, 1}, f, p);
    if (full != x) return false;
    for (std::size_t r = 2; r <= m; ++r) {
        if (m % r != 0 || !is_prime(r)) continue;
        FpPoly h = x_pow_p_k(m / r);
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        fp_trim(h);
        FpPoly g = fp_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// Descriptor of F_{p^m}. Arithmetic operates on element indices.
class FieldDesc {
   public:
    FieldDesc(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
        : p_(p), m_(m), modulus_(std::move(modulus)) {
        size_ = 1;
        for (std::uint32_t i = 0; i < m_; ++i) size_ *= p_;
        if (size_ <= kTableLimit) build_tables();
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint64_t size() const noexcept { return size_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !mul_.empty(); }

    std::vector<std::uint32_t> coeffs(std::uint64_t x) const {
        std::vector<std::uint32_t> c(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            c[i] = static_cast<std::uint32_t>(x % p_);
            x /= p_;
        }
        return c;
    }

    std::uint64_t index(const std::vector<std::uint32_t>& c) const {
        std::uint64_t x = 0;
        for (std::size_t i = c.size(); i-- > 0;) x = x * p_ + (i < m_ ? c[i] % p_ : 0);
        return x;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (has_tables()) return add_[a * size_ + b];
        return add_generic(a, b);
    }
    std::uint64_t neg(std::uint64_t a) const {
        if (has_tables()) return neg_[a];
        auto c = coeffs(a);
        for (auto& x : c) x = (p_ - x) % p_;
        return index(c);
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (has_tables()) return mul_[a * size_ + b];
        return mul_generic(a, b);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero in F_" + std::to_string(size_));
        if (has_tables()) return inv_[a];
        return pow(a, size_ - 2);
    }
    /// Embeds an integer into the prime field.
    std::uint64_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint64_t>(r);
    }

    bool is_square(std::uint64_t a) const {
        if (a == 0 || p_ == 2) return true;
        return pow(a, (size_ - 1) / 2) == 1;
    }
    /// Square root in characteristic 2 (inverse Frobenius).
    std::uint64_t sqrt_char2(std::uint64_t a) const { return pow(a, size_ / 2); }
    /// Absolute trace to F_p, returned as an index < p.
    std::uint64_t trace(std::uint64_t a) const {
        std::uint64_t t = 0, x = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            t = add(t, x);
            x = pow(x, p_);
        }
        return t;
    }

    static constexpr std::uint64_t kTableLimit = 256;

   private:
    std::uint64_t add_generic(std::uint64_t a, std::uint64_t b) const {
        auto ca = coeffs(a), cb = coeffs(b);
        for (std::uint32_t i = 0; i < m_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
        return index(ca);
    }
    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const {
        auto ca = coeffs(a), cb = coeffs(b);
        detail::fp_trim(ca);
        detail::fp_trim(cb);
        auto r = detail::fp_mulmod(ca, cb, modulus_, p_);
        return index(r);
    }
    void build_tables() {
        const std::size_t n = static_cast<std::size_t>(size_);
        add_.resize(n * n);
        mul_.resize(n * n);
        neg_.resize(n);
        inv_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                add_[a * n + b] = static_cast<std::uint16_t>(add_generic(a, b));
                mul_[a * n + b] = static_cast<std::uint16_t>(mul_generic(a, b));
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (add_[a * n + b] == 0) neg_[a] = static_cast<std::uint16_t>(b);
                if (mul_[a * n + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
            }
        }
    }

    std::uint32_t p_;
    std::uint32_t m_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t size_ = 1;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

using Field = std::shared_ptr<const FieldDesc>;

/// Canonical descriptor of F_{p^m}; identical arguments give the identical descriptor.
inline Field make_field(std::uint32_t p, std::uint32_t m) {
    if (!detail::is_prime(p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find({p, m});
    if (it != registry.end()) return it->second;

    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    std::vector<std::uint32_t> modulus;
    for (std::uint64_t tail = 0; tail < count; ++tail) {
        detail::FpPoly f(m + 1, 0);
        std::uint64_t t = tail;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (detail::fp_is_irreducible(f, p)) {
            modulus = std::move(f);
            break;
        }
    }
    auto field = std::make_shared<const FieldDesc>(p, m, std::move(modulus));
    registry.emplace(std::make_pair(p, m), field);
    return field;
}

/// Field of order q = p^m; q must be a prime power.
inline Field make_field_of_order(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::NonPrimeModulus, "field order must be a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) throw Error(ErrorKind::NonPrimeModulus, std::to_string(q) + " is not a prime power");
    return make_field(static_cast<std::uint32_t>(p), m);
}

/// An element of a finite field.
class FFElem {
   public:
    FFElem() = default;
    FFElem(Field field, std::uint64_t index) : field_(std::move(field)), index_(index) {}

    static FFElem zero(const Field& f) { return {f, 0}; }
    static FFElem one(const Field& f) { return {f, 1}; }
    /// The class of X modulo the field modulus (g); equals an integer when m = 1.
    static FFElem generator(const Field& f) {
        if (f->m() == 1) return {f, 0};
        return {f, f->p()};
    }
    static FFElem from_coeffs(const Field& f, const std::vector<std::uint32_t>& c) { return {f, f->index(c)}; }

    const Field& field() const noexcept { return field_; }
    std::uint64_t index() const noexcept { return index_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(index_); }
    bool is_zero() const noexcept { return index_ == 0; }

    friend FFElem operator+(const FFElem& a, const FFElem& b) {
        check_same(a, b);
        return {a.field_, a.field_->add(a.index_, b.index_)};
    }
    friend FFElem operator-(const FFElem& a, const FFElem& b) {
        check_same(a, b);
        return {a.field_, a.field_->sub(a.index_, b.index_)};
    }
    friend FFElem operator*(const FFElem& a, const FFElem& b) {
        check_same(a, b);
        return {a.field_, a.field_->mul(a.index_, b.index_)};
    }
    friend FFElem operator/(const FFElem& a, const FFElem& b) {
        check_same(a, b);
        return {a.field_, a.field_->mul(a.index_, a.field_->inv(b.index_))};
    }
    FFElem operator-() const { return {field_, field_->neg(index_)}; }
    FFElem pow(std::uint64_t e) const { return {field_, field_->pow(index_, e)}; }
    FFElem inverse() const { return {field_, field_->inv(index_)}; }

    friend bool operator==(const FFElem& a, const FFElem& b) {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }
    friend bool operator<(const FFElem& a, const FFElem& b) { return a.index_ < b.index_; }

   private:
    static void check_same(const FFElem& a, const FFElem& b) {
        if (a.field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "elements of different fields");
    }

    Field field_;
    std::uint64_t index_ = 0;
};

inline bool is_square(const FFElem& x) { return x.field()->is_square(x.index()); }

/// x + x^p + ... + x^{p^{m-1}}, as an element of the prime field.
inline FFElem absolute_trace(const FFElem& x) {
    const Field prime = make_field(x.field()->p(), 1);
    return {prime, x.field()->trace(x.index())};
}

/// Solves y^2 + y = b in characteristic 2; empty iff the absolute trace of b is 1.
inline std::optional<FFElem> solve_artin_schreier(const FFElem& b) {
    const Field& f = b.field();
    if (f->p() != 2) throw Error(ErrorKind::WrongCharacteristic, "Artin-Schreier equation needs characteristic 2");
    if (f->trace(b.index()) != 0) return std::nullopt;
    const std::uint32_t m = f->m();
    // y -> y^2 + y is F_2-linear; row-reduce the augmented m x (m+1) system.
    std::vector<std::vector<std::uint8_t>> rows(m, std::vector<std::uint8_t>(m + 1, 0));
    for (std::uint32_t j = 0; j < m; ++j) {
        const std::uint64_t basis = std::uint64_t(1) << j;
        const auto image = f->coeffs(f->add(f->mul(basis, basis), basis));
        for (std::uint32_t i = 0; i < m; ++i) rows[i][j] = static_cast<std::uint8_t>(image[i]);
    }
    const auto rhs = b.coeffs();
    for (std::uint32_t i = 0; i < m; ++i) rows[i][m] = static_cast<std::uint8_t>(rhs[i]);
    std::vector<int> pivot_col(m, -1);
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < m && r < m; ++c) {
        std::uint32_t sel = r;
        while (sel < m && rows[sel][c] == 0) ++sel;
        if (sel == m) continue;
        std::swap(rows[sel], rows[r]);
        for (std::uint32_t i = 0; i < m; ++i)
            if (i != r && rows[i][c])
                for (std::uint32_t k = 0; k <= m; ++k) rows[i][k] ^= rows[r][k];
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    std::vector<std::uint32_t> y(m, 0);
    for (std::uint32_t i = 0; i < r; ++i) y[static_cast<std::size_t>(pivot_col[i])] = rows[i][m];
    FFElem sol = FFElem::from_coeffs(f, y);
    if (!(sol * sol + sol == b)) return std::nullopt;
    return sol;
}

/// Least root (in index order) of the modulus of `small` inside `big`; m(small) | m(big).
inline std::uint64_t subfield_generator_image(const Field& small, const Field& big) {
    if (small->p() != big->p() || big->m() % small->m() != 0)
        throw Error(ErrorKind::FieldMismatch, "no embedding between these fields");
    static std::mutex mutex;
    static std::map<std::pair<const FieldDesc*, const FieldDesc*>, std::uint64_t> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({small.get(), big.get()});
        if (it != cache.end()) return it->second;
    }
    const auto& mod = small->modulus();
    std::uint64_t root = 0;
    bool found = false;
    for (std::uint64_t x = 0; x < big->size() && !found; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) acc = big->add(big->mul(acc, x), mod[i]);
        if (acc == 0) {
            root = x;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::FieldMismatch, "modulus has no root in the larger field");
    std::lock_guard<std::mutex> lock(mutex);
    cache[{small.get(), big.get()}] = root;
    return root;
}

/// Image of x under the canonical embedding F_{p^d} -> F_{p^m}.
inline FFElem embed(const FFElem& x, const Field& big) {
    const Field& small = x.field();
    if (small == big) return x;
    if (small->p() != big->p() || big->m() % small->m() != 0)
        throw Error(ErrorKind::FieldMismatch, "no embedding between these fields");
    if (small->m() == 1) return {big, x.index()};
    const std::uint64_t g = subfield_generator_image(small, big);
    const auto c = x.coeffs();
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = big->add(big->mul(acc, g), c[i]);
    return {big, acc};
}

inline std::string to_string(const FFElem& x) {
    const Field& f = x.field();
    if (f->m() == 1) return std::to_string(x.index());
    const auto c = x.coeffs();
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (k == 0) {
            out << c[k];
            continue;
        }
        if (c[k] != 1) out << c[k];
        out << "g";
        if (k > 1) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace fqt

#endif
