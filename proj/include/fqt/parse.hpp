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
 * @file parse.hpp
 * @brief Text grammar for fields, elements, places and forms.
 *
 *   field   := "F" q                     q a prime power
 *   element := sum of terms in T and g with + - * / ^, integers and parentheses;
 *              juxtaposition multiplies, so "2T^2" and "(g+1)T" are accepted
 *   place   := "inf" | monic irreducible polynomial, e.g. "(T^2+1)"
 *   places  := place ("," place)*            commas inside parentheses are ignored
 *   form    := "<<" element ";" element "]]"
 */

#ifndef FQT_PARSE_HPP
#define FQT_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "pfister_form.hpp"

namespace fqt {

inline Field parse_field(std::string_view s) {
    if (s.size() < 2 || (s[0] != 'F' && s[0] != 'f')) throw Error(ErrorKind::ParseError, "field must look like F<q>, got '" + std::string(s) + "'");
    std::uint64_t q = 0;
    for (char ch : s.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error(ErrorKind::ParseError, "bad field order in '" + std::string(s) + "'");
        q = q * 10 + static_cast<std::uint64_t>(ch - '0');
        if (q > (1u << 20)) throw Error(ErrorKind::ParseError, "field order too large");
    }
    return make_field_of_order(q);
}

namespace detail {

class ElementParser {
   public:
    ElementParser(const Field& f, std::string_view text) : f_(f), s_(text) {}

    RatFunc parse() {
        RatFunc x = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return x;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '(' || c == 'T' || c == 't' || c == 'g' || std::isdigit(static_cast<unsigned char>(c));
    }

    RatFunc expr() {
        RatFunc x = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+'))
                x = x + term();
            else if (eat('-'))
                x = x - term();
            else
                return x;
        }
    }
    RatFunc term() {
        RatFunc x = power();
        for (;;) {
            if (eat('*')) {
                x = x * power();
            } else if (eat('/')) {
                const RatFunc d = power();
                if (d.is_zero()) fail("division by zero");
                x = x / d;
            } else if (starts_factor()) {
                x = x * power();
            } else {
                return x;
            }
        }
    }
    RatFunc power() {
        RatFunc base = atom();
        if (!eat('^')) return base;
        skip();
        const bool neg = eat('-');
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
        int e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_++] - '0');
            if (e > 100000) fail("exponent too large");
        }
        if (neg && base.is_zero()) fail("negative power of zero");
        return pow(base, neg ? -e : e);
    }
    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc x = expr();
            if (!eat(')')) fail("expected ')'");
            return x;
        }
        if (c == 'T' || c == 't') {
            ++pos_;
            return RatFunc::t(f_);
        }
        if (c == 'g') {
            ++pos_;
            if (f_->m() == 1) fail("generator g is only available over non-prime fields");
            return RatFunc::constant(f_, FFElem::generator(f_).index());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % f_->p();
            return RatFunc::constant(f_, f_->from_int(static_cast<std::int64_t>(v)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Field f_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace detail

inline RatFunc parse_element(const Field& f, std::string_view text) { return detail::ElementParser(f, text).parse(); }

inline Place parse_place(const Field& f, std::string_view text) {
    const std::string s = detail::trim(text);
    if (s == "inf" || s == "oo" || s == "infinity") return Place::infinity(f);
    const RatFunc x = parse_element(f, s);
    if (!x.is_poly() || x.num().degree() < 1) throw Error(ErrorKind::ParseError, "place must be 'inf' or a polynomial of positive degree: '" + s + "'");
    try {
        return Place::finite(x.num());
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, "'" + s + "' is not a monic irreducible polynomial");
    }
}

inline PlaceSet parse_places(const Field& f, std::string_view text) {
    PlaceSet out;
    const std::string s = detail::trim(text);
    if (s.empty()) return out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back(parse_place(f, std::string_view(s).substr(start, i - start)));
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    const std::size_t n = out.size();
    out = make_place_set(std::move(out));
    if (out.size() != n) throw Error(ErrorKind::ParseError, "repeated place in '" + s + "'");
    return out;
}

inline PfisterForm parse_form(const Field& f, std::string_view text) {
    const std::string s = detail::trim(text);
    const auto semi = s.find(';');
    if (s.rfind("<<", 0) != 0 || s.size() < 6 || s.substr(s.size() - 2) != "]]" || semi == std::string::npos)
        throw Error(ErrorKind::ParseError, "form must look like <<a; b]], got '" + s + "'");
    return PfisterForm(parse_element(f, std::string_view(s).substr(2, semi - 2)),
                       parse_element(f, std::string_view(s).substr(semi + 1, s.size() - semi - 3)));
}

}  // namespace fqt

#endif
