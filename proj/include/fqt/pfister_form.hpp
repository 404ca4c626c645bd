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

#ifndef FQT_PFISTER_FORM_HPP
#define FQT_PFISTER_FORM_HPP

#include <string>

#include "function_field.hpp"

namespace fqt {

enum class CharMode { Odd, Two };

/// The 2-fold quadratic Pfister form <<a, b]] = <<a>> (x) [1, -b] over F_q(T).
class PfisterForm {
   public:
    PfisterForm(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.is_zero()) throw Error(ErrorKind::DegenerateSlot, "bilinear slot must be nonzero");
        if (mode() == CharMode::Odd && c().is_zero()) throw Error(ErrorKind::DegenerateSlot, "1+4b vanishes");
    }

    const RatFunc& a() const noexcept { return a_; }
    const RatFunc& b() const noexcept { return b_; }
    const Field& field() const noexcept { return a_.field(); }
    CharMode mode() const noexcept { return field()->p() == 2 ? CharMode::Two : CharMode::Odd; }
    /// Discriminant slot 1+4b (equal to 1 in characteristic 2).
    RatFunc c() const { return RatFunc::one(field()) + RatFunc::constant(field(), field()->from_int(4)) * b_; }

    friend bool operator==(const PfisterForm& x, const PfisterForm& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

   private:
    RatFunc a_, b_;
};

inline std::string to_string(const PfisterForm& q) { return "<<" + to_string(q.a()) + "; " + to_string(q.b()) + "]]"; }

}  // namespace fqt

#endif
