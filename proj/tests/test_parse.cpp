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

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fqt/local_symbols.hpp"
#include "fqt/parse.hpp"
#include "test_util.hpp"

using namespace fqt;
using fqt::testing::random_nonzero;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(ParseField, Orders) {
    EXPECT_EQ(parse_field("F9")->p(), 3u);
    EXPECT_EQ(parse_field("F9")->m(), 2u);
    EXPECT_EQ(parse_field("F2")->m(), 1u);
    EXPECT_EQ(kind_of([] { parse_field("F6"); }), ErrorKind::NonPrimeModulus);
    EXPECT_EQ(kind_of([] { parse_field("G5"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_field("F"); }), ErrorKind::ParseError);
}

TEST(ParseElement, Examples) {
    const Field f5 = make_field_of_order(5);
    const RatFunc t = RatFunc::t(f5);
    const RatFunc one = RatFunc::one(f5);
    EXPECT_EQ(parse_element(f5, "(T^2+1)/(T-1)"), (t * t + one) / (t - one));
    EXPECT_EQ(parse_element(f5, "2T^2 - 3"), RatFunc::constant(f5, 2) * t * t + RatFunc::constant(f5, 2));
    EXPECT_EQ(parse_element(f5, "1/T^2"), one / (t * t));
    EXPECT_EQ(parse_element(f5, "T^-1"), one / t);
    EXPECT_EQ(parse_element(f5, "7"), RatFunc::constant(f5, 2));
    EXPECT_EQ(parse_element(f5, "-T"), -t);
    EXPECT_EQ(kind_of([&] { parse_element(f5, "T+"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_element(f5, "1/(T-T)"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_element(f5, "g"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_element(f5, "T)"); }), ErrorKind::ParseError);
    const Field f4 = make_field_of_order(4);
    EXPECT_EQ(parse_element(f4, "g+g^2"), RatFunc::one(f4));
    EXPECT_EQ(to_string(parse_element(f4, "(g+1)T^2+T+g")), "(g+1)T^2+T+g");
}

TEST(ParseElementProperty, PrintedFormRoundTrips) {
    std::mt19937_64 rng(59);
    for (std::uint64_t q : {2u, 4u, 5u, 8u, 9u, 25u}) {
        const Field f = make_field_of_order(q);
        for (int it = 0; it < 60; ++it) {
            const RatFunc x = random_nonzero(rng, f, 4);
            EXPECT_EQ(parse_element(f, to_string(x)), x) << to_string(x);
        }
    }
}

TEST(ParsePlaces, Lists) {
    const Field f3 = make_field_of_order(3);
    const PlaceSet s = parse_places(f3, "(T),inf,(T+1)");
    EXPECT_EQ(to_string(s), "{(T), (T+1), inf}");
    EXPECT_EQ(parse_place(f3, "T^2+1"), Place::finite(Poly(f3, {1, 0, 1})));
    EXPECT_TRUE(parse_places(f3, "").empty());
    EXPECT_EQ(kind_of([&] { parse_place(f3, "T^2+2"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_place(f3, "2T"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_place(f3, "1/T"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_places(f3, "(T),(T)"); }), ErrorKind::ParseError);
}

TEST(ParseForm, Examples) {
    const Field f3 = make_field_of_order(3);
    const PfisterForm q = parse_form(f3, "<<T; 1]]");
    EXPECT_EQ(to_string(delta(q)), "{(T), inf}");
    EXPECT_EQ(to_string(parse_form(f3, " <<T; 1/(T+1)]] ")), "<<T; 1/(T+1)]]");
    EXPECT_EQ(kind_of([&] { parse_form(f3, "<<T, 1]]"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_form(f3, "<<0; 1]]"); }), ErrorKind::DegenerateSlot);
}
