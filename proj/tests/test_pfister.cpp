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

#include <random>

#include "fqt/pfister.hpp"
#include "test_util.hpp"

using namespace fqt;
using fqt::testing::random_nonzero;

namespace {

Field F(std::uint64_t q) { return make_field_of_order(q); }
RatFunc T(const Field& f) { return RatFunc::t(f); }
RatFunc K(const Field& f, std::uint64_t c) { return RatFunc::constant(f, c); }
Place V(const Field& f, std::vector<std::uint64_t> c) { return Place::finite(Poly(f, std::move(c))); }

bool valid_slot(const Field& f, const RatFunc& b) {
    return f->p() == 2 || !(RatFunc::one(f) + K(f, f->from_int(4)) * b).is_zero();
}

}  // namespace

TEST(PfisterForm, RejectsDegenerateSlots) {
    const Field f5 = F(5);
    EXPECT_THROW(PfisterForm(RatFunc::zero(f5), T(f5)), Error);
    EXPECT_THROW(PfisterForm(T(f5), K(f5, 1)), Error);  // 1 + 4 = 0
    EXPECT_EQ(to_string(PfisterForm(T(f5), RatFunc::one(f5) / (T(f5) + K(f5, 1)))), "<<T; 1/(T+1)]]");
}

TEST(SlotShift, Examples) {
    const Field f3 = F(3), f2 = F(2);
    const PfisterForm q(T(f3), RatFunc::one(f3) / T(f3));
    EXPECT_EQ(quad_slot_shift(q, RatFunc::one(f3)), q);
    EXPECT_EQ(quad_slot_shift(q, T(f3)).b(), T(f3) + T(f3) * T(f3) - K(f3, 1));
    const PfisterForm q2(T(f2), RatFunc::one(f2) / T(f2));
    EXPECT_EQ(quad_slot_shift(q2, RatFunc::one(f2)), q2);
    try {
        quad_slot_shift(q, RatFunc::zero(f3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroShiftUnit);
    }
}

TEST(SlotShiftProperty, DiscriminantIdentityAndDelta) {
    std::mt19937_64 rng(31);
    for (std::uint64_t q : {2u, 3u, 5u, 9u, 4u}) {
        const Field f = F(q);
        for (int it = 0; it < 40; ++it) {
            const RatFunc a = random_nonzero(rng, f, 3), b = random_nonzero(rng, f, 3), c = random_nonzero(rng, f, 3);
            if (!valid_slot(f, b)) continue;
            const PfisterForm qf(a, b);
            const PfisterForm qs = quad_slot_shift(qf, c);
            if (f->p() != 2) { EXPECT_EQ(qs.c(), c * c * qf.c()); }
            EXPECT_EQ(delta(qs), delta(qf));
            EXPECT_TRUE(equivalent(qs, qf));
        }
    }
}

TEST(Equivalent, Examples) {
    const Field f3 = F(3);
    EXPECT_TRUE(equivalent(PfisterForm(RatFunc::one(f3), T(f3)), PfisterForm(T(f3), RatFunc::zero(f3))));
    EXPECT_FALSE(equivalent(PfisterForm(T(f3), K(f3, 1)), PfisterForm(T(f3) + K(f3, 1), K(f3, 1))));
}

TEST(BilinearRewrite, Examples) {
    const Field f3 = F(3);
    const RatFunc t = T(f3);
    const auto same = bilinear_unit_rewrite(t, t + K(f3, 1), {});
    EXPECT_EQ(same.first, t);
    const PlaceSet s{V(f3, {0, 1})};
    const auto [a1, a2] = bilinear_unit_rewrite(t, t, s);
    EXPECT_EQ(valuation(a1, s[0]), 0);
    EXPECT_EQ(hilbert_ramification(a1, a2), hilbert_ramification(t, t));
    try {
        bilinear_unit_rewrite(T(F(2)), T(F(2)), {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CharTwoUnsupported);
    }
}

TEST(BilinearRewriteProperty, UnitAndSameRamification) {
    std::mt19937_64 rng(37);
    for (std::uint64_t q : {3u, 5u, 9u}) {
        const Field f = F(q);
        const auto places = places_up_to(f, 2);
        for (int it = 0; it < 30; ++it) {
            const RatFunc x = random_nonzero(rng, f, 3), y = random_nonzero(rng, f, 3);
            PlaceSet s;
            for (const auto& v : places)
                if (rng() % 3 == 0) s.push_back(v);
            const auto [a1, a2] = bilinear_unit_rewrite(x, y, s);
            for (const auto& v : s) EXPECT_EQ(valuation(a1, v), 0);
            EXPECT_EQ(hilbert_ramification(a1, a2), hilbert_ramification(x, y));
        }
    }
}

TEST(NormalizeAt, Examples) {
    const Field f5 = F(5), f2 = F(2);
    const PfisterForm unit(T(f5), K(f5, 1) + T(f5));
    EXPECT_EQ(normalize_at(unit, {V(f5, {2, 1})}), unit);
    const PfisterForm q5(T(f5), RatFunc::one(f5) / T(f5));
    const Place v0 = V(f5, {0, 1});
    const PfisterForm n5 = normalize_at(q5, {v0});
    EXPECT_EQ(valuation(n5.b(), v0), 0);
    EXPECT_EQ(valuation(n5.c(), v0), 0);
    EXPECT_EQ(delta(n5), delta(q5));
    const PfisterForm q2(T(f2), RatFunc::one(f2) / (T(f2) + RatFunc::one(f2)));
    const Place v1 = V(f2, {1, 1});
    const PfisterForm n2 = normalize_at(q2, {v1});
    EXPECT_GE(valuation(n2.b(), v1), 0);
    EXPECT_EQ(delta(n2), delta(q2));
}

TEST(NormalizeAtProperty, PreservesDelta) {
    std::mt19937_64 rng(41);
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        const Field f = F(q);
        const auto places = places_up_to(f, 2);
        for (int it = 0; it < 20; ++it) {
            const RatFunc a = random_nonzero(rng, f, 3), b = random_nonzero(rng, f, 3);
            if (!valid_slot(f, b)) continue;
            PlaceSet s;
            for (const auto& v : places)
                if (rng() % 3 == 0) s.push_back(v);
            const PfisterForm qf(a, b);
            const PfisterForm n = normalize_at(qf, s);
            EXPECT_EQ(delta(n), delta(qf));
            for (const auto& v : s) {
                EXPECT_EQ(valuation(n.b(), v), 0);
                EXPECT_EQ(valuation(n.c(), v), 0);
            }
        }
    }
}
