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

#include <chrono>
#include <random>

#include "fqt/pfister.hpp"
#include "test_util.hpp"

using namespace fqt;
using fqt::testing::random_nonzero;

namespace {

Field F(std::uint64_t q) { return make_field_of_order(q); }
Place V(const Field& f, std::vector<std::uint64_t> c) { return Place::finite(Poly(f, std::move(c))); }

// Element of F_{p^2} whose 1-fold class is nontrivial, found by brute force.
FFElem anisotropic_slot(const Field& big) {
    for (std::uint64_t b = 0; b < big->size(); ++b) {
        const FFElem be(big, b);
        bool iso = false;
        for (std::uint64_t x = 0; x < big->size() && !iso; ++x)
            for (std::uint64_t y = 1; y < big->size() && !iso; ++y) {
                const FFElem xe(big, x), ye(big, y);
                iso = xe * xe - xe * ye - be * ye * ye == FFElem::zero(big);
            }
        if (!iso) return be;
    }
    throw std::logic_error("no anisotropic slot");
}

}  // namespace

TEST(Transfer, ClassExamples) {
    EXPECT_EQ(transfer_class({F(9), 0}, F(3)).bit, 0);
    EXPECT_EQ(transfer_class({F(9), 1}, F(3)).bit, 1);
    const GradedWittClass t = transfer_class({F(4), 1}, F(2));
    EXPECT_EQ(t.bit, 1);
    EXPECT_EQ(t.residue_field.get(), F(2).get());
    EXPECT_THROW(transfer_class({F(9), 1}, F(2)), Error);
}

TEST(Transfer, ExplicitExamples) {
    const Field f9 = F(9);
    EXPECT_EQ(transfer_explicit(FFElem::zero(f9), {1, 0}).bit, 0);
    EXPECT_EQ(transfer_explicit(anisotropic_slot(f9), {1, 0}).bit, 1);
    EXPECT_EQ(transfer_explicit(anisotropic_slot(F(4)), {0, 1}).bit, 1);
    try {
        transfer_explicit(FFElem::zero(f9), {0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroFunctional);
    }
}

TEST(TransferProperty, FunctionalIndependenceOnEveryClass) {
    for (std::uint64_t q2 : {4u, 9u, 25u, 8u, 27u}) {
        const Field big = F(q2);
        for (std::uint64_t b = 0; b < big->size(); b += (q2 > 9 ? 3 : 1)) {
            const FFElem be(big, b);
            if (big->p() != 2 && FFElem::one(big) + FFElem(big, big->from_int(4)) * be == FFElem::zero(big)) continue;
            const int expected = one_fold_class(be);
            for (std::uint64_t s = 1; s < detail::ipow(big->p(), big->m()); s += 2) {
                std::vector<std::uint64_t> fn(big->m());
                std::uint64_t t = s;
                for (auto& c : fn) {
                    c = t % big->p();
                    t /= big->p();
                }
                EXPECT_EQ(transfer_explicit(be, fn).bit, expected) << "q=" << q2 << " b=" << b << " s=" << s;
            }
        }
    }
}

TEST(Reciprocity, Examples) {
    const Field f3 = F(3);
    const auto split = reciprocity_check(PfisterForm(RatFunc::one(f3), RatFunc::zero(f3)));
    EXPECT_TRUE(split.delta.empty());
    EXPECT_EQ(split.transferred_sum, 0);
    const auto r = reciprocity_check(PfisterForm(RatFunc::t(f3), RatFunc::one(f3)));
    int ones = 0;
    for (const auto& [v, cls] : r.residues) ones += cls.bit;
    EXPECT_EQ(ones, 2);
    EXPECT_EQ(r.transferred_sum, 0);
}

TEST(ReciprocityProperty, RandomFormsCancel) {
    std::mt19937_64 rng(21);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field f = F(q);
        for (int it = 0; it < 100; ++it) {
            const RatFunc a = random_nonzero(rng, f, 4), b = random_nonzero(rng, f, 4);
            if (f->p() != 2 && (RatFunc::one(f) + RatFunc::constant(f, f->from_int(4)) * b).is_zero()) continue;
            EXPECT_EQ(reciprocity_check(PfisterForm(a, b)).transferred_sum, 0);
        }
    }
}

TEST(Realize, Examples) {
    const Field f3 = F(3), f5 = F(5);
    EXPECT_EQ(realize(f3, {}, {}), PfisterForm(RatFunc::one(f3), RatFunc::zero(f3)));
    const RamSet s3{V(f3, {0, 1}), Place::infinity(f3)};
    EXPECT_EQ(delta(realize(f3, s3, {})), s3);
    const RamSet s5{V(f5, {0, 1}), V(f5, {1, 1})};
    EXPECT_EQ(delta(realize(f5, s5, {})), s5);
    try {
        realize(f5, {V(f5, {0, 1})}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddCardinality);
    }
}

TEST(RealizeProperty, RoundTripWithUnitConstraints) {
    std::mt19937_64 rng(23);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field f = F(q);
        const auto places = places_up_to(f, 2);
        for (int it = 0; it < 12; ++it) {
            PlaceSet s, u;
            for (const auto& v : places) {
                if (rng() % 4 == 0) s.push_back(v);
                if (rng() % 5 == 0) u.push_back(v);
            }
            if (s.size() % 2) s.pop_back();
            const auto start = std::chrono::steady_clock::now();
            const PfisterForm qf = realize(f, s, u);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            EXPECT_EQ(delta(qf), make_place_set(s));
            for (const auto& v : u) {
                EXPECT_EQ(valuation(qf.b(), v), 0);
                EXPECT_EQ(valuation(qf.c(), v), 0);
            }
            EXPECT_LT(secs, 2.0);
        }
    }
}

TEST(ConstantExtension, ResidueThenTransferCommutes) {
    std::mt19937_64 rng(29);
    for (std::uint64_t q : {3u, 5u}) {
        const Field f = F(q), big = F(q * q);
        for (int it = 0; it < 15; ++it) {
            const RatFunc a = random_nonzero(rng, f, 3), b = random_nonzero(rng, f, 3);
            if ((RatFunc::one(f) + RatFunc::constant(f, 4 % q) * b).is_zero()) continue;
            const PfisterForm qf(a, b);
            const PfisterForm qe = extend_scalars(qf, big);
            for (const auto& v : places_up_to(f, 2)) {
                const int bit_v = residue_class(qf, v).bit;
                int sum = 0;
                for (const auto& w : places_above(v, big)) {
                    const int fdeg = w.degree() * 2 / v.degree();  // residue degree of w over v
                    const int bit_w = residue_class(qe, w).bit;
                    EXPECT_EQ(bit_w, fdeg % 2 == 1 ? bit_v : 0);
                    sum ^= transfer_class(residue_class(qe, w), residue_field(v)).bit;
                }
                EXPECT_EQ(sum, 0);
            }
        }
    }
}
