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

#include "fqt/definability.hpp"
#include "test_util.hpp"

using namespace fqt;
using fqt::testing::random_nonzero;

namespace {

Field F(std::uint64_t q) { return make_field_of_order(q); }
RatFunc T(const Field& f) { return RatFunc::t(f); }
RatFunc K(const Field& f, std::uint64_t c) { return RatFunc::constant(f, c); }
Place V(const Field& f, std::vector<std::uint64_t> c) { return Place::finite(Poly(f, std::move(c))); }
Place Inf(const Field& f) { return Place::infinity(f); }

}  // namespace

TEST(JMember, Examples) {
    const Field f3 = F(3);
    const PfisterForm q(T(f3), K(f3, 1));
    ASSERT_EQ(delta(q), (RamSet{V(f3, {0, 1}), Inf(f3)}));
    // c = T is odd at (T) and at infinity, so both places constrain x
    EXPECT_TRUE(j_member(T(f3) / (T(f3) * T(f3) + K(f3, 1)), T(f3), q));
    EXPECT_FALSE(j_member(T(f3), T(f3), q));
    EXPECT_FALSE(j_member(K(f3, 1), T(f3), q));
    // c with no odd valuation on delta(q)
    EXPECT_TRUE(j_member(K(f3, 1), T(f3) * T(f3), q));
    EXPECT_TRUE(j_member(RatFunc::zero(f3), T(f3), q));
}

TEST(HMember, Examples) {
    const Field f5 = F(5);
    const PfisterForm q(T(f5), K(f5, 3));
    ASSERT_TRUE(contains(delta(q), V(f5, {0, 1})));
    const RatFunc c = RatFunc::one(f5) / (T(f5) * T(f5));
    EXPECT_TRUE(h_member(T(f5) * T(f5), c, q));
    EXPECT_FALSE(h_member(T(f5), c, q));
    EXPECT_TRUE(h_member(T(f5), K(f5, 2), q));
    EXPECT_FALSE(h_member(T(f5), T(f5), q));
}

TEST(JHProperty, IdealUnderIntegralMultipliers) {
    std::mt19937_64 rng(43);
    for (std::uint64_t q : {2u, 3u, 5u}) {
        const Field f = F(q);
        for (int it = 0; it < 40; ++it) {
            const RatFunc a = random_nonzero(rng, f, 3), b = random_nonzero(rng, f, 3);
            if (f->p() != 2 && (RatFunc::one(f) + K(f, f->from_int(4)) * b).is_zero()) continue;
            const PfisterForm qf(a, b);
            const RamSet dq = delta(qf);
            const RatFunc c = random_nonzero(rng, f, 3), x = random_nonzero(rng, f, 3);
            RatFunc r = random_nonzero(rng, f, 3);
            std::vector<int> tv;
            for (const auto& v : dq) tv.push_back(std::max(0, valuation(r, v)));
            r = detail::with_valuations(r, dq, tv);
            if (j_member(x, c, dq)) { EXPECT_TRUE(j_member(x * r, c, dq)); }
            if (h_member(x, c, dq)) { EXPECT_TRUE(h_member(x * r, c, dq)); }
        }
    }
}

TEST(Jacoblem, IdentityExamples) {
    const Field f5 = F(5);
    const PlaceSet s{V(f5, {0, 1})};
    const RatFunc t2 = T(f5) * T(f5);
    EXPECT_TRUE(jacob_rhs(1, t2, s, nullptr));
    EXPECT_TRUE(detail::jacob1_complete(t2, s).verified);
    EXPECT_FALSE(jacob_rhs(1, T(f5), s, nullptr));
    const RatFunc c = RatFunc::one(f5) / t2;
    EXPECT_TRUE(jacob_rhs(3, t2, s, &c));
    EXPECT_TRUE(detail::jacob3_complete(t2, s, c).verified);
    EXPECT_FALSE(jacob_rhs(3, T(f5), s, &c));
}

TEST(Jacoblem, AllIdentitiesHoldOnSamples) {
    for (std::uint64_t q : {3u, 5u, 2u}) {
        const Field f = F(q);
        const std::vector<PlaceSet> sets{{Inf(f)}, {V(f, {0, 1}), Inf(f)}, {V(f, {0, 1}), V(f, {1, 1})}};
        const std::vector<RatFunc> cs{T(f), RatFunc::one(f) / (T(f) * T(f)), (T(f) + K(f, 1)) / T(f)};
        for (const auto& s : sets)
            for (int id = 1; id <= 3; ++id)
                for (const auto& c : cs) {
                    const JacobReport rep = jacoblem_verify(f, s, id, c, 40, 17);
                    EXPECT_EQ(rep.samples.size(), 80u);
                    for (const auto& smp : rep.samples)
                        EXPECT_TRUE(smp.ok) << "q=" << q << " S=" << to_string(s) << " id=" << id << " c=" << to_string(c)
                                            << " " << smp.direction << " x=" << smp.x << " " << smp.witness;
                    if (id == 1) break;
                }
    }
}

TEST(Jacoblem, RejectsBadArguments) {
    const Field f3 = F(3);
    EXPECT_THROW(jacoblem_verify(f3, {}, 1, std::nullopt, 1, 0), Error);
    EXPECT_THROW(jacoblem_verify(f3, {Inf(f3)}, 2, std::nullopt, 1, 0), Error);
    EXPECT_THROW(jacoblem_verify(f3, {Inf(f3)}, 4, T(f3), 1, 0), Error);
}

TEST(StratumMember, Examples) {
    const Field f3 = F(3);
    const PlaceSet s{V(f3, {0, 1})};
    EXPECT_TRUE(stratum_member({T(f3), K(f3, 1)}, {}));
    EXPECT_TRUE(stratum_member({T(f3), K(f3, 1)}, s));
    EXPECT_FALSE(stratum_member({T(f3) + K(f3, 1), K(f3, 1)}, s));
}

TEST(StratumWitness, Examples) {
    struct Case {
        std::uint64_t q;
        bool inf_s;
        std::vector<std::uint64_t> s, w;
    };
    for (const auto& cs : {Case{3, true, {}, {0, 1}}, Case{5, false, {0, 1}, {1, 1}}, Case{2, true, {}, {0, 1}}}) {
        const Field f = F(cs.q);
        const PlaceSet s{cs.inf_s ? Inf(f) : V(f, cs.s)};
        const Place w = V(f, cs.w);
        const StratumTuple t = stratum_witness(w, s);
        EXPECT_TRUE(stratum_member(t, s));
        PlaceSet sw{s[0], w};
        EXPECT_EQ(delta(PfisterForm(t.a, t.b)), make_place_set(sw));
        EXPECT_GE(valuation(t.b, w), 0);
    }
    const Field f3 = F(3);
    EXPECT_THROW(stratum_witness(Inf(f3), {Inf(f3)}), Error);
    EXPECT_THROW(stratum_witness(Inf(f3), {V(f3, {0, 1}), V(f3, {1, 1})}), Error);
}

TEST(UnionM, Examples) {
    const Field f3 = F(3), f5 = F(5);
    for (auto m : {UnionMethod::Direct, UnionMethod::Stratum}) {
        EXPECT_TRUE(union_m_member(T(f3), {Inf(f3)}, m));
        EXPECT_FALSE(union_m_member(K(f3, 2), {Inf(f3)}, m));
        EXPECT_TRUE(union_m_member(RatFunc::one(f5) / T(f5), {V(f5, {0, 1})}, m));
    }
}

TEST(UnionMProperty, MethodsAgree) {
    std::mt19937_64 rng(47);
    for (std::uint64_t q : {2u, 3u, 5u}) {
        const Field f = F(q);
        for (const PlaceSet& s : {PlaceSet{Inf(f)}, PlaceSet{V(f, {0, 1}), V(f, {1, 1}), Inf(f)}, PlaceSet{V(f, {1, 1})}}) {
            UnionOracle oracle(f, s);
            for (const auto& v : s) EXPECT_EQ(valuation(oracle.pi(), v), 1);
            for (int it = 0; it < 40; ++it) {
                const RatFunc x = random_nonzero(rng, f, 3);
                EXPECT_EQ(oracle.member(x), union_m_member(x, s, UnionMethod::Direct)) << to_string(x);
            }
        }
    }
}

TEST(SIntegers, Examples) {
    const Field f5 = F(5);
    const PlaceSet s{Inf(f5)};
    for (auto m : {SIntMethod::Direct, SIntMethod::Universal}) {
        EXPECT_TRUE(s_integers_member(T(f5) * T(f5) * T(f5) + K(f5, 1), s, m));
        EXPECT_FALSE(s_integers_member(RatFunc::one(f5) / T(f5), s, m));
        EXPECT_TRUE(s_integers_member(RatFunc::zero(f5), s, m));
        EXPECT_TRUE(s_integers_member(RatFunc::zero(f5), {}, m));
    }
}

TEST(SIntegersProperty, MethodsAgree) {
    std::mt19937_64 rng(53);
    for (std::uint64_t q : {3u, 5u, 4u}) {
        const Field f = F(q);
        for (const PlaceSet& s : {PlaceSet{}, PlaceSet{Inf(f)}, PlaceSet{V(f, {0, 1}), Inf(f)}}) {
            SIntegerOracle oracle(f, s);
            EXPECT_EQ(oracle.extra_place().has_value(), s.size() % 2 == 0);
            for (int it = 0; it < 40; ++it) {
                const RatFunc x = random_nonzero(rng, f, 4);
                EXPECT_EQ(oracle.member(x, SIntMethod::Universal), oracle.member(x, SIntMethod::Direct)) << to_string(x);
            }
        }
    }
}
