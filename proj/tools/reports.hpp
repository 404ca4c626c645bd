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

// JSON renderings shared by the command line tool and the acceptance suite.
// Key order is insertion order so that reports compare byte for byte.

#ifndef FQT_TOOLS_REPORTS_HPP
#define FQT_TOOLS_REPORTS_HPP

#include <json.hpp>

#include "fqt/fqt.hpp"

namespace fqt::report {

using Json = nlohmann::ordered_json;

inline Json places_json(const PlaceSet& s) {
    Json out = Json::array();
    for (const auto& v : s) out.push_back(to_string(v));
    return out;
}

inline Json form_json(const PfisterForm& q) { return Json{{"a", to_string(q.a())}, {"b", to_string(q.b())}}; }

inline Json reciprocity_json(const ReciprocityReport& r) {
    Json res = Json::array();
    for (const auto& [v, cls] : r.residues) res.push_back(Json{{"place", to_string(v)}, {"bit", cls.bit}});
    return Json{{"form", form_json(r.form)}, {"delta", places_json(r.delta)}, {"residues", res}, {"sum", r.transferred_sum}};
}

inline Json evidence_json(const PfisterForm& q, const ResidueEvidence& ev) {
    return Json{{"form", form_json(q)},
                {"place", to_string(ev.place)},
                {"bit", ev.bit},
                {"residue_field", "F" + std::to_string(residue_field(ev.place)->size())},
                {"rule", ev.rule},
                {"detail", ev.detail}};
}

inline Json jacob_json(const JacobReport& r) {
    Json samples = Json::array();
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const auto& s = r.samples[i];
        samples.push_back(Json{{"index", i}, {"direction", s.direction}, {"x", s.x}, {"ok", s.ok}, {"witness", s.witness}});
    }
    return Json{{"identity", r.identity},
                {"S", places_json(r.s)},
                {"c", r.c ? Json(to_string(*r.c)) : Json(nullptr)},
                {"seed", r.seed},
                {"failures", r.failures()},
                {"samples", samples}};
}

inline Json stratum_json(const StratumTuple& t, const PlaceSet& s, const Place& w) {
    const PfisterForm q(t.a, t.b);
    return Json{{"S", places_json(s)},
                {"w", to_string(w)},
                {"tuple", Json{{"a", to_string(t.a)}, {"b", to_string(t.b)}}},
                {"delta", places_json(delta(q))},
                {"stratum_member", stratum_member(t, s)}};
}

struct SIntegerRun {
    Json json;
    int disagreements = 0;
    int misclassified_polynomials = 0;  // only counted when S = {inf}
};

/// Samples elements with numerator and denominator degree <= degree_bound and compares both methods.
inline SIntegerRun sintegers_run(const Field& f, const PlaceSet& s, int samples, std::uint64_t seed, int degree_bound) {
    std::mt19937_64 rng(seed);
    SIntegerOracle oracle(f, s);
    const bool only_inf = s.size() == 1 && s[0].is_infinity();
    SIntegerRun run;
    Json rows = Json::array();
    for (int i = 0; i < samples; ++i) {
        RatFunc x = sample_element(rng, f, degree_bound);
        if (i % 4 == 3) x = RatFunc(x.num());  // keep a healthy share of members
        const bool direct = oracle.member(x, SIntMethod::Direct);
        const bool universal = oracle.member(x, SIntMethod::Universal);
        if (direct != universal) ++run.disagreements;
        if (only_inf && universal != x.is_poly()) ++run.misclassified_polynomials;
        rows.push_back(Json{{"index", i}, {"x", to_string(x)}, {"direct", direct}, {"universal", universal}});
    }
    run.json = Json{{"field", "F" + std::to_string(f->size())},
                    {"S", places_json(s)},
                    {"extra_place", oracle.extra_place() ? Json(to_string(*oracle.extra_place())) : Json(nullptr)},
                    {"seed", seed},
                    {"disagreements", run.disagreements},
                    {"samples", rows}};
    return run;
}

}  // namespace fqt::report

#endif
