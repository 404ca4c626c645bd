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

// The ten acceptance criteria as one runnable suite. Each criterion yields a
// pass/fail verdict, a one-line summary and a deterministic JSON report.

#ifndef FQT_TOOLS_ACCEPTANCE_SUITE_HPP
#define FQT_TOOLS_ACCEPTANCE_SUITE_HPP

#include <chrono>
#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "reports.hpp"

namespace fqt::acceptance {

using report::Json;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string summary;
    Json report;
    double seconds = 0;
};

class Suite {
   public:
    explicit Suite(std::uint64_t seed = 0) : seed_(seed) {}

    static constexpr int kCount = 10;

    CriterionResult run(int id) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = id;
        try {
            switch (id) {
                case 1: reciprocity_complex(r); break;
                case 2: realization_round_trip(r); break;
                case 3: symbol_oracle_agreement(r); break;
                case 4: char_two_consistency(r); break;
                case 5: jacoblem_identities(r); break;
                case 6: s_integers_equivalence(r); break;
                case 7: transfer_independence(r); break;
                case 8: residue_transfer_commutation(r); break;
                case 9: support_bound(r); break;
                case 10: determinism(r); break;
                default: throw Error(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
            }
        } catch (const Error& e) {
            r.passed = false;
            r.summary = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

    std::vector<CriterionResult> run_all(std::ostream* log = nullptr) {
        std::vector<CriterionResult> out;
        for (int id = 1; id <= kCount; ++id) {
            out.push_back(run(id));
            if (id < kCount) remember(out.back());
            if (log) *log << line(out.back()) << std::endl;
        }
        return out;
    }

    static std::string line(const CriterionResult& r) {
        std::ostringstream os;
        os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " " << r.title << ": " << r.summary;
        os.setf(std::ios::fixed);
        os.precision(2);
        os << " (" << r.seconds << " s)";
        return os.str();
    }

   private:
    struct FormRecord {
        PfisterForm q;
        RamSet delta;
    };

    std::mt19937_64 rng_for(int id, std::uint64_t salt = 0) const {
        std::seed_seq seq{seed_, static_cast<std::uint64_t>(id), salt};
        return std::mt19937_64(seq);
    }

    static Field F(std::uint64_t q) { return make_field_of_order(q); }
    static RatFunc one_plus_4b(const RatFunc& b) {
        return RatFunc::one(b.field()) + RatFunc::constant(b.field(), b.field()->from_int(4)) * b;
    }
    static bool valid_slot(const RatFunc& b) { return b.field()->p() == 2 || !one_plus_4b(b).is_zero(); }

    // 1: |delta| even and the transferred residue sum vanishes.
    void reciprocity_complex(CriterionResult& r) {
        r.title = "reciprocity complex";
        const auto start = std::chrono::steady_clock::now();
        int bad = 0, total = 0;
        Json fields = Json::array();
        for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
            const Field f = F(q);
            auto rng = rng_for(1, q);
            Json forms = Json::array();
            for (int i = 0; i < 500; ++i) {
                const RatFunc a = sample_element(rng, f, 4);
                RatFunc b = sample_element(rng, f, 4);
                while (!valid_slot(b)) b = sample_element(rng, f, 4);
                const PfisterForm qf(a, b);
                ++total;
                try {
                    const ReciprocityReport rep = reciprocity_check(qf);
                    int bits = 0;
                    for (const auto& [v, cls] : rep.residues) bits += cls.bit;
                    if (rep.transferred_sum != 0 || rep.delta.size() % 2 != 0 || bits % 2 != 0) ++bad;
                    forms_.push_back({qf, rep.delta});
                    forms.push_back(report::reciprocity_json(rep));
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::ReciprocityViolation) throw;
                    ++bad;
                    forms.push_back(Json{{"form", report::form_json(qf)}, {"error", e.what()}});
                }
            }
            fields.push_back(Json{{"field", "F" + std::to_string(q)}, {"forms", forms}});
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.passed = bad == 0 && secs < 120.0;
        r.summary = std::to_string(total) + " forms, " + std::to_string(bad) + " violations";
        if (secs >= 120.0) r.summary += ", over the 120 s budget";
        r.report = Json{{"violations", bad}, {"fields", fields}};
    }

    // 2: delta(realize(S, {})) = S for even S of sizes 2 and 4.
    void realization_round_trip(CriterionResult& r) {
        r.title = "realization round trip";
        int bad = 0, slow = 0, total = 0;
        double worst = 0;
        Json fields = Json::array();
        for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
            const Field f = F(q);
            auto rng = rng_for(2, q);
            const auto places = places_up_to(f, 3);
            Json rows = Json::array();
            for (int i = 0; i < 100; ++i) {
                const std::size_t size = i % 2 == 0 ? 2 : 4;
                PlaceSet s;
                while (s.size() < size) {
                    const Place& v = places[rng() % places.size()];
                    if (!contains(s, v)) s = make_place_set([&] { auto t = s; t.push_back(v); return t; }());
                }
                const auto start = std::chrono::steady_clock::now();
                const PfisterForm qf = realize(f, s, {});
                const RamSet d = delta(qf);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                worst = std::max(worst, secs);
                ++total;
                if (d != s) ++bad;
                if (secs >= 2.0) ++slow;
                forms_.push_back({qf, d});
                rows.push_back(Json{{"S", report::places_json(s)}, {"form", report::form_json(qf)}, {"delta", report::places_json(d)}});
            }
            fields.push_back(Json{{"field", "F" + std::to_string(q)}, {"sets", rows}});
        }
        r.passed = bad == 0 && slow == 0;
        std::ostringstream os;
        os.precision(3);
        os << total << " sets, " << bad << " mismatches, " << slow << " over 2 s, slowest " << worst << " s";
        r.summary = os.str();
        r.report = Json{{"mismatches", bad}, {"fields", fields}};
    }

    // 3: tame symbol against the Springer decomposition, exhaustively.
    void symbol_oracle_agreement(CriterionResult& r) {
        r.title = "symbol oracle agreement";
        long long total = 0, bad = 0;
        local_bound_violations_ = 0;
        Json fields = Json::array();
        for (std::uint64_t q : {3u, 5u}) {
            const Field f = F(q);
            std::vector<RatFunc> pool;
            for (std::uint64_t idx = 1; idx < q * q * q; ++idx) pool.emplace_back(Poly::from_index(f, idx));
            Json rows = Json::array();
            for (const auto& v : places_up_to(f, 2)) {
                std::vector<RatFunc> cand;
                for (const auto& e : pool)
                    if (valuation(e, v) == 0) cand.push_back(e);
                const std::size_t units = cand.size();
                for (std::size_t i = 0; i < units; ++i) cand.push_back(cand[i] * v.uniformizer());
                long long here = 0, bad_here = 0;
                for (const auto& a : cand)
                    for (const auto& c : cand) {
                        const int sym = tame_symbol(a, c, v);
                        const bool aniso = springer_oracle(a, c, v);
                        ++here;
                        if ((sym == -1) != aniso) ++bad_here;
                        if (sym == -1 && valuation(a, v) % 2 == 0 && valuation(c, v) % 2 == 0) ++local_bound_violations_;
                    }
                total += here;
                bad += bad_here;
                rows.push_back(Json{{"place", to_string(v)}, {"pairs", here}, {"disagreements", bad_here}});
            }
            fields.push_back(Json{{"field", "F" + std::to_string(q)}, {"places", rows}});
        }
        r.passed = bad == 0;
        r.summary = std::to_string(total) + " triples, " + std::to_string(bad) + " disagreements";
        r.report = Json{{"disagreements", bad}, {"fields", fields}};
    }

    static std::vector<RatFunc> rational_slots(const Field& f, int max_deg) {
        std::vector<RatFunc> out;
        const std::uint64_t bound = detail::ipow(f->size(), static_cast<std::uint64_t>(max_deg) + 1);
        for (std::uint64_t n = 1; n < bound; ++n) {
            const Poly num = Poly::from_index(f, n);
            for (std::uint64_t d = 1; d < bound; ++d) {
                const Poly den = Poly::from_index(f, d);
                if (den.lc() != 1 || !gcd(num, den).is_one()) continue;
                out.emplace_back(num, den);
            }
        }
        return out;
    }

    // 4: characteristic 2 residue rules agree and the product formula holds.
    void char_two_consistency(CriterionResult& r) {
        r.title = "characteristic-2 residue consistency";
        long long forms = 0, compared = 0, disagree = 0, product = 0;
        Json fields = Json::array();
        auto check = [&](const PfisterForm& qf) {
            ++forms;
            const ReciprocityReport rep = reciprocity_check(qf);
            if (rep.transferred_sum != 0) ++product;
            for (const auto& v : delta_candidates(qf)) {
                const RatFunc b2 = as_reduce(qf.b(), v);
                if (!b2.is_zero() && valuation(b2, v) < 0) continue;
                ++compared;
                const int unit_rule = residue_evidence(qf, v).bit;
                const int swr = b2.is_zero() ? 0 : schmidt_witt_residue(qf.a(), b2, v);
                if (unit_rule != swr) ++disagree;
            }
            forms_.push_back({qf, rep.delta});
        };
        {
            const Field f2 = F(2);
            const auto slots = rational_slots(f2, 3);
            for (const auto& a : slots) {
                check(PfisterForm(a, RatFunc::zero(f2)));
                for (const auto& b : slots) check(PfisterForm(a, b));
            }
            fields.push_back(Json{{"field", "F2"}, {"slots", slots.size()}, {"forms", forms}});
        }
        {
            const Field f4 = F(4);
            const long long before = forms;
            for (std::uint64_t a = 1; a < 256; ++a)
                for (std::uint64_t b = 0; b < 256; ++b) check(PfisterForm(RatFunc(Poly::from_index(f4, a)), RatFunc(Poly::from_index(f4, b))));
            auto rng = rng_for(4, 4);
            for (int i = 0; i < 3000; ++i) check(PfisterForm(sample_element(rng, f4, 3), sample_element(rng, f4, 3)));
            fields.push_back(Json{{"field", "F4"}, {"forms", forms - before}});
        }
        r.passed = disagree == 0 && product == 0;
        r.summary = std::to_string(forms) + " forms, " + std::to_string(compared) + " shared places, " +
                    std::to_string(disagree) + " rule disagreements, " + std::to_string(product) + " product-formula failures";
        r.report = Json{{"compared", compared}, {"disagreements", disagree}, {"product_failures", product}, {"fields", fields}};
    }

    static std::vector<PlaceSet> jacob_sets(const Field& f) {
        const Place inf = Place::infinity(f);
        const Place t = Place::finite(Poly::t(f));
        const Place t1 = Place::finite(Poly(f, {1, 1}));
        const Place p2 = Place::finite_unchecked(irreducibles_of_degree(f, 2).front());
        return {{inf}, {p2}, make_place_set({t, inf}), make_place_set({t1, p2}), make_place_set({t, t1, inf})};
    }

    // 5: the three identities, both directions, with verified witnesses.
    void jacoblem_identities(CriterionResult& r) {
        r.title = "jacoblem identities";
        int runs = 0, failures = 0;
        Json rows = Json::array();
        for (std::uint64_t q : {3u, 5u}) {
            const Field f = F(q);
            auto rng = rng_for(5, q);
            for (const auto& s : jacob_sets(f))
                for (int id = 1; id <= 3; ++id) {
                    std::optional<RatFunc> c;
                    if (id > 1) {
                        std::vector<int> vals;
                        for (std::size_t i = 0; i < s.size(); ++i) vals.push_back(static_cast<int>(rng() % 7) - 3);
                        c = detail::with_valuations(sample_element(rng, f, 2), s, vals);
                    }
                    const JacobReport rep = jacoblem_verify(f, s, id, c, 200, rng());
                    ++runs;
                    failures += rep.failures();
                    Json j = report::jacob_json(rep);
                    j.erase("samples");
                    j["field"] = "F" + std::to_string(q);
                    j["samples_per_direction"] = 200;
                    rows.push_back(j);
                }
        }
        r.passed = failures == 0;
        r.summary = std::to_string(runs) + " runs of 400 samples, " + std::to_string(failures) + " counterexamples";
        r.report = Json{{"failures", failures}, {"runs", rows}};
    }

    // 6: direct and universal S-integer membership agree.
    void s_integers_equivalence(CriterionResult& r) {
        r.title = "S-integers equivalence";
        int disagreements = 0, misclassified = 0, total = 0;
        Json rows = Json::array();
        for (std::uint64_t q : {3u, 5u}) {
            const Field f = F(q);
            const Place inf = Place::infinity(f), t = Place::finite(Poly::t(f)), t1 = Place::finite(Poly(f, {1, 1}));
            int k = 0;
            for (const PlaceSet& s : {PlaceSet{inf}, make_place_set({t, inf}), make_place_set({t, t1, inf})}) {
                auto rng = rng_for(6, q * 16 + static_cast<std::uint64_t>(k++));
                const report::SIntegerRun run = report::sintegers_run(f, s, 300, rng(), 4);
                disagreements += run.disagreements;
                misclassified += run.misclassified_polynomials;
                total += 300;
                rows.push_back(run.json);
            }
        }
        r.passed = disagreements == 0 && misclassified == 0;
        r.summary = std::to_string(total) + " samples, " + std::to_string(disagreements) + " disagreements, " +
                    std::to_string(misclassified) + " misclassified for S = {inf}";
        r.report = Json{{"disagreements", disagreements}, {"misclassified", misclassified}, {"runs", rows}};
    }

    // 7: the explicit transfer ignores the functional and hits the nontrivial class.
    void transfer_independence(CriterionResult& r) {
        r.title = "transfer functional independence";
        int bad = 0;
        Json rows = Json::array();
        for (std::uint64_t q : {2u, 3u, 5u}) {
            const Field big = F(q * q);
            auto rng = rng_for(7, q);
            std::uint64_t bi = 0;
            while ((q != 2 && FFElem::one(big) + FFElem(big, big->from_int(4)) * FFElem(big, bi) == FFElem::zero(big)) ||
                   one_fold_class(FFElem(big, bi)) != 1)
                ++bi;
            const FFElem b(big, bi);
            Json bits = Json::array();
            for (int i = 0; i < 20; ++i) {
                std::vector<std::uint64_t> fn(big->m());
                do {
                    for (auto& c : fn) c = rng() % q;
                } while (std::all_of(fn.begin(), fn.end(), [](std::uint64_t c) { return c == 0; }));
                const int bit = transfer_explicit(b, fn).bit;
                if (bit != 1) ++bad;
                bits.push_back(Json{{"functional", fn}, {"bit", bit}});
            }
            rows.push_back(Json{{"extension", "F" + std::to_string(q * q) + "/F" + std::to_string(q)}, {"slot", to_string(b)}, {"transfers", bits}});
        }
        r.passed = bad == 0;
        r.summary = "60 functionals, " + std::to_string(bad) + " outputs differing from the nontrivial class";
        r.report = Json{{"bad", bad}, {"extensions", rows}};
    }

    // 8: residue then transfer along the constant extension agrees with transfer then residue.
    void residue_transfer_commutation(CriterionResult& r) {
        r.title = "residue-transfer commutation";
        int bad = 0, checks = 0;
        Json rows = Json::array();
        for (std::uint64_t q : {3u, 5u}) {
            const Field f = F(q), big = F(q * q);
            auto rng = rng_for(8, q);
            const auto places = places_up_to(f, 2);
            for (int i = 0; i < 50; ++i) {
                const RatFunc a = sample_element(rng, f, 3);
                RatFunc b = sample_element(rng, f, 3);
                while (!valid_slot(b)) b = sample_element(rng, f, 3);
                const PfisterForm qf(a, b);
                const PfisterForm qe = extend_scalars(qf, big);
                int local_bad = 0;
                for (const auto& v : places) {
                    const int bit_v = residue_class(qf, v).bit;
                    int up = 0;
                    for (const auto& w : places_above(v, big)) {
                        const int fdeg = w.degree() * 2 / v.degree();
                        const GradedWittClass cw = residue_class(qe, w);
                        if (cw.bit != (fdeg % 2 == 1 ? bit_v : 0)) ++local_bad;
                        up ^= transfer_class(cw, residue_field(v)).bit;
                    }
                    // transfer first: the extended form transfers to 2 q, whose residue vanishes
                    const int down = (2 * bit_v) % 2;
                    ++checks;
                    if (up != down) ++local_bad;
                }
                bad += local_bad;
                rows.push_back(Json{{"field", "F" + std::to_string(q)}, {"form", report::form_json(qf)}, {"mismatches", local_bad}});
            }
        }
        r.passed = bad == 0;
        r.summary = std::to_string(checks) + " place checks, " + std::to_string(bad) + " mismatches";
        r.report = Json{{"mismatches", bad}, {"forms", rows}};
    }

    // 9: delta(q) lies in the odd-valuation and pole profile of the slots.
    void support_bound(CriterionResult& r) {
        r.title = "support bound";
        if (forms_.empty())
            for (int id : {1, 2, 3, 4}) run(id);
        long long bad = 0;
        for (const auto& [qf, d] : forms_) {
            PlaceSet allowed = odd_places(qf.a());
            const PlaceSet extra = qf.mode() == CharMode::Odd ? odd_places(qf.c()) : (qf.b().is_zero() ? PlaceSet{} : neg_places(qf.b()));
            allowed.insert(allowed.end(), extra.begin(), extra.end());
            allowed = make_place_set(std::move(allowed));
            for (const auto& v : d)
                if (!contains(allowed, v)) {
                    ++bad;
                    break;
                }
        }
        r.passed = bad == 0 && local_bound_violations_ == 0;
        r.summary = std::to_string(forms_.size()) + " forms and the local triples, " + std::to_string(bad + local_bound_violations_) + " violations";
        r.report = Json{{"forms", forms_.size()}, {"violations", bad}, {"local_violations", local_bound_violations_}};
    }

    // 10: a fresh suite with the same seed reproduces every report byte for byte.
    void determinism(CriterionResult& r) {
        r.title = "determinism";
        if (first_reports_.empty())
            for (int id = 1; id <= 9; ++id) first_reports_[id] = run(id).report.dump();
        Suite again(seed_);
        int differing = 0;
        Json rows = Json::array();
        for (int id = 1; id <= 9; ++id) {
            const std::string dump = again.run(id).report.dump();
            const bool same = dump == first_reports_[id];
            if (!same) ++differing;
            rows.push_back(Json{{"criterion", id}, {"bytes", dump.size()}, {"identical", same}});
        }
        r.passed = differing == 0;
        r.summary = "9 reports re-run with seed " + std::to_string(seed_) + ", " + std::to_string(differing) + " differ";
        r.report = Json{{"differing", differing}, {"reports", rows}};
    }

   public:
    /// Records a report produced by run_all so determinism can compare against it.
    void remember(const CriterionResult& r) { first_reports_[r.id] = r.report.dump(); }

   private:
    std::uint64_t seed_;
    std::vector<FormRecord> forms_;
    long long local_bound_violations_ = 0;
    std::map<int, std::string> first_reports_;
};

}  // namespace fqt::acceptance

#endif
