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

// Command line front end.
//
//   fqt ramify --field F3 --form "<<T; 1]]"
//   fqt realize --field F5 --places "(T),(T+1)" --json
//   fqt jacoblem --field F5 --identity 2 --S "(T)" --c "1/T^2"
//   fqt selftest
//
// Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "acceptance_suite.hpp"
#include "reports.hpp"

namespace {

using fqt::report::Json;

constexpr const char* kGrammar =
    "field:   F<q> with q a prime power, e.g. F9\n"
    "element: polynomials in T (and g over non-prime fields) with + - * / ^, e.g. (T^2+1)/(T-1)\n"
    "place:   inf or a monic irreducible polynomial, e.g. (T^2+1)\n"
    "places:  comma separated, e.g. \"(T),inf,(T+1)\"\n"
    "form:    <<a; b]], e.g. \"<<T; 1/(T+1)]]\"\n";

struct Config {
    std::string field;
    std::string form;
    std::string place;
    std::string places;
    std::string units;
    std::string s;
    std::string c;
    std::string w;
    int identity = 1;
    std::optional<int> samples;
    std::uint64_t seed = 0;
    std::optional<int> degree_bound;
    bool json = false;
};

int usage_exit(fqt::ErrorKind k) {
    switch (k) {
        case fqt::ErrorKind::SearchExhausted:
        case fqt::ErrorKind::ReciprocityViolation: return 1;
        default: return 2;
    }
}

fqt::Field need_field(const Config& cfg) {
    if (cfg.field.empty()) throw fqt::Error(fqt::ErrorKind::InvalidArgument, "--field is required");
    return fqt::parse_field(cfg.field);
}

fqt::PfisterForm need_form(const fqt::Field& f, const Config& cfg) {
    if (cfg.form.empty()) throw fqt::Error(fqt::ErrorKind::InvalidArgument, "--form is required");
    return fqt::parse_form(f, cfg.form);
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
    if (cfg.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_ramify(const Config& cfg) {
    const auto f = need_field(cfg);
    const auto q = need_form(f, cfg);
    const auto d = fqt::delta(q);
    emit(cfg, Json{{"form", fqt::report::form_json(q)}, {"delta", fqt::report::places_json(d)}},
         "delta(" + fqt::to_string(q) + ") = " + fqt::to_string(d) + "\n");
    return 0;
}

int cmd_residue(const Config& cfg) {
    const auto f = need_field(cfg);
    const auto q = need_form(f, cfg);
    if (cfg.place.empty()) throw fqt::Error(fqt::ErrorKind::InvalidArgument, "--place is required");
    const auto v = fqt::parse_place(f, cfg.place);
    const auto ev = fqt::residue_evidence(q, v);
    emit(cfg, fqt::report::evidence_json(q, ev),
         "residue of " + fqt::to_string(q) + " at " + fqt::to_string(v) + ": " + std::to_string(ev.bit) + " (" + ev.rule + "; " +
             ev.detail + ")\n");
    return 0;
}

std::string reciprocity_text(const fqt::ReciprocityReport& r) {
    std::string out = "form " + fqt::to_string(r.form) + "\ndelta " + fqt::to_string(r.delta) + "\n";
    for (const auto& [v, cls] : r.residues)
        out += "  " + fqt::to_string(v) + " over F" + std::to_string(cls.residue_field->size()) + ": " + std::to_string(cls.bit) + "\n";
    out += "transferred sum " + std::to_string(r.transferred_sum) + "\n";
    return out;
}

int cmd_reciprocity(const Config& cfg) {
    const auto f = need_field(cfg);
    const auto r = fqt::reciprocity_check(need_form(f, cfg));
    emit(cfg, fqt::report::reciprocity_json(r), reciprocity_text(r));
    return r.transferred_sum == 0 ? 0 : 1;
}

int cmd_realize(const Config& cfg) {
    const auto f = need_field(cfg);
    const auto s = fqt::parse_places(f, cfg.places);
    const auto u = fqt::parse_places(f, cfg.units);
    fqt::RealizeOptions opt;
    opt.seed = cfg.seed;
    if (cfg.degree_bound) opt.degree_cap = *cfg.degree_bound;
    const auto q = fqt::realize(f, s, u, opt);
    const auto r = fqt::reciprocity_check(q);
    const bool ok = r.delta == s && fqt::detail::units_on(q, u);
    Json j = fqt::report::reciprocity_json(r);
    j["verified"] = ok;
    emit(cfg, j, fqt::to_string(q) + (ok ? "  verified\n" : "  NOT verified\n"));
    return ok ? 0 : 1;
}

int cmd_jacoblem(const Config& cfg) {
    const auto f = need_field(cfg);
    const auto s = fqt::parse_places(f, cfg.s);
    std::optional<fqt::RatFunc> c;
    if (!cfg.c.empty()) c = fqt::parse_element(f, cfg.c);
    const auto rep = fqt::jacoblem_verify(f, s, cfg.identity, c, cfg.samples.value_or(200), cfg.seed, cfg.degree_bound.value_or(3));
    std::string text;
    for (const auto& smp : rep.samples)
        if (!smp.ok) text += "counterexample (" + smp.direction + "): x = " + smp.x + "; " + smp.witness + "\n";
    text += "identity " + std::to_string(rep.identity) + " on S = " + fqt::to_string(s) + ": " + std::to_string(rep.samples.size()) +
            " samples, " + std::to_string(rep.failures()) + " counterexamples\n";
    emit(cfg, fqt::report::jacob_json(rep), text);
    return rep.failures() == 0 ? 0 : 1;
}

int cmd_stratum(const Config& cfg) {
    const auto f = need_field(cfg);
    const auto s = fqt::parse_places(f, cfg.s);
    if (cfg.w.empty()) throw fqt::Error(fqt::ErrorKind::InvalidArgument, "--w is required");
    const auto w = fqt::parse_place(f, cfg.w);
    const auto t = fqt::stratum_witness(w, s);
    const Json j = fqt::report::stratum_json(t, s, w);
    emit(cfg, j, "(" + fqt::to_string(t.a) + ", " + fqt::to_string(t.b) + ")  delta " + fqt::to_string(fqt::delta(fqt::PfisterForm(t.a, t.b))) + "\n");
    return j["stratum_member"].get<bool>() ? 0 : 1;
}

int cmd_sintegers(const Config& cfg) {
    const auto f = need_field(cfg);
    const auto s = fqt::parse_places(f, cfg.s);
    const auto run = fqt::report::sintegers_run(f, s, cfg.samples.value_or(300), cfg.seed, cfg.degree_bound.value_or(4));
    std::string text;
    for (const auto& row : run.json["samples"])
        if (row["direct"] != row["universal"]) text += "disagreement at x = " + row["x"].get<std::string>() + "\n";
    text += "S = " + fqt::to_string(s) + ": " + std::to_string(run.json["samples"].size()) + " samples, " +
            std::to_string(run.disagreements) + " disagreements\n";
    emit(cfg, run.json, text);
    return run.disagreements == 0 ? 0 : 1;
}

int cmd_selftest(const Config& cfg) {
    fqt::acceptance::Suite suite(cfg.seed);
    const auto results = suite.run_all(cfg.json ? nullptr : &std::cout);
    int failed = 0;
    Json j = Json::array();
    for (const auto& r : results) {
        failed += r.passed ? 0 : 1;
        j.push_back(Json{{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary}, {"report", r.report}});
    }
    if (cfg.json)
        std::cout << j.dump() << "\n";
    else
        std::cout << (failed == 0 ? "all criteria passed\n" : std::to_string(failed) + " criteria failed\n");
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic Pfister forms over rational function fields F_q(T)"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field, "Constant field, F<q>");
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        sub->add_option("--degree-bound", cfg.degree_bound, "Sampling degree bound (realize: search degree cap)");
        sub->add_flag("--json", cfg.json, "Emit JSON");
    };
    std::map<std::string, std::function<int(const Config&)>> handlers;
    auto add = [&](const std::string& name, const std::string& help, std::function<int(const Config&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub);
        handlers[name] = std::move(fn);
        return sub;
    };

    auto* ramify = add("ramify", "Ramification set of a form", cmd_ramify);
    ramify->add_option("--form", cfg.form, "Form <<a; b]]");
    auto* residue = add("residue", "Residue class of a form at one place", cmd_residue);
    residue->add_option("--form", cfg.form, "Form <<a; b]]");
    residue->add_option("--place", cfg.place, "Place");
    auto* recip = add("reciprocity-check", "Residues and their transferred sum", cmd_reciprocity);
    recip->add_option("--form", cfg.form, "Form <<a; b]]");
    auto* realize = add("realize", "Form with a prescribed ramification set", cmd_realize);
    realize->add_option("--places", cfg.places, "Ramification set");
    realize->add_option("--units", cfg.units, "Places where b and 1+4b must be units");
    auto* jacob = add("jacoblem", "Check one of the three set identities on samples", cmd_jacoblem);
    jacob->add_option("--identity", cfg.identity, "1, 2 or 3")->capture_default_str();
    jacob->add_option("--S", cfg.s, "Places defining R");
    jacob->add_option("--c", cfg.c, "Parameter c for identities 2 and 3");
    jacob->add_option("--samples", cfg.samples, "Samples per direction (default 200)");
    auto* stratum = add("stratum", "Stratum witness for S + {w}", cmd_stratum);
    stratum->add_option("--S", cfg.s, "Places, odd count");
    stratum->add_option("--w", cfg.w, "Place outside S");
    auto* sint = add("sintegers-check", "Compare direct and universal S-integer membership", cmd_sintegers);
    sint->add_option("--S", cfg.s, "Exceptional places");
    sint->add_option("--samples", cfg.samples, "Number of samples (default 300)");
    auto* self = add("selftest", "Run the acceptance suite", cmd_selftest);
    (void)self;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << kGrammar;
        return 2;
    }

    for (const auto& [name, fn] : handlers) {
        if (!app.got_subcommand(name)) continue;
        try {
            return fn(cfg);
        } catch (const fqt::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            const int code = usage_exit(e.kind());
            if (code == 2) std::cerr << kGrammar;
            return code;
        }
    }
    return 2;
}
