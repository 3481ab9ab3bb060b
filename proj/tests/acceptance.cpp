// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: lcy_acceptance [path/to/lcy_tests]

#include "lcy/report.hpp"
#include "lcy/samples.hpp"
#include "lcy/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace lcy;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures.size() < 8) failures.push_back(what);
    }
};

// Toric configurations met by criteria 1-6, re-checked by criterion 7.
std::vector<std::pair<SymplecticClass, CyclicConfig>> toric_seen;
std::set<std::string> toric_seen_keys;

void remember(const SymplecticClass& w, const EnumerationResult& r) {
    for (auto& c : r.toric)
        if (toric_seen_keys.insert(w.space.name() + w.str() + canonical_key(c)).second) toric_seen.push_back({w, c});
}

std::string label(const SymplecticClass& w) { return w.space.name() + " " + w.str(); }

SymplecticClass M(std::vector<Rational> d) { return SymplecticClass::blowup(std::move(d)); }
Rational R(int64_t p, int64_t q) { return Rational(p, q); }

std::vector<SymplecticClass> kkp_points;

void criterion_1(Outcome& o) {
    struct Case {
        SymplecticClass w;
        int64_t paper;
    };
    std::vector<Case> cases{{SymplecticClass::cp2(), 3},
                            {SymplecticClass::quadric(1), 5},
                            {SymplecticClass::quadric(R(3, 2)), 9},
                            {SymplecticClass::quadric(2), 9},
                            {SymplecticClass::quadric(R(7, 3)), 12},
                            {M({R(1, 2)}), 7},
                            {M({R(2, 3)}), 10}};
    auto t0 = std::chrono::steady_clock::now();
    for (auto& c : cases) {
        auto r = enumerate_lcy(c.w);
        remember(c.w, r);
        const int64_t f = count_minimal(c.w);
        o.expect(f == c.paper, label(c.w) + ": formula " + std::to_string(f) + " vs " + std::to_string(c.paper));
        o.expect(r.count() == f, label(c.w) + ": enumerator " + std::to_string(r.count()) + " vs formula " + std::to_string(f));
        if (!c.w.space.is_quadric()) {
            auto s = enumerate_by_search(c.w);
            o.expect(s.count() == f, label(c.w) + ": catalog search " + std::to_string(s.count()));
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s >= 1 s");
    o.detail << cases.size() << " classes, formula = enumerator";
}

void criterion_2(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto samples = m2_region_samples();
    std::map<std::string, int> per_region;
    for (auto& s : samples) {
        auto r = enumerate_lcy(s.w);
        remember(s.w, r);
        kkp_points.push_back(s.w);
        const std::string region = s.tag == "OM" ? "OM" : s.tag + "[i=" + std::to_string(s.i) + "]";
        per_region[region]++;
        o.expect(classify_m2(s.w).str() == region, label(s.w) + ": classified as " + classify_m2(s.w).str());
        const int64_t g = count_m2_general(s.w), t = count_m2_toric(s.w);
        if (s.tag == "OM") {
            o.expect(g == 13 && t == 1, label(s.w) + ": OM formula values");
        } else {
            Rational d1 = s.w.d(1), d2 = s.w.d(2);
            int64_t ceil_sum = to_int64(ceil_of(d1 / (1 - d1))) + to_int64(ceil_of((d1 - d2) / (1 - d1)));
            o.expect(g == 7 * ceil_sum + 12 && t == ceil_sum, label(s.w) + ": closed form");
        }
        o.expect(r.count() == g, label(s.w) + ": general " + std::to_string(r.count()) + " vs " + std::to_string(g));
        o.expect(r.toric_count() == t, label(s.w) + ": toric " + std::to_string(r.toric_count()) + " vs " + std::to_string(t));
    }
    for (int i = 1; i <= 4; ++i) o.expect(per_region["PPQ[i=" + std::to_string(i) + "]"] > 0, "no sample in PPQ i=" + std::to_string(i));
    for (int i = 0; i <= 4; ++i) o.expect(per_region["QQP[i=" + std::to_string(i) + "]"] > 0, "no sample in QQP i=" + std::to_string(i));
    o.expect(per_region["OM"] > 0, "no sample on OM");
    o.expect(samples.size() >= 200, "fewer than 200 points");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s");
    o.detail << samples.size() << " points in " << per_region.size() << " regions";
}

void criterion_3(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::set<std::string> families;
    int n = 0;
    for (auto& s : m3_family_samples()) {
        auto r = enumerate_lcy(s.w, true);
        remember(s.w, r);
        kkp_points.push_back(s.w);
        RegionLabel stated{s.tag, s.i};
        const int64_t v = m3_region_value(stated);
        o.expect(r.toric_count() == v, label(s.w) + " family " + stated.str() + ": enumerator " +
                                           std::to_string(r.toric_count()) + " vs " + std::to_string(v));
        o.expect(classify_m3(s.w).str() == stated.str(), label(s.w) + ": classified as " + classify_m3(s.w).str());
        families.insert(stated.str());
        ++n;
    }
    for (int f = 1; f <= 11; ++f)
        for (int i = 1; i <= 2; ++i)
            o.expect(families.count(RegionLabel{std::to_string(f), i}.str()) > 0,
                     "family " + std::to_string(f) + " i=" + std::to_string(i) + " unsampled");
    for (int f = 12; f <= 14; ++f) o.expect(families.count(std::to_string(f)) > 0, "family " + std::to_string(f) + " unsampled");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 120.0, "runtime " + std::to_string(secs) + " s");
    o.detail << n << " points, " << families.size() << " family/index pairs";
}

void criterion_4(Outcome& o) {
    double l4_secs = 0;
    int exact = 0, bounds = 0;
    for (int l = 2; l <= 4; ++l) {
        auto t0 = std::chrono::steady_clock::now();
        for (auto& w : restrictive_samples(l, 10, 4000 + static_cast<uint32_t>(l))) {
            auto r = enumerate_lcy(w);
            remember(w, r);
            kkp_points.push_back(w);
            auto g = restrictive_count_general(w), t = restrictive_count_toric(w);
            o.expect(g.exact && t.exact, label(w) + ": not flagged exact");
            o.expect(g.value == r.count(), label(w) + ": general " + std::to_string(g.value) + " vs " + std::to_string(r.count()));
            o.expect(t.value == r.toric_count(),
                     label(w) + ": toric " + std::to_string(t.value) + " vs " + std::to_string(r.toric_count()));
            ++exact;
        }
        if (l == 4) l4_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    // every interior point of M3 is restrictive, so the strict bounds start at l = 4
    for (int l = 4; l <= 4; ++l)
        for (auto& w : nonrestrictive_interior_samples(l, 6, 4100 + static_cast<uint32_t>(l))) {
            auto r = enumerate_lcy(w);
            remember(w, r);
            kkp_points.push_back(w);
            auto g = restrictive_count_general(w), t = restrictive_count_toric(w);
            o.expect(!g.exact, label(w) + ": flagged exact");
            o.expect(g.value > r.count(), label(w) + ": bound " + std::to_string(g.value) + " vs " + std::to_string(r.count()));
            o.expect(t.value >= r.toric_count(), label(w) + ": toric bound below the enumerator");
            ++bounds;
        }
    o.expect(exact >= 30, "fewer than 10 restrictive points per l");
    o.expect(bounds >= 5, "fewer than 5 non-restrictive points");
    o.expect(l4_secs < 300.0, "l=4 runtime " + std::to_string(l4_secs) + " s");
    o.detail << exact << " restrictive points exact, " << bounds << " non-restrictive strict bounds";
}

void criterion_5(Outcome& o) {
    for (auto& w : random_reduced_samples(4, 6, 5004)) kkp_points.push_back(w);
    int n = 0;
    for (auto& w : kkp_points) {
        if (w.space.is_quadric() || w.space.l < 2 || w.space.l > 4 || !is_c1_nef(w)) continue;
        auto r = enumerate_lcy(w, true);
        remember(w, r);
        const int64_t b = kkp_upper_bound(w.space.l, w.d(1), w.d(2));
        o.expect(r.toric_count() <= b, label(w) + ": toric " + std::to_string(r.toric_count()) + " > bound " + std::to_string(b));
        ++n;
    }
    auto w = M({R(6, 15), R(5, 15), R(4, 15)});
    auto r = enumerate_lcy(w, true);
    o.expect(r.toric_count() == 4, "toric count at (6/15,5/15,4/15) is " + std::to_string(r.toric_count()));
    o.detail << n << " points within the bound; toric count at (6/15,5/15,4/15) = " << r.toric_count();
}

void criterion_6(Outcome& o) {
    std::map<std::string, int> per_tag;
    for (int l = 4; l <= 5; ++l)
        for (auto& s : toric_region_samples(l)) {
            const bool deleted = s.tag == "MO" || s.tag == "MA" || s.tag == "MOD" || s.tag == "MAD" || s.tag == "MOX";
            auto r = enumerate_lcy(s.w, true);
            remember(s.w, r);
            per_tag[std::to_string(l) + ":" + s.tag]++;
            if (deleted) o.expect(r.toric_count() == 0, label(s.w) + " on " + s.tag + ": toric " + std::to_string(r.toric_count()));
            else o.expect(r.toric_count() >= 1, label(s.w) + " (" + s.tag + "): no toric configuration");
            o.expect(toric_region_member(s.w) == (r.toric_count() > 0), label(s.w) + ": predicate disagrees");
        }
    o.expect(per_tag["4:MO"] >= 5 && per_tag["4:MA"] >= 5 && per_tag["4:interior"] >= 10, "too few l=4 samples");
    o.expect(per_tag["5:MOD"] >= 3 && per_tag["5:MAD"] >= 3 && per_tag["5:MOX"] >= 3 && per_tag["5:XOA"] >= 1 &&
                 per_tag["5:interior"] >= 1,
             "too few l=5 samples");
    for (auto& [k, v] : per_tag) o.detail << k << "=" << v << " ";
}

void criterion_7(Outcome& o) {
    int gs_violations = 0;
    for (auto& [w, c] : toric_seen) {
        const std::string in = label(w) + " " + c.str();
        auto s = self_intersection_seq(c);
        auto a = area_seq(c, w);
        auto g = generating_set(s);
        Rational sx = 0, sy = 0;
        for (int i = 0; i < c.length(); ++i) {
            sx += a[static_cast<size_t>(i)] * g.at(i + 1).x;
            sy += a[static_cast<size_t>(i)] * g.at(i + 1).y;
        }
        o.expect(sx == 0 && sy == 0, in + ": sum a_i d_i != 0");
        o.expect(g.closes() && g.unimodular(), in + ": generating set");
        o.expect(g.winding_number() == 1, in + ": winding " + std::to_string(g.winding_number()));
        DelzantPolygon p;
        try {
            p = build_polygon(c, w);
        } catch (const DelzantError& e) {
            o.expect(false, in + ": " + e.what());
            continue;
        }
        o.expect(is_delzant(p), in + ": not Delzant");
        o.expect(same_up_to_dihedral(boundary_data(p), boundary_data(c, w)), in + ": boundary data round trip");
        o.expect(monodromy(s) == identity2(), in + ": monodromy");
        if (!gs_solve(c, w).positive) ++gs_violations;
    }
    o.expect(gs_violations == 0, std::to_string(gs_violations) + " positive GS violations");
    o.detail << toric_seen.size() << " toric configurations, " << gs_violations << " GS violations";
}

void criterion_8(Outcome& o) {
    std::vector<SymplecticClass> pts{SymplecticClass::cp2(), SymplecticClass::quadric(1), SymplecticClass::quadric(2),
                                     M({R(1, 3)}), M({R(1, 2)})};
    auto m2 = m2_region_samples();
    for (size_t i = 0; i < m2.size(); i += 10) pts.push_back(m2[i].w);
    int m2_points = 0;
    for (auto& w : pts) {
        auto r = realization_report(w);
        o.expect(r.uncovered.empty(), label(w) + ": " + std::to_string(r.uncovered.size()) + " uncovered");
        o.expect(r.closure_escapes == 0, label(w) + ": smoothing left the enumerated set");
        m2_points += !w.space.is_quadric() && w.space.l == 2;
    }
    o.expect(m2_points >= 20, "fewer than 20 M2 points");

    auto w = M({R(6, 15), R(5, 15), R(4, 15)});
    auto sp = w.space;
    auto H = HomologyClass::H(sp);
    auto E = [&](int i) { return HomologyClass::E(sp, i); };
    CyclicConfig special(sp, {H - E(1) - E(2), E(2) - E(3), E(1) - E(2), H - E(1), H});
    o.expect(validate(special, w).ok, "special configuration is not valid");
    auto res = enumerate_lcy(w);
    auto it = res.representative_of.find(canonical_key(canonicalize(special)));
    o.expect(it != res.representative_of.end(), "special configuration missing from LCY");
    auto rep = realization_report(w);
    bool uncovered = false;
    if (it != res.representative_of.end())
        for (auto& c : rep.uncovered) uncovered |= canonical_key(c) == it->second;
    o.expect(uncovered, "special configuration is reached by smoothing");
    o.detail << pts.size() << " points fully covered (" << m2_points << " on M2); at (6/15,5/15,4/15) "
             << rep.uncovered.size() << " of " << rep.total << " uncovered, including the special configuration";
}

void criterion_9(Outcome& o) {
    std::vector<SymplecticClass> pts{SymplecticClass::quadric(1), SymplecticClass::quadric(2), SymplecticClass::quadric(3),
                                     M({R(1, 3)}), M({R(1, 2)}), M({R(2, 3)})};
    auto m2 = m2_region_samples();
    for (size_t i = 0; i < m2.size(); i += 20) pts.push_back(m2[i].w);
    auto m3 = m3_family_samples();
    for (size_t i = 0; i < m3.size(); i += 4) pts.push_back(m3[i].w);
    for (auto& w : restrictive_samples(4, 5, 9004)) pts.push_back(w);
    for (auto& w : restrictive_samples(5, 5, 9005)) pts.push_back(w);
    std::map<int, int> per_l;
    double worst = 0;
    size_t nodes = 0;
    for (auto& w : pts) {
        auto t0 = std::chrono::steady_clock::now();
        auto g = mutation_graph(w);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, secs);
        nodes += g.nodes.size();
        o.expect(is_connected(g), label(w) + ": graph with " + std::to_string(g.nodes.size()) + " nodes is not connected");
        o.expect(secs < 60.0, label(w) + ": build took " + std::to_string(secs) + " s");
        per_l[w.space.is_quadric() ? -1 : w.space.l]++;
    }
    o.expect(per_l[2] >= 10 && per_l[3] >= 10 && per_l[4] >= 5 && per_l[5] >= 5, "too few points per l");
    o.detail << pts.size() << " graphs (" << nodes << " nodes), slowest " << worst << " s";
}

void criterion_10(Outcome& o) {
    const std::vector<int64_t> seq{1, -2, -3, -3, -2, -3, -2};
    auto t = def_taut(seq);
    o.expect(t.verdict == TautResult::Verdict::NotTaut, "verdict " + t.str());
    o.expect(t.preimages.size() >= 2, "fewer than two preimages");
    PhiInput x{{2, 1, 3, 2, 1, 3}, {1, 2, 0, 0, 2, 0}}, y{{3, 1, 3, 1, 3, 1}, {0, 2, 0, 1, 0, 2}};
    for (auto& want : {x, y})
        o.expect(std::find(t.preimages.begin(), t.preimages.end(), want) != t.preimages.end(), "missing preimage " + want.str());
    int fam = 0;
    auto taut = [&](std::vector<int64_t> s) {
        ++fam;
        o.expect(def_taut(s).verdict == TautResult::Verdict::Taut, "family member not taut");
    };
    for (int64_t p = -5; p <= 3; ++p) taut({1, p});
    for (int64_t p = 1; p <= 3; ++p) taut({-1, -p});
    for (int64_t p = -5; p <= 1; ++p) taut({1, 1, p});
    for (int64_t p = -5; p <= 4; ++p) taut({0, p});
    int rel = 0;
    for (int64_t a = 2; a <= 4; ++a)
        for (int l = 2; l <= 6; ++l) {
            o.expect(lemma_relation_check(a, l).holds(), "relation fails at a=" + std::to_string(a) + " l=" + std::to_string(l));
            ++rel;
        }
    o.detail << t.str() << "; " << fam << " family members taut; " << rel << " relation identities";
}

void criterion_11(Outcome& o, const char* unit_tests) {
    auto a = run_selftest(), b = run_selftest();
    const std::string da = a.artifact.dump(), db = b.artifact.dump();
    o.expect(da == db, "selftest artifacts differ");
    o.expect(a.mismatches == 0, std::to_string(a.mismatches) + " selftest mismatches");
    for (auto& w : {M({R(1, 2), R(1, 5), R(1, 10)}), M({R(1, 3), R(1, 3), R(1, 3)}), M({R(7, 10), R(1, 5), R(1, 20), R(1, 40)})}) {
        auto one = enumeration_json(enumerate_lcy(w, false, 1)).dump();
        o.expect(enumeration_json(enumerate_lcy(w, false, 4)).dump() == one, label(w) + ": worker count changes output");
    }
    int code = -1;
    if (unit_tests) {
        const std::string cmd = std::string("\"") + unit_tests + "\" --minimal >/dev/null 2>&1";
        code = std::system(cmd.c_str());
        o.expect(code == 0, "property suite failed");
    }
    o.detail << a.checks << " selftest checks, artifact digest " << fnv1a_hex(da) << " twice; property suite "
             << (unit_tests ? (code == 0 ? "passed" : "failed") : "not run (no path given)");
    o.expect(unit_tests != nullptr, "property suite path not given");
}

}  // namespace

int main(int argc, char** argv) {
    const char* unit_tests = argc > 1 ? argv[1] : nullptr;
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all{
        {1, "minimal-model counts", criterion_1},
        {2, "M2 full sweep", criterion_2},
        {3, "M3 toric sweep", criterion_3},
        {4, "restrictive-formula oracle", criterion_4},
        {5, "KKP bound", criterion_5},
        {6, "toric regions", criterion_6},
        {7, "Delzant round trip", criterion_7},
        {8, "smoothing-closure realization", criterion_8},
        {9, "mutation connectivity", criterion_9},
        {10, "tautness", criterion_10},
        {11, "determinism and invariants", [&](Outcome& o) { criterion_11(o, unit_tests); }},
    };
    int failed = 0;
    for (auto& c : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char head[128];
        std::snprintf(head, sizeof head, "%s criterion %2d  %-30s %8.2f s  ", o.ok ? "PASS" : "FAIL", c.id, c.name, secs);
        std::cout << head << o.detail.str() << "\n";
        for (auto& f : o.failures) std::cout << "      " << f << "\n";
        failed += !o.ok;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all 11 criteria passed")) << "\n";
    return failed ? 1 : 0;
}
