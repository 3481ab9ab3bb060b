#include "lcy/selftest.hpp"

#include "lcy/samples.hpp"

namespace lcy {

namespace {

struct Section {
    std::string name;
    Json rows = Json::array();
    int checks = 0, mismatches = 0;

    void check(const std::string& what, const std::string& input, const Json& expected, const Json& got, bool ok) {
        ++checks;
        if (!ok) ++mismatches;
        rows.push_back(Json::array({what, input, expected, got, ok}));
    }
    void equal(const std::string& what, const std::string& input, const Json& expected, const Json& got) {
        check(what, input, expected, got, expected == got);
    }
};

std::string label(const SymplecticClass& w) { return w.space.name() + " " + w.str(); }

Section minimal_section() {
    Section s{"minimal_models"};
    for (auto& w : minimal_model_samples()) {
        auto fam = enumerate_lcy(w);
        s.equal("formula=families", label(w), count_minimal(w), fam.count());
        if (!w.space.is_quadric()) s.equal("families=search", label(w), fam.count(), enumerate_by_search(w).count());
    }
    return s;
}

Section m2_section() {
    Section s{"m2_regions"};
    for (auto& smp : m2_region_samples()) {
        auto r = enumerate_lcy(smp.w);
        auto lab = classify_m2(smp.w);
        s.equal("region", label(smp.w), smp.tag + (smp.tag == "OM" ? "" : "[i=" + std::to_string(smp.i) + "]"), lab.str());
        s.equal("general", label(smp.w), count_m2_general(smp.w), r.count());
        s.equal("toric", label(smp.w), count_m2_toric(smp.w), r.toric_count());
    }
    return s;
}

Section m3_section() {
    Section s{"m3_toric"};
    for (auto& smp : m3_family_samples()) {
        auto r = enumerate_lcy(smp.w, true);
        RegionLabel stated{smp.tag, smp.i};
        s.equal("family", label(smp.w), stated.str(), classify_m3(smp.w).str());
        s.equal("stated=enumerator", label(smp.w), m3_region_value(stated), r.toric_count());
        s.equal("tables=enumerator", label(smp.w), count_m3_toric(smp.w), r.toric_count());
    }
    for (auto& w : m3_grid_samples({7, 12})) {
        auto r = enumerate_lcy(w, true);
        s.equal("tables=enumerator", label(w), count_m3_toric(w), r.toric_count());
        s.equal("region=enumerator", label(w), m3_region_value(classify_m3(w)), r.toric_count());
    }
    return s;
}

Section restrictive_section() {
    Section s{"restrictive"};
    for (int l = 2; l <= 4; ++l)
        for (auto& w : restrictive_samples(l, l == 4 ? 4 : 10, 1000 + static_cast<uint32_t>(l))) {
            auto r = enumerate_lcy(w);
            s.equal("general", label(w), restrictive_count_general(w).value, r.count());
            s.equal("toric", label(w), restrictive_count_toric(w).value, r.toric_count());
        }
    for (auto& w : nonrestrictive_interior_samples(4, 5, 2004)) {
        auto r = enumerate_lcy(w);
        auto f = restrictive_count_general(w).value;
        s.check("strict upper bound", label(w), f, r.count(), f > r.count());
    }
    return s;
}

Section toric_region_section() {
    Section s{"toric_regions"};
    for (int l = 4; l <= 5; ++l)
        for (auto& smp : toric_region_samples(l)) {
            const bool deleted = smp.tag == "MO" || smp.tag == "MA" || smp.tag == "MOD" || smp.tag == "MAD" || smp.tag == "MOX";
            auto r = enumerate_lcy(smp.w, true);
            s.equal(smp.tag + " predicate", label(smp.w), !deleted, toric_region_member(smp.w));
            s.equal(smp.tag + " enumerator", label(smp.w), !deleted, r.toric_count() > 0);
        }
    return s;
}

std::vector<SymplecticClass> polygon_points() {
    auto pts = minimal_model_samples();
    for (auto d : std::vector<std::vector<Rational>>{{Rational(2, 5), Rational(1, 5)},
                                                    {Rational(3, 10), Rational(3, 10)},
                                                    {Rational(4, 5), Rational(1, 10)},
                                                    {Rational(6, 15), Rational(5, 15), Rational(4, 15)},
                                                    {Rational(1, 2), Rational(1, 5), Rational(1, 10)},
                                                    {Rational(1, 2), Rational(1, 5), Rational(1, 10), Rational(1, 20)}})
        pts.push_back(SymplecticClass::blowup(d));
    return pts;
}

Section delzant_section() {
    Section s{"delzant"};
    for (auto& w : polygon_points()) {
        Rational expected_area = w.space.is_quadric() ? w.mu : Rational(1);
        if (!w.space.is_quadric())
            for (auto& d : w.delta) expected_area -= d * d;
        if (!w.space.is_quadric()) expected_area /= 2;
        for (auto& c : enumerate_lcy(w, true).toric) {
            const std::string in = label(w) + " " + c.str();
            auto p = build_polygon(c, w);
            s.check("delzant", in, true, is_delzant(p), is_delzant(p));
            s.check("round trip", in, true, same_up_to_dihedral(boundary_data(p), boundary_data(c, w)),
                    same_up_to_dihedral(boundary_data(p), boundary_data(c, w)));
            s.equal("area", in, to_string(expected_area), to_string(p.area()));
            s.equal("monodromy", in, Json(identity2()), Json(monodromy(self_intersection_seq(c))));
            s.equal("positive GS", in, true, gs_solve(c, w).positive);
        }
    }
    return s;
}

Section mutation_section() {
    Section s{"mutation"};
    std::vector<SymplecticClass> pts{SymplecticClass::quadric(1), SymplecticClass::quadric(2), SymplecticClass::quadric(3),
                                     SymplecticClass::blowup({Rational(1, 3)}), SymplecticClass::blowup({Rational(1, 2)}),
                                     SymplecticClass::blowup({Rational(2, 3)}),
                                     SymplecticClass::blowup({Rational(2, 5), Rational(1, 5)}),
                                     SymplecticClass::blowup({Rational(6, 15), Rational(5, 15), Rational(4, 15)}),
                                     SymplecticClass::blowup({Rational(1, 2), Rational(1, 5), Rational(1, 10)})};
    for (auto& w : pts) {
        auto g = mutation_graph(w);
        s.equal("connected", label(w), true, is_connected(g));
        s.equal("out of set", label(w), 0, g.out_of_set);
    }
    return s;
}

Section realization_section() {
    Section s{"realization"};
    for (auto& w : {SymplecticClass::cp2(), SymplecticClass::quadric(1), SymplecticClass::quadric(2),
                    SymplecticClass::blowup({Rational(1, 3)}), SymplecticClass::blowup({Rational(1, 2)}),
                    SymplecticClass::blowup({Rational(2, 5), Rational(1, 5)})})
        s.equal("uncovered", label(w), 0, realization_report(w).uncovered.size());
    auto w = SymplecticClass::blowup({Rational(6, 15), Rational(5, 15), Rational(4, 15)});
    auto sp = w.space;
    auto H = HomologyClass::H(sp);
    auto E = [&](int i) { return HomologyClass::E(sp, i); };
    CyclicConfig special(sp, {H - E(1) - E(2), E(2) - E(3), E(1) - E(2), H - E(1), H});
    auto res = enumerate_lcy(w);
    auto it = res.representative_of.find(canonical_key(special));
    bool in_lcy = it != res.representative_of.end();
    s.equal("special config in LCY", label(w), true, in_lcy);
    bool uncovered = false;
    if (in_lcy)
        for (auto& c : realization_report(w).uncovered) uncovered |= canonical_key(c) == it->second;
    s.equal("special config not in closure", label(w), true, uncovered);
    return s;
}

Section taut_section() {
    Section s{"tautness"};
    std::vector<int64_t> seq{1, -2, -3, -3, -2, -3, -2};
    auto t = def_taut(seq);
    s.equal("verdict", "(1,-2,-3,-3,-2,-3,-2)", "not def-taut", t.verdict == TautResult::Verdict::NotTaut ? "not def-taut" : t.str());
    bool both = false;
    PhiInput x{{2, 1, 3, 2, 1, 3}, {1, 2, 0, 0, 2, 0}}, y{{3, 1, 3, 1, 3, 1}, {0, 2, 0, 1, 0, 2}};
    both = std::find(t.preimages.begin(), t.preimages.end(), x) != t.preimages.end() &&
           std::find(t.preimages.begin(), t.preimages.end(), y) != t.preimages.end();
    s.equal("printed preimages found", "(1,-2,-3,-3,-2,-3,-2)", true, both);
    for (auto& q : std::vector<std::vector<int64_t>>{{1, 3}, {-1, -2}, {1, 1, 0}, {0, 4}})
        s.equal("family", Json(q).dump(), true, def_taut(q).verdict == TautResult::Verdict::Taut);
    for (int64_t a = 2; a <= 4; ++a)
        for (int l = 2; l <= 6; ++l) {
            auto rc = lemma_relation_check(a, l);
            s.equal("relation", "a=" + std::to_string(a) + " l=" + std::to_string(l), rc.rhs, rc.lhs);
        }
    return s;
}

}  // namespace

SelftestResult run_selftest() {
    SelftestResult out;
    out.artifact["tool"] = tool_version();
    Json sections = Json::array();
    for (auto make : {minimal_section, m2_section, m3_section, restrictive_section, toric_region_section, delzant_section,
                      mutation_section, realization_section, taut_section}) {
        Section s = make();
        out.checks += s.checks;
        out.mismatches += s.mismatches;
        Json j;
        j["name"] = s.name;
        j["checks"] = s.checks;
        j["mismatches"] = s.mismatches;
        j["rows"] = s.rows;
        sections.push_back(j);
    }
    out.artifact["sections"] = sections;
    out.artifact["checks"] = out.checks;
    out.artifact["mismatches"] = out.mismatches;
    return out;
}

}  // namespace lcy
