#include "lcy/config.hpp"

#include <algorithm>
#include <sstream>

namespace lcy {

namespace {

HomologyClass drop_last(const HomologyClass& a) {
    if (a.coeffs.back() != 0) throw LatticeError("class " + a.str() + " still involves the last exceptional class");
    std::vector<int64_t> c(a.coeffs.begin(), a.coeffs.end() - 1);
    return HomologyClass(AmbientSpace::blowup(a.space.l - 1), c);
}

SymplecticClass truncated(const SymplecticClass& w) {
    std::vector<Rational> d(w.delta.begin(), w.delta.end() - 1);
    return SymplecticClass::blowup(d);
}

void require_blowup(const CyclicConfig& c, const char* op) {
    if (c.space.is_quadric()) throw LatticeError(std::string(op) + " is not supported on the quadric");
}

}  // namespace

CyclicConfig::CyclicConfig(AmbientSpace s, std::vector<HomologyClass> cs) : space(s), classes(std::move(cs)) {
    for (const auto& a : classes)
        if (!(a.space == space)) throw LatticeError("configuration class " + a.str() + " not in " + space.name());
}

const HomologyClass& CyclicConfig::at(int i) const {
    const int k = length();
    return classes[static_cast<size_t>(((i % k) + k) % k)];
}

std::string CyclicConfig::str() const {
    std::string s = "(";
    for (size_t i = 0; i < classes.size(); ++i) s += (i ? ", " : "") + classes[i].str();
    return s + ")";
}

Validation validate(const CyclicConfig& c) {
    Validation v;
    auto fail = [&](std::string msg) {
        v.ok = false;
        v.violations.push_back(std::move(msg));
    };
    const int k = c.length();
    if (k == 0) {
        fail("empty configuration");
        return v;
    }
    auto total = HomologyClass::zero(c.space);
    for (const auto& a : c.classes) total += a;
    if (!(total == c1(c.space))) fail("sum of classes " + total.str() + " differs from c1");
    if (k == 1) {
        if (genus(c.classes[0]) != 1) fail("single component must have genus 1");
        return v;
    }
    for (int i = 0; i < k; ++i)
        if (genus(c.classes[static_cast<size_t>(i)]) != 0)
            fail("component " + std::to_string(i) + " (" + c.at(i).str() + ") has nonzero genus");
    if (k == 2) {
        if (intersect(c.classes[0], c.classes[1]) != 2) fail("the two components must meet twice");
        return v;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
            int64_t want = adjacent ? 1 : 0;
            if (intersect(c.at(i), c.at(j)) != want)
                fail("components " + std::to_string(i) + "," + std::to_string(j) + " intersect " +
                     std::to_string(intersect(c.at(i), c.at(j))) + ", expected " + std::to_string(want));
        }
    return v;
}

Validation validate(const CyclicConfig& c, const SymplecticClass& w) {
    Validation v = validate(c);
    for (int i = 0; i < c.length(); ++i)
        if (area(w, c.at(i)) <= 0) {
            v.ok = false;
            v.violations.push_back("component " + std::to_string(i) + " (" + c.at(i).str() + ") has area " +
                                   to_string(area(w, c.at(i))));
        }
    return v;
}

int64_t charge(const CyclicConfig& c) {
    auto total = HomologyClass::zero(c.space);
    for (const auto& a : c.classes) total += a;
    return 12 - c.length() - square(total);
}

bool is_toric(const CyclicConfig& c) { return c.length() >= 3 && charge(c) == 0 && validate(c).ok; }

std::vector<int64_t> self_intersection_seq(const CyclicConfig& c) {
    std::vector<int64_t> s;
    for (const auto& a : c.classes) s.push_back(square(a));
    return s;
}

std::vector<Rational> area_seq(const CyclicConfig& c, const SymplecticClass& w) {
    std::vector<Rational> s;
    for (const auto& a : c.classes) s.push_back(area(w, a));
    return s;
}

CyclicConfig canonicalize(const CyclicConfig& c) {
    const int k = c.length();
    std::vector<HomologyClass> best = c.classes, cand(c.classes.size());
    for (int dir = 0; dir < 2; ++dir)
        for (int start = 0; start < k; ++start) {
            for (int i = 0; i < k; ++i) cand[static_cast<size_t>(i)] = c.at(dir == 0 ? start + i : start - i);
            if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end())) best = cand;
        }
    return CyclicConfig(c.space, best);
}

std::string canonical_key(const CyclicConfig& c) {
    auto cc = canonicalize(c);
    std::ostringstream os;
    os << cc.space.name() << ':';
    for (const auto& a : cc.classes) {
        os << '[';
        for (size_t i = 0; i < a.coeffs.size(); ++i) os << (i ? "," : "") << a.coeffs[i];
        os << ']';
    }
    return os.str();
}

CyclicConfig smoothing(const CyclicConfig& c, int adjacency) {
    const int k = c.length();
    if (k < 2) throw LatticeError("smoothing needs at least two components");
    if (adjacency < 0 || adjacency >= k) throw LatticeError("adjacency index out of range");
    if (k == 2) return CyclicConfig(c.space, {c.classes[0] + c.classes[1]});
    std::vector<HomologyClass> out;
    const int i = adjacency, j = (adjacency + 1) % k;
    for (int t = 0; t < k; ++t) {
        if (t == j) continue;
        out.push_back(t == i ? c.at(i) + c.at(j) : c.at(t));
    }
    // keep the merged class at the position of A_i; when j wrapped to 0 the
    // order is still cyclically correct
    return CyclicConfig(c.space, out);
}

CyclicConfig toric_blow_up(const CyclicConfig& c, int adjacency) {
    require_blowup(c, "toric blow-up");
    const int k = c.length();
    if (k < 2) throw LatticeError("toric blow-up needs an intersection point");
    if (adjacency < 0 || adjacency >= k) throw LatticeError("adjacency index out of range");
    const int l2 = c.space.l + 1;
    const auto s2 = AmbientSpace::blowup(l2);
    const auto E = HomologyClass::E(s2, l2);
    std::vector<HomologyClass> out;
    for (int t = 0; t < k; ++t) {
        auto a = c.at(t).lifted(l2);
        if (t == adjacency || t == (adjacency + 1) % k) a -= E;
        out.push_back(a);
        if (t == adjacency) out.push_back(E);
    }
    return CyclicConfig(s2, out);
}

CyclicConfig non_toric_blow_up(const CyclicConfig& c, int component) {
    require_blowup(c, "non-toric blow-up");
    if (component < 0 || component >= c.length()) throw LatticeError("component index out of range");
    const int l2 = c.space.l + 1;
    const auto s2 = AmbientSpace::blowup(l2);
    std::vector<HomologyClass> out;
    for (int t = 0; t < c.length(); ++t) {
        auto a = c.at(t).lifted(l2);
        if (t == component) a -= HomologyClass::E(s2, l2);
        out.push_back(a);
    }
    return CyclicConfig(s2, out);
}

const char* case_name(ReductionStep::Case c) {
    switch (c) {
        case ReductionStep::Case::BlowDown: return "a";
        case ReductionStep::Case::RemoveExceptional: return "b";
        case ReductionStep::Case::Terminal: return "c";
    }
    return "?";
}

ReductionStep reduce_once(const CyclicConfig& c, const SymplecticClass& w) {
    require_blowup(c, "reduction");
    const int l = c.space.l;
    if (l < 2) throw LatticeError("reduce_once needs l >= 2");
    if (!(w.space == c.space) || !is_reduced(w)) throw LatticeError("reduce_once needs a reduced class on " + c.space.name());
    const auto El = HomologyClass::E(c.space, l);
    const int k = c.length();

    std::vector<int> exceptional, involved;
    for (int i = 0; i < k; ++i) {
        if (c.at(i) == El) exceptional.push_back(i);
        if (c.at(i).e(l) != 0) involved.push_back(i);
    }
    if (k >= 3 && exceptional.size() == 1) {
        const int i = exceptional[0];
        std::vector<HomologyClass> out;
        for (int t = 1; t < k; ++t) {
            int idx = (i + t) % k;
            auto a = c.at(idx);
            if (t == 1 || t == k - 1) a += El;
            out.push_back(drop_last(a));
        }
        return {ReductionStep::Case::RemoveExceptional, i, CyclicConfig(AmbientSpace::blowup(l - 1), out)};
    }
    if (involved.size() == 1) {
        const int i = involved[0];
        std::vector<HomologyClass> out;
        for (int t = 0; t < k; ++t) out.push_back(drop_last(t == i ? c.at(t) + El : c.at(t)));
        return {ReductionStep::Case::BlowDown, i, CyclicConfig(AmbientSpace::blowup(l - 1), out)};
    }
    if (k == 2 && exceptional.size() == 1) {
        const int i = exceptional[0];
        auto other = c.at(1 - i);
        auto expected = c1(c.space) - El;
        if (other == expected) return {ReductionStep::Case::Terminal, i, c};
    }
    throw LatticeError("no reduction case applies to " + c.str());
}

CyclicConfig germ(const CyclicConfig& c, const SymplecticClass& w) {
    CyclicConfig cur = c;
    SymplecticClass cw = w;
    while (!cur.space.is_quadric() && cur.space.l >= 2) {
        auto step = reduce_once(cur, cw);
        if (step.kind == ReductionStep::Case::Terminal) break;
        cur = step.result;
        cw = truncated(cw);
    }
    return cur;
}

}  // namespace lcy
