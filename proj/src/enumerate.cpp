#include "lcy/enumerate.hpp"

#include "lcy/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace lcy {

namespace {

struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(size_t n = 0, bool fill = false) : w((n + 63) / 64, fill ? ~uint64_t{0} : 0) {
        if (fill && n % 64) w.back() = (uint64_t{1} << (n % 64)) - 1;
    }
    void set(size_t i) { w[i / 64] |= uint64_t{1} << (i % 64); }
    bool test(size_t i) const { return w[i / 64] >> (i % 64) & 1; }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    template <class F>
    void for_each(F&& f) const {
        for (size_t b = 0; b < w.size(); ++b) {
            uint64_t x = w[b];
            while (x) {
                int t = __builtin_ctzll(x);
                f(b * 64 + static_cast<size_t>(t));
                x &= x - 1;
            }
        }
    }
};

struct VecHash {
    size_t operator()(const std::vector<int64_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Areas scaled by the common denominator of the deltas, so the search compares
// integers only.
struct ScaledAreas {
    BigInt denom = 1;
    std::vector<BigInt> scaled_delta;
    explicit ScaledAreas(const SymplecticClass& w) {
        for (const auto& d : w.delta) denom = lcm(denom, BigInt(denominator(d)));
        for (const auto& d : w.delta) scaled_delta.push_back(BigInt(numerator(d)) * (denom / BigInt(denominator(d))));
    }
    int64_t of(const HomologyClass& a) const {
        BigInt s = BigInt(a.coeffs[0]) * denom;
        for (size_t i = 1; i < a.coeffs.size(); ++i) s += BigInt(a.coeffs[i]) * scaled_delta[i - 1];
        return to_int64(s);
    }
};

bool config_less(const CyclicConfig& a, const CyclicConfig& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return std::lexicographical_compare(a.classes.begin(), a.classes.end(), b.classes.begin(), b.classes.end());
}

void require_enumerable(const SymplecticClass& w) {
    if (!is_reduced(w)) throw LatticeError("symplectic class " + w.str() + " is not reduced");
    if (!w.space.is_quadric() && w.space.l > max_l())
        throw LatticeError("l=" + std::to_string(w.space.l) + " exceeds the enumeration cap " +
                           std::to_string(max_l()) + " (raise LCY_MAX_L, at most 16)");
}

// Deduplicates, applies the wall quotient and fills the result.
EnumerationResult finalize(const SymplecticClass& w, const std::vector<CyclicConfig>& raw, bool toric_only,
                           EnumerationStats stats) {
    EnumerationResult res;
    res.w = w;
    std::map<std::string, CyclicConfig> by_key;
    for (const auto& c : raw) {
        auto v = validate(c, w);
        if (!v.ok) throw std::logic_error("enumerator produced an invalid configuration " + c.str() + ": " + v.violations[0]);
        auto cc = canonicalize(c);
        by_key.emplace(canonical_key(cc), cc);
    }
    std::vector<std::string> keys;
    for (auto& [k, c] : by_key) {
        keys.push_back(k);
        stats.raw_by_length[c.length()]++;
    }
    std::unordered_map<std::string, size_t> index;
    for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = i;
    std::vector<size_t> parent(keys.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    stats.generators = reflection_generators(w);
    if (is_interior(w) && !stats.generators.empty())
        throw std::logic_error("interior class with reflection generators");
    for (size_t i = 0; i < keys.size(); ++i) {
        const auto& c = by_key.at(keys[i]);
        for (const auto& m : stats.generators) {
            std::vector<HomologyClass> img;
            for (const auto& a : c.classes) img.push_back(reflect(a, m));
            auto it = index.find(canonical_key(CyclicConfig(c.space, img)));
            if (it == index.end()) {
                stats.orbit_escapes++;
                continue;
            }
            size_t a = find(i), b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    // keys are sorted, so the root (smallest index) is the smallest key
    for (size_t i = 0; i < keys.size(); ++i) res.representative_of[keys[i]] = keys[find(i)];
    std::vector<CyclicConfig> reps;
    for (size_t i = 0; i < keys.size(); ++i)
        if (find(i) == i) reps.push_back(by_key.at(keys[i]));
    std::sort(reps.begin(), reps.end(), config_less);
    for (auto& c : reps) {
        stats.classes_by_length[c.length()]++;
        if (is_toric(c)) res.toric.push_back(c);
        if (c.length() == 1) res.elliptic = c;
    }
    res.all = toric_only ? res.toric : reps;
    res.stats = std::move(stats);
    return res;
}

}  // namespace

EnumerationResult enumerate_by_search(const SymplecticClass& w, bool toric_only, int workers) {
    require_enumerable(w);
    if (w.space.is_quadric()) throw LatticeError("the catalog search runs on blow-ups of CP^2 only");
    EnumerationStats stats;
    stats.method = "search";
    const auto s = w.space;
    const int l = s.l;
    const auto target = c1(s);
    std::vector<CyclicConfig> raw;
    if (!(area(w, target) > 0)) {
        return finalize(w, raw, toric_only, stats);
    }
    const int toric_len = l + 3;
    const int max_len = l + 3;

    auto all_members = toric_only ? toric_catalog_members(w) : catalog_members(w);
    std::vector<HomologyClass> cat;
    for (auto& a : all_members)
        if (!(a == target)) cat.push_back(a);
    stats.catalog_size = static_cast<int>(all_members.size());
    if (!toric_only) raw.push_back(CyclicConfig(s, {target}));

    const size_t n = cat.size();
    ScaledAreas scaled(w);
    std::vector<int64_t> ar(n);
    for (size_t i = 0; i < n; ++i) ar[i] = scaled.of(cat[i]);
    const int64_t total = scaled.of(target);
    int64_t amin = total;
    for (auto a : ar) amin = std::min(amin, a);
    std::vector<std::vector<int64_t>> I(n, std::vector<int64_t>(n));
    std::vector<Bits> adj1(n, Bits(n)), adj0(n, Bits(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            I[i][j] = intersect(cat[i], cat[j]);
            if (I[i][j] == 1) adj1[i].set(j);
            if (I[i][j] == 0) adj0[i].set(j);
        }
    std::unordered_map<std::vector<int64_t>, size_t, VecHash> lookup;
    for (size_t i = 0; i < n; ++i) lookup[cat[i].coeffs] = i;

    // length two: (A, c1 - A) meeting twice
    if (!toric_only) {
        for (size_t i = 0; i < n; ++i) {
            auto rest = target - cat[i];
            auto it = lookup.find(rest.coeffs);
            if (it == lookup.end() || it->second < i) continue;
            if (I[i][it->second] == 2) raw.push_back(CyclicConfig(s, {cat[i], cat[it->second]}));
        }
    }

    // length >= 3: the first class is the smallest one of the cycle
    struct Worker {
        std::vector<size_t> seq;
        std::vector<int64_t> sum;
        std::vector<Bits> zero_stack;  // zero_stack[d] = classes meeting none of seq[0..d-2]
        std::vector<CyclicConfig> found;
        long long nodes = 0;
    };
    auto try_close = [&](Worker& st, size_t first) {
        const auto& seq = st.seq;
        const size_t d = seq.size();
        if (d < 2 || d + 1 > static_cast<size_t>(max_len)) return;
        if (toric_only && static_cast<int>(d + 1) != toric_len) return;
        std::vector<int64_t> rest(target.coeffs.size());
        for (size_t t = 0; t < rest.size(); ++t) rest[t] = target.coeffs[t] - st.sum[t];
        auto it = lookup.find(rest);
        if (it == lookup.end()) return;
        size_t r = it->second;
        if (r < first) return;
        if (I[seq[d - 1]][r] != 1 || I[seq[0]][r] != 1) return;
        for (size_t j = 1; j + 1 < d; ++j)
            if (I[seq[j]][r] != 0) return;
        std::vector<HomologyClass> cls;
        for (auto x : seq) cls.push_back(cat[x]);
        cls.push_back(cat[r]);
        st.found.push_back(CyclicConfig(s, cls));
    };
    auto dfs = [&](auto&& self, Worker& st, size_t first, int64_t remaining) -> void {
        ++st.nodes;
        try_close(st, first);
        const size_t d = st.seq.size();
        // a further class plus the closing one must still fit
        if (static_cast<int>(d) + 2 > max_len) return;
        Bits cand = adj1[st.seq[d - 1]];
        if (d >= 2) cand &= st.zero_stack[d];
        cand.for_each([&](size_t c) {
            if (c < first) return;
            if (remaining - ar[c] < amin) return;
            st.seq.push_back(c);
            for (size_t t = 0; t < st.sum.size(); ++t) st.sum[t] += cat[c].coeffs[t];
            Bits z = st.zero_stack.back();
            z &= adj0[st.seq[d - 1]];
            st.zero_stack.push_back(z);
            self(self, st, first, remaining - ar[c]);
            st.zero_stack.pop_back();
            for (size_t t = 0; t < st.sum.size(); ++t) st.sum[t] -= cat[c].coeffs[t];
            st.seq.pop_back();
        });
    };
    // first classes are striped over the workers; finalize sorts, so the merge order is irrelevant
    const size_t nw = static_cast<size_t>(std::max(1, workers));
    std::vector<Worker> states(nw);
    auto run = [&](size_t id) {
        Worker& st = states[id];
        st.sum.assign(target.coeffs.size(), 0);
        for (size_t a0 = id; a0 < n; a0 += nw) {
            if (total - ar[a0] < amin) continue;
            st.seq.assign(1, a0);
            for (size_t t = 0; t < st.sum.size(); ++t) st.sum[t] = cat[a0].coeffs[t];
            st.zero_stack.assign(2, Bits(n, true));
            dfs(dfs, st, a0, total - ar[a0]);
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t id = 0; id < nw; ++id) pool.emplace_back(run, id);
        for (auto& t : pool) t.join();
    }
    long long nodes = 0;
    for (auto& st : states) {
        nodes += st.nodes;
        raw.insert(raw.end(), st.found.begin(), st.found.end());
    }
    stats.search_nodes = nodes;
    return finalize(w, raw, toric_only, stats);
}

EnumerationResult enumerate_minimal_families(const SymplecticClass& w, bool toric_only) {
    require_enumerable(w);
    EnumerationStats stats;
    stats.method = "families";
    std::vector<CyclicConfig> raw;
    const auto s = w.space;
    auto positive = [&](const std::vector<HomologyClass>& cs) {
        for (const auto& a : cs)
            if (area(w, a) <= 0) return false;
        return true;
    };
    auto add = [&](std::vector<HomologyClass> cs) {
        if (positive(cs)) raw.push_back(CyclicConfig(s, std::move(cs)));
    };
    if (s.is_quadric()) {
        const auto F = HomologyClass::F(), B = HomologyClass::B();
        add({2 * F + 2 * B});
        add({2 * B + F, F});
        int64_t bound = to_int64(ceil_of(w.mu)) + 3;
        for (int64_t b = -bound; b <= bound; ++b) {
            add({B + b * F, B + (2 - b) * F});
            add({B + b * F, F, B + (1 - b) * F});
            add({B + (b - 1) * F, F, B + (1 - b) * F, F});
        }
    } else if (s.l == 0) {
        const auto H = HomologyClass::H(s);
        add({3 * H});
        add({2 * H, H});
        add({H, H, H});
    } else if (s.l == 1) {
        const auto H = HomologyClass::H(s), E = HomologyClass::E(s, 1);
        add({3 * H - E});
        add({2 * H, H - E});
        // every family member has area linear in a with slope +-(1 - d)
        int64_t bound = to_int64(ceil_of(Rational(3 / (1 - w.d(1))))) + 3;
        for (int64_t a = -bound; a <= bound; ++a) {
            add({(a + 1) * H - a * E, (2 - a) * H + (a - 1) * E});
            add({a * H + (1 - a) * E, H - E, (2 - a) * H + (a - 1) * E});
            add({a * H + (1 - a) * E, H - E, (1 - a) * H + a * E, H - E});
        }
    } else {
        throw LatticeError("closed family lists exist for CP^2, M1 and the quadric only");
    }
    return finalize(w, raw, toric_only, stats);
}

EnumerationResult enumerate_lcy(const SymplecticClass& w, bool toric_only, int workers) {
    if (!is_c1_nef(w) && is_reduced(w)) {
        // no configuration carries positive total area
        EnumerationResult r;
        r.w = w;
        r.stats.method = "empty";
        return r;
    }
    if (w.space.is_quadric() || w.space.l <= 1) return enumerate_minimal_families(w, toric_only);
    return enumerate_by_search(w, toric_only, workers);
}

std::vector<CyclicConfig> smoothing_closure(const std::vector<CyclicConfig>& configs) {
    std::map<std::string, CyclicConfig> seen;
    std::vector<CyclicConfig> frontier;
    for (const auto& c : configs) {
        auto cc = canonicalize(c);
        if (seen.emplace(canonical_key(cc), cc).second) frontier.push_back(cc);
    }
    while (!frontier.empty()) {
        std::vector<CyclicConfig> next;
        for (const auto& c : frontier) {
            if (c.length() < 2) continue;
            for (int i = 0; i < c.length(); ++i) {
                auto sm = canonicalize(smoothing(c, i));
                if (seen.emplace(canonical_key(sm), sm).second) next.push_back(sm);
            }
        }
        frontier = std::move(next);
    }
    std::vector<CyclicConfig> out;
    for (auto& [k, c] : seen) out.push_back(c);
    std::sort(out.begin(), out.end(), config_less);
    return out;
}

StabilityReport stability_check(const SymplecticClass& w1, const SymplecticClass& w2) {
    if (!(w1.space == w2.space)) throw LatticeError("stability_check needs classes on the same space");
    if (!is_c1_nef(w1) || !is_c1_nef(w2)) throw LatticeError("stability_check needs reduced c1-nef classes");
    StabilityReport rep;
    bool same_catalog = w1.space.is_quadric() ? quadric_catalog(w1) == quadric_catalog(w2)
                                              : catalog_members(w1) == catalog_members(w2);
    rep.comparable = same_catalog && reflection_generators(w1) == reflection_generators(w2);
    if (!rep.comparable) return rep;
    auto a = enumerate_lcy(w1), b = enumerate_lcy(w2);
    rep.identical = a.all == b.all;
    if (!rep.identical)
        throw std::logic_error("identical catalogs at " + w1.str() + " and " + w2.str() + " but different enumerations");
    return rep;
}

}  // namespace lcy
