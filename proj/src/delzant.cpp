#include "lcy/delzant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lcy {

namespace {

Rational det(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }
Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1]}; }
Point add_scaled(const Point& p, const Rational& t, LatticeVector v) {
    return {p[0] + t * Rational(v.x), p[1] + t * Rational(v.y)};
}

size_t wrap(int i, size_t n) {
    const auto m = static_cast<int>(n);
    return static_cast<size_t>(((i % m) + m) % m);
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        if constexpr (std::is_same_v<T, Rational>) os << to_string(v[i]);
        else os << v[i];
    }
    os << ')';
    return os.str();
}

// Winding number of a cyclic list of directions whose consecutive turns are
// strictly counterclockwise and less than pi: count crossings of the positive x-axis.
int winding_of(const std::vector<LatticeVector>& u) {
    int crossings = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        const auto& p = u[i];
        const auto& q = u[(i + 1) % u.size()];
        if (p.y < 0 && q.y >= 0) ++crossings;
    }
    return crossings;
}

std::vector<LatticeVector> edge_directions(const DelzantPolygon& p) {
    std::vector<LatticeVector> u;
    for (int i = 0; i < p.size(); ++i) u.push_back(primitive_direction(sub(p.at(i + 1), p.at(i))));
    return u;
}

// c . t + d > 0 (strict) or >= 0
struct Ineq {
    std::vector<Rational> c;
    Rational d;
    bool strict = false;
};

// Fourier-Motzkin feasibility with a witness.
std::optional<std::vector<Rational>> fm_solve(std::vector<Ineq> system, size_t vars) {
    std::vector<std::vector<Ineq>> stages{system};
    for (size_t j = vars; j-- > 0;) {
        std::vector<Ineq> pos, neg, next;
        for (auto& q : stages.back()) {
            if (q.c[j] > 0) pos.push_back(q);
            else if (q.c[j] < 0) neg.push_back(q);
            else next.push_back(q);
        }
        for (auto& p : pos)
            for (auto& n : neg) {
                // p.c[j] t_j > -rest_p, n.c[j] t_j > -rest_n; combine with positive multipliers
                Rational mp = -n.c[j], mn = p.c[j];
                Ineq r;
                r.c.resize(vars);
                for (size_t t = 0; t < vars; ++t) r.c[t] = mp * p.c[t] + mn * n.c[t];
                r.c[j] = 0;
                r.d = mp * p.d + mn * n.d;
                r.strict = p.strict || n.strict;
                next.push_back(std::move(r));
            }
        stages.push_back(std::move(next));
    }
    for (auto& q : stages.back())
        if (q.strict ? !(q.d > 0) : !(q.d >= 0)) return std::nullopt;
    std::vector<Rational> t(vars, Rational(0));
    for (size_t j = 0; j < vars; ++j) {
        // stage holding variables 0..j
        const auto& st = stages[vars - 1 - j];
        std::optional<Rational> lo, hi;
        for (auto& q : st) {
            if (q.c[j] == 0) continue;
            Rational rest = q.d;
            for (size_t m = 0; m < j; ++m) rest += q.c[m] * t[m];
            Rational bound = -rest / q.c[j];
            if (q.c[j] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi) t[j] = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
        else if (lo) t[j] = *lo + 1;
        else if (hi) t[j] = *hi - 1;
    }
    return t;
}

}  // namespace

std::string LatticeVector::str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

int64_t det(LatticeVector a, LatticeVector b) { return a.x * b.y - a.y * b.x; }

bool GeneratingSet::closes() const {
    const size_t k = s.size();
    return d[k] == d[0] && d[k + 1] == d[1];
}

bool GeneratingSet::unimodular() const {
    for (size_t i = 0; i < s.size(); ++i)
        if (det(d[i], d[i + 1]) != 1) return false;
    return true;
}

int GeneratingSet::winding_number() const {
    return winding_of(std::vector<LatticeVector>(d.begin(), d.begin() + static_cast<long>(s.size())));
}

GeneratingSet generating_set(const std::vector<int64_t>& s) {
    if (s.size() < 3) throw DelzantError("generating sets need a sequence of length >= 3");
    GeneratingSet g{s, {{0, -1}, {1, 0}}};
    const size_t k = s.size();
    for (size_t i = 2; i < k + 2; ++i) {
        // d_{i+1} = -s_i d_i - d_{i-1} with 1-based i; s wraps for the closure vectors
        int64_t si = s[(i - 1) % k];
        g.d.push_back((-si) * g.d[i - 1] - g.d[i - 2]);
    }
    return g;
}

const Point& DelzantPolygon::at(int i) const { return vertices[wrap(i, vertices.size())]; }

Rational DelzantPolygon::area() const {
    Rational twice = 0;
    for (int i = 0; i < size(); ++i) twice += det(at(i), at(i + 1));
    return twice / 2;
}

DelzantPolygon build_polygon(const std::vector<int64_t>& s, const std::vector<Rational>& a) {
    if (s.size() != a.size()) throw DelzantError("s and a differ in length");
    auto g = generating_set(s);
    if (!g.closes()) throw DelzantError("not a toric (s,a) pair: generating set does not close");
    if (!g.unimodular()) throw DelzantError("not a toric (s,a) pair: corner determinant is not 1");
    if (g.winding_number() != 1) throw DelzantError("not a toric (s,a) pair: winding number is not 1");
    for (auto& x : a)
        if (x <= 0) throw DelzantError("not a toric (s,a) pair: nonpositive edge length");
    DelzantPolygon p;
    Point q{Rational(0), Rational(0)};
    for (size_t i = 0; i < s.size(); ++i) {
        p.vertices.push_back(q);
        q = add_scaled(q, a[i], g.d[i]);
    }
    if (q[0] != 0 || q[1] != 0) throw DelzantError("not a toric (s,a) pair: sum a_i d_i is not zero");
    return p;
}

DelzantPolygon build_polygon(const CyclicConfig& c, const SymplecticClass& w) {
    return build_polygon(self_intersection_seq(c), area_seq(c, w));
}

LatticeVector primitive_direction(const Point& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (v[0] == 0 && v[1] == 0) throw DelzantError("zero edge vector");
    BigInt l = boost::multiprecision::lcm(denominator(v[0]), denominator(v[1]));
    BigInt x = numerator(v[0]) * (l / denominator(v[0]));
    BigInt y = numerator(v[1]) * (l / denominator(v[1]));
    BigInt g = boost::multiprecision::gcd(abs(x), abs(y));
    return {to_int64(x / g), to_int64(y / g)};
}

Rational affine_length(const Point& v) {
    auto u = primitive_direction(v);
    return u.x != 0 ? Rational(v[0] / u.x) : Rational(v[1] / u.y);
}

bool is_delzant(const DelzantPolygon& p) {
    if (p.size() < 3) return false;
    std::vector<LatticeVector> u;
    for (int i = 0; i < p.size(); ++i) {
        auto e = sub(p.at(i + 1), p.at(i));
        if (e[0] == 0 && e[1] == 0) return false;
        u.push_back(primitive_direction(e));
    }
    for (size_t i = 0; i < u.size(); ++i)
        if (det(u[i], u[(i + 1) % u.size()]) != 1) return false;
    return winding_of(u) == 1;
}

std::string BoundaryData::str() const { return "s=" + join(s) + " a=" + join(a); }

BoundaryData boundary_data(const DelzantPolygon& p) {
    auto u = edge_directions(p);
    BoundaryData b;
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        b.s.push_back(-det(u[wrap(i - 1, u.size())], u[wrap(i + 1, u.size())]));
        b.a.push_back(affine_length(sub(p.at(i + 1), p.at(i))));
    }
    return b;
}

BoundaryData boundary_data(const CyclicConfig& c, const SymplecticClass& w) {
    return {self_intersection_seq(c), area_seq(c, w)};
}

BoundaryData canonical_boundary(const BoundaryData& b) {
    const size_t n = b.s.size();
    std::optional<BoundaryData> best;
    auto better = [](const BoundaryData& x, const BoundaryData& y) {
        if (x.s != y.s) return x.s < y.s;
        return x.a < y.a;
    };
    for (int dir = 0; dir < 2; ++dir)
        for (size_t r = 0; r < n; ++r) {
            BoundaryData c;
            for (size_t i = 0; i < n; ++i) {
                size_t j = dir == 0 ? (r + i) % n : (r + n - i) % n;
                c.s.push_back(b.s[j]);
                c.a.push_back(b.a[j]);
            }
            if (!best || better(c, *best)) best = std::move(c);
        }
    return best ? *best : b;
}

bool same_up_to_dihedral(const BoundaryData& x, const BoundaryData& y) {
    return x.s.size() == y.s.size() && canonical_boundary(x) == canonical_boundary(y);
}

DelzantPolygon chop_corner(const DelzantPolygon& p, int v, const Rational& eps) {
    const Point& q = p.at(v);
    Point in = sub(p.at(v - 1), q), out = sub(p.at(v + 1), q);
    if (eps <= 0 || eps >= affine_length(in) || eps >= affine_length(out))
        throw DelzantError("corner chop size must be positive and below both adjacent edge lengths");
    DelzantPolygon r;
    for (int i = 0; i < p.size(); ++i) {
        if (i == static_cast<int>(wrap(v, p.vertices.size()))) {
            r.vertices.push_back(add_scaled(q, eps, primitive_direction(in)));
            r.vertices.push_back(add_scaled(q, eps, primitive_direction(out)));
        } else {
            r.vertices.push_back(p.at(i));
        }
    }
    return r;
}

GSReport gs_solve(const CyclicConfig& c, const SymplecticClass& w) {
    return gs_solve(self_intersection_seq(c), area_seq(c, w));
}

GSReport gs_solve(const std::vector<int64_t>& s, const std::vector<Rational>& a) {
    const size_t k = s.size();
    if (k == 0 || a.size() != k) throw DelzantError("gs_solve needs matching nonempty s and a");
    GSReport rep;
    rep.k = static_cast<int>(k);
    rep.matrix.assign(k, std::vector<int64_t>(k, 0));
    for (size_t i = 0; i < k; ++i) rep.matrix[i][i] = s[i];
    if (k == 2) {
        rep.matrix[0][1] = rep.matrix[1][0] = 2;
    } else if (k >= 3) {
        for (size_t i = 0; i < k; ++i) rep.matrix[i][(i + 1) % k] = rep.matrix[(i + 1) % k][i] = 1;
    }
    // reduced row echelon form of [Q | a]
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = rep.matrix[i][j];
        m[i][k] = a[i];
    }
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < k && row < k; ++col) {
        size_t piv = row;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) continue;
        std::swap(m[piv], m[row]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < k; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t t = 0; t <= k; ++t) m[r][t] -= f * m[row][t];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t r = row; r < k; ++r)
        if (m[r][k] != 0) return rep;  // inconsistent
    rep.solvable = true;
    std::vector<size_t> free_cols;
    for (size_t col = 0; col < k; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(col)) == pivot_col.end())
            free_cols.push_back(col);
    rep.nullity = static_cast<int>(free_cols.size());
    // z = z0 + sum_j t_j v_j
    std::vector<Rational> z0(k, Rational(0));
    std::vector<std::vector<Rational>> basis(free_cols.size(), std::vector<Rational>(k, Rational(0)));
    for (size_t r = 0; r < pivot_col.size(); ++r) {
        auto pc = static_cast<size_t>(pivot_col[r]);
        z0[pc] = m[r][k];
        for (size_t j = 0; j < free_cols.size(); ++j) basis[j][pc] = -m[r][free_cols[j]];
    }
    for (size_t j = 0; j < free_cols.size(); ++j) basis[j][free_cols[j]] = 1;
    auto solve_sign = [&](bool positive) -> std::optional<std::vector<Rational>> {
        std::vector<Ineq> sys;
        for (size_t i = 0; i < k; ++i) {
            Ineq q;
            Rational sign = positive ? 1 : -1;
            for (size_t j = 0; j < free_cols.size(); ++j) q.c.push_back(sign * basis[j][i]);
            q.d = sign * z0[i];
            q.strict = positive;
            sys.push_back(std::move(q));
        }
        auto t = fm_solve(std::move(sys), free_cols.size());
        if (!t) return std::nullopt;
        std::vector<Rational> z = z0;
        for (size_t j = 0; j < free_cols.size(); ++j)
            for (size_t i = 0; i < k; ++i) z[i] += (*t)[j] * basis[j][i];
        return z;
    };
    if (auto z = solve_sign(true)) rep.positive = true, rep.positive_witness = *z;
    if (auto z = solve_sign(false)) rep.negative = true, rep.negative_witness = *z;
    return rep;
}

Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Matrix2 monodromy(const std::vector<int64_t>& s) {
    if (s.empty()) throw DelzantError("monodromy needs a nonempty sequence");
    Matrix2 m = identity2();
    for (int64_t si : s) m = mat_mul(Matrix2{0, 1, -1, -si}, m);
    return m;
}

std::string CfValue::str() const { return infinite ? "inf" : to_string(value); }

CfValue cf_eval(const std::vector<Rational>& b) {
    if (b.empty()) throw DelzantError("empty continued fraction");
    Rational p = b.back(), q = 1;
    for (size_t j = b.size() - 1; j-- > 0;) {
        Rational np = b[j] * p - q;
        q = p;
        p = np;
    }
    if (q == 0) return {true, Rational(0)};
    return {false, p / q};
}

CfValue cf_eval(const std::vector<int64_t>& b) {
    std::vector<Rational> r(b.begin(), b.end());
    return cf_eval(r);
}

bool cf_admissible(const std::vector<int64_t>& n) {
    for (size_t j = 1; j < n.size(); ++j) {
        auto v = cf_eval(std::vector<int64_t>(n.begin() + static_cast<long>(j), n.end()));
        if (v.infinite || v.value <= 0) return false;
    }
    return true;
}

std::string PhiInput::str() const { return "n=" + join(n) + " a=" + join(a); }

bool phi_domain(const PhiInput& x) {
    const size_t m = x.n.size();
    if (m < 2 || x.a.size() != m) return false;
    const auto k = static_cast<int64_t>(m - 1);
    if (std::accumulate(x.n.begin(), x.n.end(), int64_t{0}) != 3 * (k - 1)) return false;
    std::vector<int64_t> head(x.n.begin(), x.n.end() - 1);
    auto v = cf_eval(head);
    if (v.infinite || v.value != 0 || !cf_admissible(head)) return false;
    for (size_t i = 0; i < m; ++i)
        if (x.a[i] < 0 || x.n[i] + x.a[i] < 2) return false;
    return true;
}

std::vector<int64_t> phi_map(const PhiInput& x) {
    if (!phi_domain(x)) throw DelzantError("phi_map input " + x.str() + " is outside the domain");
    const size_t m = x.n.size();
    std::vector<int64_t> out{1};
    for (size_t i = 0; i < m; ++i) {
        int64_t p = x.n[i] + x.a[i];
        out.push_back(i == 0 || i + 1 == m ? 1 - p : -p);
    }
    return out;
}

namespace {

std::optional<std::vector<int64_t>> blown_up_p(const std::vector<int64_t>& seq) {
    if (seq.size() < 3 || seq[0] != 1) return std::nullopt;
    std::vector<int64_t> p;
    const size_t m = seq.size() - 1;  // k + 1 entries
    for (size_t i = 1; i <= m; ++i) p.push_back(i == 1 || i == m ? 1 - seq[i] : -seq[i]);
    for (auto x : p)
        if (x < 2) return std::nullopt;
    return p;
}

void preimage_search(const std::vector<int64_t>& p, size_t j, std::vector<int64_t>& n, int64_t tp, int64_t tq,
                     std::vector<PhiInput>& out) {
    // n[j..k-1] is fixed; (tp, tq) is the tail value [n_{j+1}, ..., n_k] as a pair
    const size_t k = p.size() - 1;
    if (j == 0) {
        if (tq == 0 || tp != 0) return;  // [n_1..n_k] must be exactly 0
        int64_t sum = std::accumulate(n.begin(), n.begin() + static_cast<long>(k), int64_t{0});
        int64_t last = 3 * (static_cast<int64_t>(k) - 1) - sum;
        if (last > p[k]) return;
        PhiInput x;
        x.n.assign(n.begin(), n.begin() + static_cast<long>(k));
        x.n.push_back(last);
        for (size_t i = 0; i <= k; ++i) x.a.push_back(p[i] - x.n[i]);
        out.push_back(std::move(x));
        return;
    }
    const size_t i = j - 1;  // choose n_i (0-based)
    for (int64_t v = 0; v <= p[i]; ++v) {
        int64_t np, nq;
        if (i + 1 == k) {
            np = v, nq = 1;
        } else {
            np = v * tp - tq;
            nq = tp;
        }
        // tails starting at index >= 2 (1-based) must be positive and finite
        if (i >= 1 && (nq == 0 || (np > 0) != (nq > 0) || np == 0)) continue;
        n[i] = v;
        preimage_search(p, i, n, np, nq, out);
    }
}

}  // namespace

std::vector<PhiInput> phi_preimages(const std::vector<int64_t>& seq) {
    auto p = blown_up_p(seq);
    if (!p) throw DelzantError("sequence is not of the form (1, 1-p_1, -p_2, ..., 1-p_{k+1}) with p_i >= 2");
    std::vector<int64_t> n(p->size(), 0);
    std::vector<PhiInput> out;
    preimage_search(*p, p->size() - 1, n, 0, 1, out);
    std::sort(out.begin(), out.end(), [](const PhiInput& x, const PhiInput& y) {
        return std::tie(x.n, x.a) < std::tie(y.n, y.a);
    });
    return out;
}

std::string TautResult::str() const {
    switch (verdict) {
        case Verdict::Taut:
            if (family == "blown-up") return "def-taut; 1 preimage";
            return "def-taut; family " + family;
        case Verdict::NotTaut: return "not def-taut; " + std::to_string(preimages.size()) + " preimages";
        case Verdict::Undecided: break;
    }
    return "undecided";
}

TautResult def_taut(const std::vector<int64_t>& seq) {
    TautResult r;
    if (seq.size() == 2) {
        for (int sw = 0; sw < 2; ++sw) {
            int64_t x = seq[static_cast<size_t>(sw)], y = seq[static_cast<size_t>(1 - sw)];
            if (x == 1 && y <= 3) r.family = "(1,p)";
            else if (x == -1 && y >= -3 && y <= -1) r.family = "(-1,-p)";
            else if (x == 0 && y <= 4) r.family = "(0,p)";
            if (!r.family.empty()) {
                r.verdict = TautResult::Verdict::Taut;
                return r;
            }
        }
        return r;
    }
    const size_t n = seq.size();
    std::vector<std::vector<int64_t>> images;
    for (int dir = 0; dir < 2; ++dir)
        for (size_t rot = 0; rot < n; ++rot) {
            std::vector<int64_t> img;
            for (size_t i = 0; i < n; ++i) img.push_back(seq[dir == 0 ? (rot + i) % n : (rot + n - i) % n]);
            if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(std::move(img));
        }
    if (n == 3)
        for (auto& img : images)
            if (img[0] == 1 && img[1] == 1 && img[2] <= 1) {
                r.family = "(1,1,p)";
                r.verdict = TautResult::Verdict::Taut;
                return r;
            }
    std::optional<size_t> count;
    for (auto& img : images) {
        if (!blown_up_p(img)) continue;
        auto pre = phi_preimages(img);
        if (pre.empty()) continue;
        if (!count) {
            count = pre.size();
            r.preimages = pre;
        } else if (*count != pre.size()) {
            // readings through different components disagree; leave it open
            r.preimages.clear();
            return r;
        }
    }
    if (!count) return r;
    r.family = "blown-up";
    r.verdict = *count == 1 ? TautResult::Verdict::Taut : TautResult::Verdict::NotTaut;
    return r;
}

}  // namespace lcy
