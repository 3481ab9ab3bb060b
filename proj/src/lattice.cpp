#include "lcy/lattice.hpp"

#include <cstdlib>
#include <sstream>

namespace lcy {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("intersection form overflow");
    return r;
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

void require_same_space(const AmbientSpace& a, const AmbientSpace& b) {
    if (!(a == b)) throw LatticeError("classes live in different spaces: " + a.name() + " vs " + b.name());
}

}  // namespace

AmbientSpace AmbientSpace::blowup(int l) {
    if (l < 0) throw LatticeError("negative blow-up count");
    if (l > hard_max_l()) throw LatticeError("l=" + std::to_string(l) + " exceeds the hard cap of 16");
    return {Kind::Blowup, l};
}

std::string AmbientSpace::name() const {
    return is_quadric() ? "quadric" : "M" + std::to_string(l);
}

AmbientSpace AmbientSpace::parse(const std::string& name) {
    if (name == "quadric" || name == "Quadric" || name == "S2xS2") return quadric();
    if (name == "CP2") return blowup(0);
    if (name.size() >= 2 && (name[0] == 'M' || name[0] == 'm')) {
        std::string digits = name.substr(1);
        for (char c : digits)
            if (c < '0' || c > '9') throw LatticeError("unknown space '" + name + "'");
        return blowup(std::stoi(digits));
    }
    throw LatticeError("unknown space '" + name + "' (expected M<l> or quadric)");
}

int max_l() {
    const char* env = std::getenv("LCY_MAX_L");
    if (!env) return 6;
    int v = std::atoi(env);
    if (v < 0) return 0;
    return v > hard_max_l() ? hard_max_l() : v;
}

HomologyClass::HomologyClass(AmbientSpace s, std::vector<int64_t> c) : space(s), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != space.rank())
        throw LatticeError("coefficient vector length " + std::to_string(coeffs.size()) + " does not match " +
                           space.name());
}

HomologyClass HomologyClass::zero(AmbientSpace s) {
    return HomologyClass(s, std::vector<int64_t>(static_cast<size_t>(s.rank()), 0));
}

HomologyClass HomologyClass::H(AmbientSpace s) {
    if (s.is_quadric()) throw LatticeError("H is not a basis element of the quadric");
    auto a = zero(s);
    a.coeffs[0] = 1;
    return a;
}

HomologyClass HomologyClass::E(AmbientSpace s, int i) {
    if (s.is_quadric() || i < 1 || i > s.l) throw LatticeError("E" + std::to_string(i) + " not in " + s.name());
    auto a = zero(s);
    a.coeffs[static_cast<size_t>(i)] = 1;
    return a;
}

HomologyClass HomologyClass::F() { return HomologyClass(AmbientSpace::quadric(), {1, 0}); }
HomologyClass HomologyClass::B() { return HomologyClass(AmbientSpace::quadric(), {0, 1}); }

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
    require_same_space(space, o.space);
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = checked_add(coeffs[i], o.coeffs[i]);
    return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
    require_same_space(space, o.space);
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = checked_add(coeffs[i], -o.coeffs[i]);
    return *this;
}

HomologyClass operator*(int64_t k, HomologyClass a) {
    for (auto& c : a.coeffs) c = checked_mul(k, c);
    return a;
}

HomologyClass HomologyClass::lifted(int l2) const {
    if (space.is_quadric() || l2 < space.l) throw LatticeError("cannot lift " + str());
    auto out = zero(AmbientSpace::blowup(l2));
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] = coeffs[i];
    return out;
}

std::string HomologyClass::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](int64_t c, const std::string& name) {
        if (c == 0) return;
        if (c < 0) os << "-";
        else if (!first) os << "+";
        if (c != 1 && c != -1) os << (c < 0 ? -c : c);
        os << name;
        first = false;
    };
    if (space.is_quadric()) {
        term(coeffs[0], "F");
        term(coeffs[1], "B");
    } else {
        term(coeffs[0], "H");
        for (int i = 1; i <= space.l; ++i) term(coeffs[static_cast<size_t>(i)], "E" + std::to_string(i));
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomologyClass& a) { return os << a.str(); }

SymplecticClass SymplecticClass::blowup(std::vector<Rational> delta) {
    SymplecticClass w;
    w.space = AmbientSpace::blowup(static_cast<int>(delta.size()));
    w.delta = std::move(delta);
    return w;
}

SymplecticClass SymplecticClass::quadric(Rational mu) {
    SymplecticClass w;
    w.space = AmbientSpace::quadric();
    w.mu = std::move(mu);
    return w;
}

Rational SymplecticClass::d(int i) const {
    if (i >= 1 && i <= static_cast<int>(delta.size())) return delta[static_cast<size_t>(i - 1)];
    return Rational(0);
}

std::string SymplecticClass::str() const {
    if (space.is_quadric()) return "mu=" + to_string(mu);
    std::string s = "(";
    for (size_t i = 0; i < delta.size(); ++i) s += (i ? "," : "") + to_string(delta[i]);
    return s + ")";
}

int64_t intersect(const HomologyClass& a, const HomologyClass& b) {
    require_same_space(a.space, b.space);
    if (a.space.is_quadric())
        return checked_add(checked_mul(a.coeffs[0], b.coeffs[1]), checked_mul(a.coeffs[1], b.coeffs[0]));
    int64_t s = checked_mul(a.coeffs[0], b.coeffs[0]);
    for (size_t i = 1; i < a.coeffs.size(); ++i) s = checked_add(s, -checked_mul(a.coeffs[i], b.coeffs[i]));
    return s;
}

int64_t square(const HomologyClass& a) { return intersect(a, a); }

HomologyClass c1(AmbientSpace s) {
    if (s.is_quadric()) return HomologyClass(s, {2, 2});
    std::vector<int64_t> c(static_cast<size_t>(s.rank()), -1);
    c[0] = 3;
    return HomologyClass(s, c);
}

int64_t genus(const HomologyClass& a) {
    int64_t twice = square(a) - intersect(c1(a.space), a);
    if (twice % 2 != 0) throw LatticeError("non-integral genus for " + a.str());
    return 1 + twice / 2;
}

Rational area(const SymplecticClass& w, const HomologyClass& a) {
    require_same_space(w.space, a.space);
    if (a.space.is_quadric()) return Rational(a.coeffs[0]) + Rational(a.coeffs[1]) * w.mu;
    Rational s(a.coeffs[0]);
    for (int i = 1; i <= a.space.l; ++i) s += Rational(a.coeffs[static_cast<size_t>(i)]) * w.delta[static_cast<size_t>(i - 1)];
    return s;
}

bool is_reduced(const SymplecticClass& w) {
    if (w.space.is_quadric()) return w.mu >= 1;
    const int l = w.space.l;
    for (int i = 1; i <= l; ++i) {
        if (w.d(i) <= 0) return false;
        if (i > 1 && w.d(i) > w.d(i - 1)) return false;
    }
    Rational top = w.d(1) + w.d(2) + w.d(3);
    // With l <= 2 the equality case gives an exceptional class of zero area.
    if (l <= 2) return top < 1;
    return top <= 1;
}

bool is_c1_nef(const SymplecticClass& w) {
    if (!is_reduced(w)) return false;
    if (w.space.is_quadric()) return true;
    Rational sum(0);
    for (const auto& d : w.delta) sum += d;
    return 3 - sum > 0;
}

bool is_restrictive(const SymplecticClass& w) {
    if (w.space.is_quadric() || !is_reduced(w)) return false;
    const int l = w.space.l;
    Rational sum(0);
    for (const auto& d : w.delta) sum += d;
    if (!(sum < 1)) return false;
    if (l >= 2 && !(w.d(1) > w.d(2))) return false;
    for (int k = 2; k <= l - 1; ++k) {
        Rational tail(0);
        for (int i = k + 1; i <= l; ++i) tail += w.d(i);
        if (!(w.d(k) > tail)) return false;
    }
    return true;
}

bool is_interior(const SymplecticClass& w) {
    if (!is_reduced(w)) return false;
    if (w.space.is_quadric()) return w.mu > 1;
    const int l = w.space.l;
    for (int i = 2; i <= l; ++i)
        if (!(w.d(i) < w.d(i - 1))) return false;
    // d1+d2+d3 dominates every other triple sum.
    return w.d(1) + w.d(2) + w.d(3) < 1;
}

HomologyClass reflect(const HomologyClass& a, const HomologyClass& mirror) {
    if (square(mirror) != -2) throw LatticeError("reflection mirror " + mirror.str() + " is not a (-2)-class");
    return a + intersect(a, mirror) * mirror;
}

std::vector<HomologyClass> reflection_generators(const SymplecticClass& w) {
    std::vector<HomologyClass> out;
    if (w.space.is_quadric()) {
        if (w.mu == 1) out.push_back(HomologyClass::F() - HomologyClass::B());
        return out;
    }
    const auto s = w.space;
    const int l = s.l;
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            if (w.d(i) == w.d(j)) out.push_back(HomologyClass::E(s, i) - HomologyClass::E(s, j));
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k)
                if (w.d(i) + w.d(j) + w.d(k) == 1)
                    out.push_back(HomologyClass::H(s) - HomologyClass::E(s, i) - HomologyClass::E(s, j) -
                                  HomologyClass::E(s, k));
    return out;
}

}  // namespace lcy
