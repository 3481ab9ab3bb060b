#pragma once

#include "lcy/report.hpp"
#include "lcy/samples.hpp"

#include <doctest.h>

#include <initializer_list>
#include <string>

namespace lcy::test {

inline Rational q(const char* s) { return parse_rational(s); }

inline SymplecticClass M(std::initializer_list<const char*> delta) {
    std::vector<Rational> d;
    for (auto* s : delta) d.push_back(q(s));
    return SymplecticClass::blowup(d);
}

inline HomologyClass H(int l) { return HomologyClass::H(AmbientSpace::blowup(l)); }
inline HomologyClass E(int l, int i) { return HomologyClass::E(AmbientSpace::blowup(l), i); }

inline CyclicConfig cfg(int l, std::vector<HomologyClass> cs) { return CyclicConfig(AmbientSpace::blowup(l), std::move(cs)); }

}  // namespace lcy::test
