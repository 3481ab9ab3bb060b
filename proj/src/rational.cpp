#include "lcy/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace lcy {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

BigInt parse_int(const std::string& s) {
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(s)) throw std::invalid_argument("not an exact rational: '" + s + "'");
        return Rational(parse_int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw std::invalid_argument("not an exact rational: '" + s + "'");
    BigInt d = parse_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(parse_int(num), d);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

BigInt floor_of(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);  // d > 0
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

BigInt ceil_of(const Rational& r) {
    return -floor_of(Rational(-r));
}

int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return v.convert_to<int64_t>();
}

}  // namespace lcy
