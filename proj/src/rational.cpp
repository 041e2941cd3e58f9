#include "reliab/rational.hpp"

#include <cctype>

namespace reliab {

Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && x == 0) throw std::domain_error("pow_rational: 0 raised to negative power");
    Integer num = boost::multiprecision::pow(numerator(x), static_cast<unsigned>(k));
    Integer den = boost::multiprecision::pow(denominator(x), static_cast<unsigned>(k));
    Rational r(num, den);
    return invert ? Rational(1) / r : r;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(Integer(num), d);
}

std::string to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

}  // namespace reliab
