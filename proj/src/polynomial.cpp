#include "reliab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace reliab {

UniPoly::UniPoly(std::vector<Rational> coeffs, VarTag var)
    : coeffs_(std::move(coeffs)), var_(var) {
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t UniPoly::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.size() - 1;
}

Rational UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void UniPoly::require_same_var(const UniPoly& a, const UniPoly& b) {
    if (a.var_ != b.var_)
        throw std::invalid_argument("mixing polynomials in different variables");
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    require_same_var(*this, o);
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    return *this + o.scaled(Rational(-1));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    require_same_var(*this, o);
    if (is_zero() || o.is_zero()) return UniPoly(var_);
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::scaled(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Rational> out(k, Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::constant(const Rational& c, VarTag var) {
    return UniPoly({c}, var);
}

UniPoly UniPoly::linear(const Rational& c0, const Rational& c1, VarTag var) {
    return UniPoly({c0, c1}, var);
}

std::string UniPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ' ';
        out << to_string(coeffs_[i]);
    }
    return out.str();
}

UniPoly UniPoly::parse(const std::string& text, VarTag var) {
    std::istringstream in(text);
    std::vector<Rational> c;
    std::string tok;
    while (in >> tok) c.push_back(parse_rational(tok));
    return UniPoly(std::move(c), var);
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                             VarTag var) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("duplicate abscissa in interpolation");

    UniPoly result(var);
    for (std::size_t i = 0; i < points.size(); ++i) {
        UniPoly basis = UniPoly::constant(Rational(1), var);
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly::linear(-points[j].first, Rational(1), var);
            denom *= points[i].first - points[j].first;
        }
        result = result + basis.scaled(points[i].second / denom);
    }
    return result;
}

UniPoly zpoly_to_relpoly(const UniPoly& c, std::size_t m) {
    if (c.var() != VarTag::w)
        throw std::invalid_argument("zpoly_to_relpoly expects a w-polynomial");
    if (!c.is_zero() && c.degree() > m)
        throw std::invalid_argument("w-polynomial degree exceeds edge count");
    UniPoly result(VarTag::p);
    UniPoly one_minus_p = UniPoly::linear(Rational(1), Rational(-1), VarTag::p);
    UniPoly pw = UniPoly::constant(Rational(1), VarTag::p);  // (1-p)^j
    for (std::size_t j = 0; j <= m; ++j) {
        Rational cj = c.coeff(j);
        if (cj != 0) result = result + pw.scaled(cj).shifted(m - j);
        pw = pw * one_minus_p;
    }
    return result;
}

}  // namespace reliab
