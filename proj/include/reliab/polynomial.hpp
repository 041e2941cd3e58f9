#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reliab/rational.hpp"

namespace reliab {

// Which variable a polynomial lives in. The w-basis (edge weights) and the
// p-basis (failure probability) coexist in the recovery pipeline and must
// not be mixed by accident.
enum class VarTag { w, p };

// Univariate polynomial with exact rational coefficients, lowest degree
// first. Trailing zeros are trimmed; the zero polynomial has no
// coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(VarTag var) : var_(var) {}
    UniPoly(std::vector<Rational> coeffs, VarTag var);

    VarTag var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree; only valid for nonzero polynomials.
    std::size_t degree() const;
    Rational coeff(std::size_t i) const;

    Rational eval(const Rational& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& c) const;
    // Multiplication by var^k.
    UniPoly shifted(std::size_t k) const;

    bool operator==(const UniPoly& o) const = default;

    static UniPoly constant(const Rational& c, VarTag var);
    // c0 + c1*x for convenience.
    static UniPoly linear(const Rational& c0, const Rational& c1, VarTag var);

    // Space-separated coefficients, lowest degree first ("0" for the zero
    // polynomial).
    std::string str() const;
    static UniPoly parse(const std::string& text, VarTag var);

private:
    void trim();
    static void require_same_var(const UniPoly& a, const UniPoly& b);

    std::vector<Rational> coeffs_;
    VarTag var_ = VarTag::w;
};

// Unique polynomial of degree < points.size() through all points. All
// abscissae must be distinct.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                             VarTag var = VarTag::w);

// Given c with Z_rel(G;w) = sum_j c_j w^j and edge count m, returns
// R(G;p) = sum_j c_j p^(m-j) (1-p)^j expanded in the monomial basis of p.
UniPoly zpoly_to_relpoly(const UniPoly& c, std::size_t m);

}  // namespace reliab
