#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulermat/rational.hpp"

namespace eulermat {

// Exponent pair of one monomial x^dx * alpha^da.
struct Monomial {
    int dx = 0;
    int da = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic, x before alpha; used both for canonical term
// storage and for rendering order (highest first when iterating in reverse).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int ta = a.dx + a.da, tb = b.dx + b.da;
        if (ta != tb) return ta < tb;
        if (a.dx != b.dx) return a.dx < b.dx;
        return a.da < b.da;
    }
};

// Element of Q[x, alpha], sparse canonical form: no stored coefficient is
// zero, equality is term-map equality. Immutable in spirit; all operations
// return new values.
class BiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    BiPoly() = default;
    BiPoly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }
    BiPoly(long c) : BiPoly(Rational(c)) {}

    static BiPoly var_x() { return monomial(1, 0, Rational(1L)); }
    static BiPoly var_alpha() { return monomial(0, 1, Rational(1L)); }
    static BiPoly monomial(int dx, int da, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.dx == 0 &&
                                  terms_.begin()->first.da == 0);
    }
    // Requires is_constant().
    Rational constant_value() const;

    int deg_x() const;
    int deg_alpha() const;
    Rational coeff(int dx, int da) const;
    const TermMap& terms() const { return terms_; }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly scaled(const Rational& c) const;
    BiPoly pow(unsigned k) const;

    // Substitutes any provided values; unsubstituted variables stay formal.
    BiPoly eval(const std::optional<Rational>& x_val,
                const std::optional<Rational>& alpha_val) const;

    // General substitution x -> s (s any polynomial); alpha analogue.
    BiPoly substitute_x(const BiPoly& s) const;
    BiPoly substitute_alpha(const BiPoly& s) const;

    // p(x + c); c must not contain x.
    BiPoly shift_x(const BiPoly& c) const;
    // p with alpha replaced by alpha + c; c must not contain alpha.
    BiPoly shift_alpha(const BiPoly& c) const;

    BiPoly derivative_x() const;

    // Graded-lex rendering, highest terms first, e.g. "x^2*alpha - 1/2".
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace eulermat
