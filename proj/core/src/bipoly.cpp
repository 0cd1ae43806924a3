#include "eulermat/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace eulermat {

BiPoly BiPoly::monomial(int dx, int da, const Rational& c) {
    BiPoly p;
    if (!c.is_zero()) p.terms_[{dx, da}] = c;
    return p;
}

Rational BiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0L);
    if (!is_constant()) throw std::logic_error("BiPoly: not a constant: " + str());
    return terms_.begin()->second;
}

int BiPoly::deg_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
    return d;
}

int BiPoly::deg_alpha() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.da);
    return d;
}

Rational BiPoly::coeff(int dx, int da) const {
    auto it = terms_.find({dx, da});
    return it == terms_.end() ? Rational(0L) : it->second;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.dx + mb.dx, ma.da + mb.da};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_[m] = c;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

BiPoly BiPoly::pow(unsigned k) const {
    BiPoly r(Rational(1L));
    BiPoly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

BiPoly BiPoly::eval(const std::optional<Rational>& x_val,
                    const std::optional<Rational>& alpha_val) const {
    BiPoly r;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        Monomial rm = m;
        if (x_val) {
            v *= x_val->pow(m.dx);
            rm.dx = 0;
        }
        if (alpha_val) {
            v *= alpha_val->pow(m.da);
            rm.da = 0;
        }
        r += monomial(rm.dx, rm.da, v);
    }
    return r;
}

BiPoly BiPoly::substitute_x(const BiPoly& s) const {
    // Powers of s cached up to deg_x.
    std::vector<BiPoly> pw{BiPoly(Rational(1L))};
    int dmax = deg_x();
    for (int d = 1; d <= dmax; ++d) pw.push_back(pw.back() * s);
    BiPoly r;
    for (const auto& [m, c] : terms_)
        r += pw[static_cast<std::size_t>(m.dx)] * monomial(0, m.da, c);
    return r;
}

BiPoly BiPoly::substitute_alpha(const BiPoly& s) const {
    std::vector<BiPoly> pw{BiPoly(Rational(1L))};
    int dmax = deg_alpha();
    for (int d = 1; d <= dmax; ++d) pw.push_back(pw.back() * s);
    BiPoly r;
    for (const auto& [m, c] : terms_)
        r += pw[static_cast<std::size_t>(m.da)] * monomial(m.dx, 0, c);
    return r;
}

BiPoly BiPoly::shift_x(const BiPoly& c) const {
    if (c.deg_x() > 0) throw std::invalid_argument("shift_x: offset contains x");
    return substitute_x(var_x() + c);
}

BiPoly BiPoly::shift_alpha(const BiPoly& c) const {
    if (c.deg_alpha() > 0) throw std::invalid_argument("shift_alpha: offset contains alpha");
    return substitute_alpha(var_alpha() + c);
}

BiPoly BiPoly::derivative_x() const {
    BiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.dx > 0) r += monomial(m.dx - 1, m.da, c * Rational(m.dx));
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string vars;
        if (m.dx > 0) vars += m.dx == 1 ? "x" : "x^" + std::to_string(m.dx);
        if (m.da > 0) {
            if (!vars.empty()) vars += "*";
            vars += m.da == 1 ? "alpha" : "alpha^" + std::to_string(m.da);
        }
        if (vars.empty()) {
            out << a.str();
        } else if (a.is_one()) {
            out << vars;
        } else {
            out << a.str() << "*" << vars;
        }
    }
    return out.str();
}

}  // namespace eulermat
