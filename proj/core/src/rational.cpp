#include "eulermat/rational.hpp"

namespace eulermat {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        std::size_t i = (sign_ok && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, false))
        throw std::invalid_argument("Rational: bad format '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    mpq_class q(n);
    q /= mpq_class(d);
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(long k) const {
    bool invert = k < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    if (invert) {
        if (num == 0) throw std::domain_error("Rational: 0 to negative power");
        std::swap(num, den);
    }
    return Rational(mpq_class(num) / mpq_class(den));
}

Rational Rational::pow2(long k) {
    return Rational(2L).pow(k);
}

}  // namespace eulermat
