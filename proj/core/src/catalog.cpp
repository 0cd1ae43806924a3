#include "eulermat/catalog.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulermat/sequences.hpp"

namespace eulermat::catalog {

namespace {

using seq::binomial;

void require(bool present, bool needed, const char* kind, const char* param) {
    if (needed && !present)
        throw std::invalid_argument(std::string(kind) + ": missing parameter " + param);
    if (!needed && present)
        throw std::invalid_argument(std::string(kind) + ": unexpected parameter " + param);
}

void check_params(const MatrixSpec& s, const char* kind, bool need_x, bool need_alpha,
                  bool need_m, bool need_k) {
    require(s.x.has_value(), need_x, kind, "x");
    require(s.alpha.has_value(), need_alpha, kind, "alpha");
    require(s.m.has_value(), need_m, kind, "m");
    require(s.k.has_value(), need_k, kind, "k");
    require(s.y.has_value(), false, kind, "y");
}

// E_0..E_n as polynomials with the requested x / alpha substitutions applied.
std::vector<BiPoly> euler_rows(unsigned n, const std::optional<Param>& alpha,
                               const std::optional<Param>& x) {
    std::optional<Rational> a = alpha ? alpha->as_optional() : std::optional<Rational>{};
    auto rows = seq::euler_poly_table(n, a);
    if (x && !x->formal)
        for (auto& r : rows) r = r.eval(x->value, {});
    return rows;
}

BiPoly euler_at(const std::vector<BiPoly>& rows, long d) {
    if (d < 0) return BiPoly();
    return rows[static_cast<std::size_t>(d)];
}

BiPoly param_x_poly(const Param& p) {
    return p.formal ? BiPoly::var_x() : BiPoly(p.value);
}

Mat pascal(unsigned n, const Param& x) {
    Mat r(static_cast<int>(n) + 1);
    BiPoly xv = param_x_poly(x);
    std::vector<BiPoly> pw{BiPoly(Rational(1L))};
    for (unsigned d = 1; d <= n; ++d) pw.push_back(pw.back() * xv);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j)
            r.at(i, j) = pw[static_cast<std::size_t>(i - j)].scaled(binomial(i, j));
    return r;
}

Mat summation_s(unsigned k, const Param& x) {
    Mat r(static_cast<int>(k) + 1);
    BiPoly xv = param_x_poly(x);
    std::vector<BiPoly> pw{BiPoly(Rational(1L))};
    for (unsigned d = 1; d <= k; ++d) pw.push_back(pw.back() * xv);
    for (int i = 0; i <= static_cast<int>(k); ++i)
        for (int j = 0; j <= i; ++j) r.at(i, j) = pw[static_cast<std::size_t>(i - j)];
    return r;
}

Mat gen_euler(unsigned n, const std::optional<Param>& alpha, const std::optional<Param>& x) {
    auto rows = euler_rows(n, alpha, x);
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j) r.at(i, j) = rows[static_cast<std::size_t>(i - j)].scaled(binomial(i, j));
    return r;
}

Mat euler_matrix(unsigned n) {
    // Entries vanish for even positive i-j (Euler numbers E_{2k} = 0, k >= 1).
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i) {
        r.at(i, i) = BiPoly(Rational(1L));
        for (int j = 0; j < i; ++j)
            if ((i - j) % 2 == 1)
                r.at(i, j) = BiPoly(binomial(i, j) * seq::euler_number(static_cast<unsigned>(i - j)));
    }
    return r;
}

Mat specialized_euler(unsigned n) {
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j)
            r.at(i, j) = BiPoly(binomial(i, j) * Rational::pow2(j - i) *
                                seq::classical_euler_number(static_cast<unsigned>(i - j)));
    return r;
}

Mat d_matrix(unsigned n) {
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j) {
            long parity = (i - j) % 2 == 0 ? 2 : 0;
            if (parity)
                r.at(i, j) = BiPoly(Rational(parity) * binomial(i, j) * Rational::pow2(j - i - 1));
        }
    return r;
}

Mat toeplitz_lower(unsigned n, const std::vector<Rational>& band) {
    // band[d] is the entry at i-j = d.
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j)
            if (!band[static_cast<std::size_t>(i - j)].is_zero())
                r.at(i, j) = BiPoly(band[static_cast<std::size_t>(i - j)]);
    return r;
}

Rational require_nonzero_x(const MatrixSpec& s, const char* kind) {
    if (s.x->formal)
        throw std::invalid_argument(std::string(kind) + ": formal x is not supported (entries involve x^{-j-1})");
    if (s.x->value.is_zero())
        throw std::domain_error(std::string(kind) + ": x must be nonzero");
    return s.x->value;
}

Mat g_mat(unsigned n, const Rational& x) {
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= static_cast<int>(n); ++j) {
            Rational bracket = x.pow(i + 1) * binomial(i, j) -
                               Rational(3L) * x.pow(i) * binomial(i - 1, j);
            Rational m_val = seq::helper_m(i - 2, j).eval(x / Rational(2L), {}).constant_value();
            Rational sign = i % 2 == 0 ? Rational(1L) : Rational(-1L);
            bracket += Rational(5L) * sign * Rational::pow2(i - 2) * x * m_val;
            Rational e = x.pow(-(j + 1)) * bracket;
            if (!e.is_zero()) r.at(i, j) = BiPoly(e);
        }
    return r;
}

Mat h_mat(unsigned n, const Rational& x) {
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= static_cast<int>(n); ++j) {
            Rational bracket = x.pow(i + 1) * binomial(i, j) -
                               Rational(3L) * x.pow(i) * binomial(i, j + 1);
            Rational n_val =
                seq::helper_n(i, j + 2).eval(Rational(2L) / x, {}).constant_value();
            Rational sign = j % 2 == 0 ? Rational(1L) : Rational(-1L);
            bracket += sign * Rational(5L) * x.pow(i + j + 1) * Rational::pow2(-(j + 2)) * n_val;
            Rational e = x.pow(-(j + 1)) * bracket;
            if (!e.is_zero()) r.at(i, j) = BiPoly(e);
        }
    return r;
}

Mat m_mat(unsigned n, const std::optional<Param>& alpha, const std::optional<Param>& x) {
    auto rows = euler_rows(n, alpha, x);
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= static_cast<int>(n); ++j)
            r.at(i, j) = euler_at(rows, i - j).scaled(binomial(i, j)) -
                         euler_at(rows, i - j - 1).scaled(binomial(i - 1, j)) -
                         euler_at(rows, i - j - 2).scaled(binomial(i - 2, j));
    return r;
}

Mat n_mat(unsigned n, const std::optional<Param>& alpha, const std::optional<Param>& x) {
    auto rows = euler_rows(n, alpha, x);
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= static_cast<int>(n); ++j)
            r.at(i, j) = euler_at(rows, i - j).scaled(binomial(i, j)) -
                         euler_at(rows, i - j - 1).scaled(binomial(i, j + 1)) -
                         euler_at(rows, i - j - 2).scaled(binomial(i, j + 2));
    return r;
}

Rational lucas_band_tail(int d) {
    // 5*(-1)^d*2^{d-2} for d >= 2.
    Rational s = d % 2 == 0 ? Rational(5L) : Rational(-5L);
    return s * Rational::pow2(d - 2);
}

Mat l1_mat(unsigned n, const std::optional<Param>& alpha, const std::optional<Param>& x,
           bool literal_second_term) {
    auto rows = euler_rows(n, alpha, x);
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= static_cast<int>(n); ++j) {
            Rational second = literal_second_term ? binomial(i - j, j) : binomial(i - 1, j);
            BiPoly e = euler_at(rows, i - j).scaled(binomial(i, j)) -
                       euler_at(rows, i - j - 1).scaled(Rational(3L) * second);
            for (int k = j; k <= i - 2; ++k)
                e += euler_at(rows, k - j).scaled(lucas_band_tail(i - k) * binomial(k, j));
            r.at(i, j) = e;
        }
    return r;
}

Mat l2_mat(unsigned n, const std::optional<Param>& alpha, const std::optional<Param>& x) {
    auto rows = euler_rows(n, alpha, x);
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= static_cast<int>(n); ++j) {
            BiPoly e = euler_at(rows, i - j).scaled(binomial(i, j)) -
                       euler_at(rows, i - j - 1).scaled(Rational(3L) * binomial(i, j + 1));
            for (int k = j + 2; k <= i; ++k)
                e += euler_at(rows, i - k).scaled(lucas_band_tail(k - j) * binomial(i, k));
            r.at(i, j) = e;
        }
    return r;
}

// (-m)(-m-1)...(-m-k+1); links the first-kind Stirling expansion to E^(m).
Rational falling_neg(long m, unsigned k) {
    Rational r(1L);
    for (unsigned i = 0; i < k; ++i) r *= Rational(-m - static_cast<long>(i));
    return r;
}

Mat st_m(unsigned n, unsigned m, bool literal) {
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j) {
            unsigned d = static_cast<unsigned>(i - j);
            Rational sum(0L);
            for (unsigned k = 0; k <= d; ++k) {
                if (literal) {
                    Rational mm(static_cast<long>(m));
                    sum += seq::stirling_first(d, k) * (-mm).pow(static_cast<long>(k));
                } else {
                    sum += seq::stirling_second(d, k) * falling_neg(static_cast<long>(m), k) *
                           Rational::pow2(-static_cast<long>(k));
                }
            }
            Rational e = binomial(i, j) * sum;
            if (!e.is_zero()) r.at(i, j) = BiPoly(e);
        }
    return r;
}

Mat c_or_d_tilde(unsigned n, bool d_variant, bool literal) {
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j) {
            unsigned d = static_cast<unsigned>(i - j);
            Rational sum(0L);
            for (unsigned k = 0; k <= d; ++k) {
                unsigned second = d_variant ? k + 1 : k;
                mpz_class fact;
                mpz_fac_ui(fact.get_mpz_t(), second);
                Rational stirling = literal ? seq::stirling_second(d - k, second)
                                            : seq::stirling_second(d, second);
                sum += Rational(-1L, 2L).pow(static_cast<long>(k)) * Rational(fact) * stirling;
            }
            Rational sign = d % 2 == 0 ? Rational(1L) : Rational(-1L);
            Rational e = binomial(i, j) * sign * sum;
            if (!e.is_zero()) r.at(i, j) = BiPoly(e);
        }
    return r;
}

Mat shifted_euler(unsigned n, const Param& x) {
    auto rows = seq::euler_poly_table(n, Rational(1L));
    Mat r(static_cast<int>(n) + 1);
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= static_cast<int>(n); ++j) {
            BiPoly e = rows[static_cast<std::size_t>(i)].shift_x(BiPoly(Rational(static_cast<long>(j))));
            if (!x.formal) e = e.eval(x.value, {});
            r.at(i, j) = e;
        }
    return r;
}

Mat vandermonde(unsigned n, const Param& x) {
    Mat r(static_cast<int>(n) + 1);
    BiPoly xv = param_x_poly(x);
    for (int j = 0; j <= static_cast<int>(n); ++j) {
        BiPoly base = xv + BiPoly(Rational(static_cast<long>(j)));
        BiPoly p(Rational(1L));
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            r.at(i, j) = p;
            if (i < static_cast<int>(n)) p = p * base;
        }
    }
    return r;
}

Mat delta_binom(unsigned n, const Param& x) {
    BiPoly xv = param_x_poly(x);
    Mat r(static_cast<int>(n) + 1);
    std::vector<BiPoly> col;  // binomial_poly(x, d)
    for (unsigned d = 0; d <= n; ++d) col.push_back(seq::binomial_poly(xv, d));
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= i; ++j) r.at(i, j) = col[static_cast<std::size_t>(i - j)];
    return r;
}

}  // namespace

Mat build(const MatrixSpec& s) {
    switch (s.kind) {
        case MatrixKind::Identity:
            check_params(s, "identity", false, false, false, false);
            return Mat::identity(static_cast<int>(s.n) + 1);
        case MatrixKind::Pascal:
            check_params(s, "pascal", true, false, false, false);
            return pascal(s.n, *s.x);
        case MatrixKind::SummationS:
            check_params(s, "summation-s", true, false, false, true);
            return summation_s(*s.k, *s.x);
        case MatrixKind::SummationG: {
            check_params(s, "summation-g", true, false, false, true);
            unsigned k = *s.k;
            if (k < 1 || k > s.n)
                throw std::invalid_argument("summation-g: k must be in 1..n");
            Mat sk = summation_s(k, *s.x);
            if (k == s.n) return sk;
            return Mat::identity(static_cast<int>(s.n - k)).direct_sum(sk);
        }
        case MatrixKind::PascalDerivation: {
            check_params(s, "pascal-derivation", false, false, false, false);
            Mat r(static_cast<int>(s.n) + 1);
            for (int j = 0; j + 1 <= static_cast<int>(s.n); ++j)
                r.at(j + 1, j) = BiPoly(Rational(static_cast<long>(j) + 1));
            return r;
        }
        case MatrixKind::GenEuler:
            check_params(s, "gen-euler", true, true, false, false);
            return gen_euler(s.n, s.alpha, s.x);
        case MatrixKind::EulerPoly:
            check_params(s, "euler-poly", true, false, false, false);
            return gen_euler(s.n, Param::val(Rational(1L)), s.x);
        case MatrixKind::Euler:
            check_params(s, "euler", false, false, false, false);
            return euler_matrix(s.n);
        case MatrixKind::SpecializedEuler:
            check_params(s, "specialized-euler", false, false, false, false);
            return specialized_euler(s.n);
        case MatrixKind::DMatrix:
            check_params(s, "d-matrix", false, false, false, false);
            return d_matrix(s.n);
        case MatrixKind::Fibonacci: {
            check_params(s, "fibonacci", false, false, false, false);
            std::vector<Rational> band;
            for (unsigned d = 0; d <= s.n; ++d) band.push_back(seq::fibonacci(d + 1));
            return toeplitz_lower(s.n, band);
        }
        case MatrixKind::FibonacciInverseClosed: {
            check_params(s, "fibonacci-inverse-closed", false, false, false, false);
            std::vector<Rational> band(s.n + 1, Rational(0L));
            band[0] = Rational(1L);
            if (s.n >= 1) band[1] = Rational(-1L);
            if (s.n >= 2) band[2] = Rational(-1L);
            return toeplitz_lower(s.n, band);
        }
        case MatrixKind::Lucas: {
            check_params(s, "lucas", false, false, false, false);
            std::vector<Rational> band;
            for (unsigned d = 0; d <= s.n; ++d) band.push_back(seq::lucas(d + 1));
            return toeplitz_lower(s.n, band);
        }
        case MatrixKind::LucasInverseClosed: {
            check_params(s, "lucas-inverse-closed", false, false, false, false);
            std::vector<Rational> band(s.n + 1, Rational(0L));
            band[0] = Rational(1L);
            if (s.n >= 1) band[1] = Rational(-3L);
            for (unsigned d = 2; d <= s.n; ++d) band[d] = lucas_band_tail(static_cast<int>(d));
            return toeplitz_lower(s.n, band);
        }
        case MatrixKind::GMat:
            check_params(s, "g-mat", true, false, false, false);
            return g_mat(s.n, require_nonzero_x(s, "g-mat"));
        case MatrixKind::HMat:
            check_params(s, "h-mat", true, false, false, false);
            return h_mat(s.n, require_nonzero_x(s, "h-mat"));
        case MatrixKind::MMat:
            check_params(s, "m-mat", true, true, false, false);
            return m_mat(s.n, s.alpha, s.x);
        case MatrixKind::NMat:
            check_params(s, "n-mat", true, true, false, false);
            return n_mat(s.n, s.alpha, s.x);
        case MatrixKind::L1Mat:
            check_params(s, "l1-mat", true, true, false, false);
            return l1_mat(s.n, s.alpha, s.x, false);
        case MatrixKind::L2Mat:
            check_params(s, "l2-mat", true, true, false, false);
            return l2_mat(s.n, s.alpha, s.x);
        case MatrixKind::StirlingFirst: {
            check_params(s, "stirling-first", false, false, false, false);
            Mat r(static_cast<int>(s.n) + 1);
            for (int i = 0; i <= static_cast<int>(s.n); ++i)
                for (int j = 0; j <= i; ++j) {
                    Rational v = seq::stirling_first(static_cast<unsigned>(i), static_cast<unsigned>(j));
                    if (!v.is_zero()) r.at(i, j) = BiPoly(v);
                }
            return r;
        }
        case MatrixKind::StirlingSecond: {
            check_params(s, "stirling-second", false, false, false, false);
            Mat r(static_cast<int>(s.n) + 1);
            for (int i = 0; i <= static_cast<int>(s.n); ++i)
                for (int j = 0; j <= i; ++j) {
                    Rational v = seq::stirling_second(static_cast<unsigned>(i), static_cast<unsigned>(j));
                    if (!v.is_zero()) r.at(i, j) = BiPoly(v);
                }
            return r;
        }
        case MatrixKind::FactorialStirling: {
            check_params(s, "factorial-stirling", false, false, false, false);
            if (s.n < 1) throw std::invalid_argument("factorial-stirling: n must be >= 1");
            Mat r(static_cast<int>(s.n));
            for (unsigned i = 1; i <= s.n; ++i)
                for (unsigned j = 1; j <= i; ++j) {
                    mpz_class fact;
                    mpz_fac_ui(fact.get_mpz_t(), j);
                    Rational v = Rational(fact) * seq::stirling_second(i, j);
                    if (!v.is_zero())
                        r.at(static_cast<int>(i) - 1, static_cast<int>(j) - 1) = BiPoly(v);
                }
            return r;
        }
        case MatrixKind::StM:
            check_params(s, "st-m", false, false, true, false);
            if (*s.m < 1) throw std::invalid_argument("st-m: m must be a positive integer");
            return st_m(s.n, *s.m, false);
        case MatrixKind::CTilde:
            check_params(s, "c-tilde", false, false, false, false);
            return c_or_d_tilde(s.n, false, false);
        case MatrixKind::DTilde:
            check_params(s, "d-tilde", false, false, false, false);
            return c_or_d_tilde(s.n, true, false);
        case MatrixKind::ShiftedEuler:
            check_params(s, "shifted-euler", true, false, false, false);
            return shifted_euler(s.n, *s.x);
        case MatrixKind::Vandermonde:
            check_params(s, "vandermonde", true, false, false, false);
            return vandermonde(s.n, *s.x);
        case MatrixKind::DeltaBinom:
            check_params(s, "delta-binom", true, false, false, false);
            return delta_binom(s.n, *s.x);
    }
    throw std::logic_error("build: unknown kind");
}

Mat euler_inverse(unsigned n) {
    return build({MatrixKind::DMatrix, n}) *
           build({MatrixKind::Pascal, n, Param::val(Rational(1L, 2L))});
}

Mat build_l1_literal(unsigned n, const std::optional<Param>& alpha, const std::optional<Param>& x) {
    return l1_mat(n, alpha, x, true);
}

Mat build_stm_literal(unsigned n, unsigned m) { return st_m(n, m, true); }
Mat build_ctilde_literal(unsigned n) { return c_or_d_tilde(n, false, true); }
Mat build_dtilde_literal(unsigned n) { return c_or_d_tilde(n, true, true); }

namespace {
constexpr std::array<std::pair<MatrixKind, const char*>, 29> kKindNames{{
    {MatrixKind::Identity, "identity"},
    {MatrixKind::Pascal, "pascal"},
    {MatrixKind::SummationS, "summation-s"},
    {MatrixKind::SummationG, "summation-g"},
    {MatrixKind::PascalDerivation, "pascal-derivation"},
    {MatrixKind::GenEuler, "gen-euler"},
    {MatrixKind::EulerPoly, "euler-poly"},
    {MatrixKind::Euler, "euler"},
    {MatrixKind::SpecializedEuler, "specialized-euler"},
    {MatrixKind::DMatrix, "d-matrix"},
    {MatrixKind::Fibonacci, "fibonacci"},
    {MatrixKind::FibonacciInverseClosed, "fibonacci-inverse-closed"},
    {MatrixKind::Lucas, "lucas"},
    {MatrixKind::LucasInverseClosed, "lucas-inverse-closed"},
    {MatrixKind::GMat, "g-mat"},
    {MatrixKind::HMat, "h-mat"},
    {MatrixKind::MMat, "m-mat"},
    {MatrixKind::NMat, "n-mat"},
    {MatrixKind::L1Mat, "l1-mat"},
    {MatrixKind::L2Mat, "l2-mat"},
    {MatrixKind::StirlingFirst, "stirling-first"},
    {MatrixKind::StirlingSecond, "stirling-second"},
    {MatrixKind::FactorialStirling, "factorial-stirling"},
    {MatrixKind::StM, "st-m"},
    {MatrixKind::CTilde, "c-tilde"},
    {MatrixKind::DTilde, "d-tilde"},
    {MatrixKind::ShiftedEuler, "shifted-euler"},
    {MatrixKind::Vandermonde, "vandermonde"},
    {MatrixKind::DeltaBinom, "delta-binom"},
}};
}  // namespace

std::string kind_name(MatrixKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

std::optional<MatrixKind> kind_from_name(const std::string& name) {
    for (const auto& [k, n] : kKindNames)
        if (name == n) return k;
    return std::nullopt;
}

}  // namespace eulermat::catalog
