#include "eulermat/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eulermat::seq {

Rational binomial(long i, long j) {
    if (j < 0 || i < 0 || j > i) return Rational(0L);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
    return Rational(r);
}

BiPoly falling_factorial(const BiPoly& base, unsigned k) {
    BiPoly r(Rational(1L));
    for (unsigned i = 0; i < k; ++i) r = r * (base - BiPoly(Rational(static_cast<long>(i))));
    return r;
}

BiPoly binomial_poly(const BiPoly& base, unsigned k) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    return falling_factorial(base, k).scaled(Rational(mpq_class(1) / mpq_class(fact)));
}

namespace {

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Coefficients a_k = [z^k] (e^z + 1)/2 - 1 = 1/(2*k!) for k >= 1.
// log(1+u) then exp(alpha * .) as truncated formal series; all series are
// stored as plain coefficient vectors [z^0..z^n].
std::vector<Rational> log_half_series(unsigned n) {
    std::vector<Rational> u(n + 1, Rational(0L));
    for (unsigned k = 1; k <= n; ++k) u[k] = Rational(1L, 2L) / factorial(k);
    // log(1+u) = sum_{m>=1} (-1)^{m+1} u^m / m, u has zero constant term.
    std::vector<Rational> res(n + 1, Rational(0L));
    std::vector<Rational> upow(n + 1, Rational(0L));
    upow[0] = Rational(1L);
    for (unsigned m = 1; m <= n; ++m) {
        // upow <- upow * u (truncated)
        std::vector<Rational> next(n + 1, Rational(0L));
        for (unsigned a = 0; a + 1 <= n; ++a) {
            if (upow[a].is_zero()) continue;
            for (unsigned b = 1; a + b <= n; ++b) next[a + b] += upow[a] * u[b];
        }
        upow = std::move(next);
        Rational c = Rational(m % 2 == 1 ? 1L : -1L) / Rational(static_cast<long>(m));
        for (unsigned k = m; k <= n; ++k) res[k] += c * upow[k];
    }
    return res;
}

}  // namespace

std::vector<BiPoly> series_coeffs(unsigned n) {
    // exp(alpha * L(z)) with L = log((e^z+1)/2); L has zero constant term,
    // so the exp series truncates at order n.
    std::vector<Rational> L = log_half_series(n);
    std::vector<BiPoly> res(n + 1);
    res[0] = BiPoly(Rational(1L));
    // cur holds L^m coefficients; term m contributes alpha^m * L^m / m!.
    std::vector<Rational> cur(n + 1, Rational(0L));
    cur[0] = Rational(1L);
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Rational> next(n + 1, Rational(0L));
        for (unsigned a = 0; a + 1 <= n; ++a) {
            if (cur[a].is_zero()) continue;
            for (unsigned b = 1; a + b <= n; ++b) next[a + b] += cur[a] * L[b];
        }
        cur = std::move(next);
        Rational invfact = Rational(1L) / factorial(m);
        for (unsigned k = m; k <= n; ++k)
            if (!cur[k].is_zero())
                res[k] += BiPoly::monomial(0, static_cast<int>(m), cur[k] * invfact);
    }
    // c_k = k! * [z^k]
    for (unsigned k = 0; k <= n; ++k) res[k] = res[k].scaled(factorial(k));
    return res;
}

std::vector<BiPoly> euler_poly_table(unsigned n, const std::optional<Rational>& alpha) {
    std::vector<BiPoly> c = series_coeffs(n);
    if (alpha)
        for (auto& p : c) p = p.eval({}, alpha);
    // E_k = x^k - sum_{j=1..k} C(k,j) c_j E_{k-j}
    std::vector<BiPoly> rows(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        BiPoly e = BiPoly::monomial(static_cast<int>(k), 0, Rational(1L));
        for (unsigned j = 1; j <= k; ++j)
            e -= (c[j] * rows[k - j]).scaled(binomial(k, j));
        rows[k] = e;
    }
    return rows;
}

BiPoly gen_euler_poly(unsigned n, const std::optional<Rational>& alpha) {
    return euler_poly_table(n, alpha).back();
}

BiPoly gen_euler_number(unsigned n, const std::optional<Rational>& alpha) {
    return gen_euler_poly(n, alpha).eval(Rational(0L), {});
}

Rational classical_euler_number(unsigned n) {
    // cosh(z) * sum eps_n z^n/n! = 1, cosh has coefficient 1 at even orders:
    // eps_n = delta_{n,0} - sum_{k=2,4,..<=n} C(n,k) eps_{n-k}.
    std::vector<Rational> eps(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        Rational v = m == 0 ? Rational(1L) : Rational(0L);
        for (unsigned k = 2; k <= m; k += 2) v -= binomial(m, k) * eps[m - k];
        eps[m] = v;
    }
    return eps[n];
}

Rational euler_number(unsigned n) {
    // E_n(0) from the alpha=1 convolution: sum_k C(n,k) c_k(1) E_{n-k}(0) = 0^n,
    // with c_k(1) = [k=0] + 1/2 for k >= 1 (coefficients of (e^z+1)/2).
    std::vector<Rational> e(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        Rational v = m == 0 ? Rational(1L) : Rational(0L);
        for (unsigned k = 1; k <= m; ++k) v -= binomial(m, k) * e[m - k] * Rational(1L, 2L);
        e[m] = v;
    }
    return e[n];
}

Rational fibonacci(unsigned n) {
    mpz_class f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational lucas(unsigned n) {
    if (n == 0) throw std::domain_error("lucas: sequence starts at L_1");
    if (n == 1) return Rational(1L);
    if (n == 2) return Rational(3L);
    Rational a(1L), b(3L);
    for (unsigned i = 3; i <= n; ++i) {
        Rational c = a + b;
        a = b;
        b = c;
    }
    return b;
}

Rational stirling_first(unsigned n, unsigned k) {
    if (k > n) return Rational(0L);
    // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k), s(0,0) = 1.
    std::vector<Rational> row(n + 1, Rational(0L));
    row[0] = Rational(1L);
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Rational> next(n + 1, Rational(0L));
        for (unsigned j = 1; j <= m; ++j)
            next[j] = row[j - 1] - Rational(static_cast<long>(m - 1)) * row[j];
        row = std::move(next);
    }
    return row[k];
}

Rational stirling_second(unsigned n, unsigned k) {
    if (k > n) return Rational(0L);
    if (n == 0) return Rational(1L);
    if (k == 0) return Rational(0L);
    Rational sum(0L);
    for (unsigned l = 0; l <= k; ++l) {
        Rational term = binomial(k, l) * Rational(static_cast<long>(l)).pow(static_cast<long>(n));
        sum += ((k - l) % 2 == 0) ? term : -term;
    }
    return sum / factorial(k);
}

Rational alternating_count(unsigned n) {
    if (n > 10) throw std::domain_error("alternating_count: n > 10 exceeds enumeration budget");
    if (n <= 1) return Rational(1L);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    long count = 0;
    do {
        // down-up class: sigma(1) > sigma(2) < sigma(3) > ...
        bool ok = true;
        for (unsigned i = 0; i + 1 < n; ++i) {
            bool want_down = (i % 2 == 0);
            if (want_down ? perm[i] < perm[i + 1] : perm[i] > perm[i + 1]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(count);
}

BiPoly helper_m(long i, long j) {
    BiPoly r;
    if (i < j) return r;
    for (long k = std::max(j, 0L); k <= i; ++k) {
        Rational c = binomial(k, j);
        if (k % 2 != 0) c = -c;
        r += BiPoly::monomial(static_cast<int>(k), 0, c);
    }
    return r;
}

BiPoly helper_n(long i, long j) {
    BiPoly r;
    if (i < j) return r;
    for (long k = std::max(j, 0L); k <= i; ++k) {
        Rational c = binomial(i, k);
        if (k % 2 != 0) c = -c;
        r += BiPoly::monomial(static_cast<int>(k), 0, c);
    }
    return r;
}

}  // namespace eulermat::seq
