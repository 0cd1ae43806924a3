#pragma once

#include <optional>
#include <vector>

#include "eulermat/bipoly.hpp"

namespace eulermat::seq {

// Binomial coefficient C(i, j); zero whenever j > i.
Rational binomial(long i, long j);

// base*(base-1)*...*(base-k+1); 1 when k = 0.
BiPoly falling_factorial(const BiPoly& base, unsigned k);

// falling_factorial(base, k) / k!
BiPoly binomial_poly(const BiPoly& base, unsigned k);

// Coefficients c_0..c_n with c_k(alpha) = k! * [z^k] ((e^z+1)/2)^alpha,
// computed by formal log-then-exp series composition over Q[alpha].
std::vector<BiPoly> series_coeffs(unsigned n);

// Rows 0..n of generalized Euler polynomials E_k^(alpha)(x); alpha stays
// formal when unset. Row k: deg_x = k, deg_alpha <= k.
std::vector<BiPoly> euler_poly_table(unsigned n, const std::optional<Rational>& alpha = {});

BiPoly gen_euler_poly(unsigned n, const std::optional<Rational>& alpha = {});

// E_n^(alpha) = E_n^(alpha)(0).
BiPoly gen_euler_number(unsigned n, const std::optional<Rational>& alpha = {});

// Classical Euler numbers: coefficients of 2/(e^z+e^{-z}).
Rational classical_euler_number(unsigned n);

// E_n := E_n(0).
Rational euler_number(unsigned n);

Rational fibonacci(unsigned n);

// Lucas sequence starting L_1 = 1, L_2 = 3; rejects n = 0.
Rational lucas(unsigned n);

// Signed Stirling numbers of the first kind, sum_k s(n,k) z^k = z(z-1)...(z-n+1).
Rational stirling_first(unsigned n, unsigned k);

// Stirling numbers of the second kind via the alternating-sum formula.
Rational stirling_second(unsigned n, unsigned k);

// Brute-force count of the down-up alternating permutation class of {1..n};
// n <= 10 (factorial enumeration budget).
Rational alternating_count(unsigned n);

// m_{i,j}(x) = sum_{k=j..i} (-1)^k C(k,j) x^k for i >= j, else 0.
BiPoly helper_m(long i, long j);

// n_{i,j}(x) = sum_{k=j..i} (-1)^k C(i,k) x^k for i >= j, else 0.
BiPoly helper_n(long i, long j);

}  // namespace eulermat::seq
