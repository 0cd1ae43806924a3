#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulermat/matrix.hpp"
#include "eulermat/sequences.hpp"

using namespace eulermat;

namespace {

Mat random_unit_lower(int order, std::mt19937_64& rng, bool poly_entries) {
    Mat m(order);
    for (int i = 0; i < order; ++i) {
        m.at(i, i) = BiPoly(1L);
        for (int j = 0; j < i; ++j) {
            Rational c(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
            m.at(i, j) = poly_entries && rng() % 2 ? BiPoly::var_x().scaled(c) : BiPoly(c);
        }
    }
    return m;
}

Mat pascal(int n, const BiPoly& x) {
    Mat m(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j)
            m.at(i, j) = x.pow(static_cast<unsigned>(i - j)).scaled(seq::binomial(i, j));
    return m;
}

}  // namespace

TEST_CASE("identity and shape") {
    Mat id = Mat::identity(4);
    CHECK(id.order() == 4);
    CHECK(id.at(2, 2) == BiPoly(1L));
    CHECK(id.at(2, 1).is_zero());
    CHECK_THROWS(Mat(0));
    CHECK(Mat(3).order() == 3);
    CHECK(id * id == id);
}

TEST_CASE("arithmetic against hand values") {
    Mat a(2), b(2);
    a.at(0, 0) = BiPoly(1L);
    a.at(1, 0) = BiPoly::var_x();
    a.at(1, 1) = BiPoly(2L);
    b.at(0, 0) = BiPoly(3L);
    b.at(0, 1) = BiPoly(1L);
    b.at(1, 1) = BiPoly::var_alpha();
    Mat p = a * b;
    CHECK(p.at(0, 0) == BiPoly(3L));
    CHECK(p.at(0, 1) == BiPoly(1L));
    CHECK(p.at(1, 0) == BiPoly::var_x().scaled(Rational(3L)));
    CHECK(p.at(1, 1) == BiPoly::var_x() + BiPoly::var_alpha().scaled(Rational(2L)));
    CHECK((a + b) - b == a);
    CHECK(a.scaled(Rational(-1L)) + a == Mat(2));
    CHECK_THROWS(a * Mat(3));
    CHECK_THROWS(a + Mat(3));
}

TEST_CASE("multiplication is associative, transpose reverses") {
    std::mt19937_64 rng(7);
    Mat a = random_unit_lower(5, rng, true);
    Mat b = random_unit_lower(5, rng, true);
    Mat c = random_unit_lower(5, rng, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a.transpose().transpose() == a);
}

TEST_CASE("pow") {
    std::mt19937_64 rng(11);
    Mat a = random_unit_lower(4, rng, true);
    CHECK(a.pow(0) == Mat::identity(4));
    CHECK(a.pow(1) == a);
    CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("forward-substitution inverse") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 5; ++round) {
        Mat a = random_unit_lower(6, rng, true);
        Mat inv = a.inverse_unit_lower();
        CHECK(a * inv == Mat::identity(6));
        CHECK(inv * a == Mat::identity(6));
        CHECK(inv.is_unit_lower_triangular());
    }
    // Pascal inversion is sign flipping: P[x]^{-1} = P[-x]
    Mat p = pascal(5, BiPoly::var_x());
    CHECK(p.inverse_unit_lower() == pascal(5, -BiPoly::var_x()));
}

TEST_CASE("inverse rejects anything not unit lower triangular") {
    Mat upper(3);
    upper.at(0, 0) = upper.at(1, 1) = upper.at(2, 2) = BiPoly(1L);
    upper.at(0, 2) = BiPoly(5L);
    CHECK_THROWS(upper.inverse_unit_lower());
    Mat scaled_diag(2);
    scaled_diag.at(0, 0) = BiPoly(2L);
    scaled_diag.at(1, 1) = BiPoly(1L);
    CHECK_THROWS(scaled_diag.inverse_unit_lower());
    CHECK(!upper.is_unit_lower_triangular());
    CHECK(Mat::identity(3).is_unit_lower_triangular());
}

TEST_CASE("entrywise calculus and substitution") {
    Mat p = pascal(4, BiPoly::var_x());
    Mat d = p.d_dx();
    CHECK(d.at(2, 0) == BiPoly::var_x().scaled(Rational(2L)));
    CHECK(d.at(2, 1) == BiPoly(2L));
    CHECK(d.at(2, 2).is_zero());
    Mat at_half = p.substitute(Rational(1, 2), {});
    CHECK(at_half.at(3, 0) == BiPoly(Rational(1, 8)));
    Mat shifted = p.substitute_x_poly(BiPoly::var_x() + BiPoly(1L));
    CHECK(shifted.at(2, 0) == (BiPoly::var_x() + BiPoly(1L)).pow(2));
}

TEST_CASE("direct sum") {
    Mat a = Mat::identity(2);
    Mat b(2);
    b.at(0, 0) = BiPoly(5L);
    b.at(1, 0) = BiPoly::var_x();
    b.at(1, 1) = BiPoly(1L);
    Mat s = a.direct_sum(b);
    CHECK(s.order() == 4);
    CHECK(s.at(1, 1) == BiPoly(1L));
    CHECK(s.at(2, 2) == BiPoly(5L));
    CHECK(s.at(3, 2) == BiPoly::var_x());
    CHECK(s.at(2, 1).is_zero());
    CHECK(s.at(1, 3).is_zero());
}
