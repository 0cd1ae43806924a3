#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulermat/catalog.hpp"
#include "eulermat/sequences.hpp"

using namespace eulermat;
using namespace eulermat::catalog;

namespace {

BiPoly X() { return BiPoly::var_x(); }
BiPoly c(long n, long d = 1) { return BiPoly(Rational(n, d)); }

// The six 4x4 matrices displayed in the source's worked examples, frozen.
Mat golden_specialized() {
    Mat m = Mat::identity(4);
    m.at(2, 0) = c(-1, 4);
    m.at(3, 1) = c(-3, 4);
    return m;
}

Mat golden_d() {
    Mat m = Mat::identity(4);
    m.at(2, 0) = c(1, 4);
    m.at(3, 1) = c(3, 4);
    return m;
}

Mat golden_pascal_formal() {
    Mat m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j)
            m.at(i, j) = X().pow(static_cast<unsigned>(i - j)).scaled(seq::binomial(i, j));
    return m;
}

Mat golden_shifted_euler_poly() {
    Mat m = Mat::identity(4);
    m.at(1, 0) = X();
    m.at(2, 0) = X().pow(2) - c(1, 4);
    m.at(2, 1) = X().scaled(Rational(2L));
    m.at(3, 0) = X().pow(3) - X().scaled(Rational(3, 4));
    m.at(3, 1) = X().pow(2).scaled(Rational(3L)) - c(3, 4);
    m.at(3, 2) = X().scaled(Rational(3L));
    return m;
}

Mat golden_shifted_inverse() {
    Mat m = Mat::identity(4);
    m.at(1, 0) = -X();
    m.at(2, 0) = X().pow(2) + c(1, 4);
    m.at(2, 1) = X().scaled(Rational(-2L));
    m.at(3, 0) = -X().pow(3) - X().scaled(Rational(3, 4));
    m.at(3, 1) = X().pow(2).scaled(Rational(3L)) + c(3, 4);
    m.at(3, 2) = X().scaled(Rational(-3L));
    return m;
}

Mat golden_euler_inverse() {
    Mat m = Mat::identity(4);
    m.at(1, 0) = c(1, 2);
    m.at(2, 0) = c(1, 2);
    m.at(2, 1) = c(1);
    m.at(3, 0) = c(1, 2);
    m.at(3, 1) = c(3, 2);
    m.at(3, 2) = c(3, 2);
    return m;
}

}  // namespace

TEST_CASE("worked examples, n = 3") {
    CHECK(build({MatrixKind::SpecializedEuler, 3}) == golden_specialized());
    CHECK(build({MatrixKind::DMatrix, 3}) == golden_d());
    Mat p = build({MatrixKind::Pascal, 3, Param::sym()});
    CHECK(p == golden_pascal_formal());

    Mat shifted = build({MatrixKind::EulerPoly, 3, Param::sym()})
                      .substitute_x_poly(X() + c(1, 2));
    CHECK(shifted == golden_shifted_euler_poly());
    CHECK(shifted == p * build({MatrixKind::SpecializedEuler, 3}));

    Mat pneg = p.substitute_x_poly(-X());
    CHECK(shifted.inverse_unit_lower() == golden_shifted_inverse());
    CHECK(golden_d() * pneg == golden_shifted_inverse());

    CHECK(euler_inverse(3) == golden_euler_inverse());
    CHECK(build({MatrixKind::Euler, 3}).inverse_unit_lower() == golden_euler_inverse());
}

TEST_CASE("band families") {
    Mat f = build({MatrixKind::Fibonacci, 5});
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= i; ++j)
            CHECK(f.at(i, j) == BiPoly(seq::fibonacci(static_cast<unsigned>(i - j) + 1)));
    CHECK(build({MatrixKind::FibonacciInverseClosed, 5}) == f.inverse_unit_lower());
    Mat l = build({MatrixKind::Lucas, 5});
    CHECK(l.at(5, 0) == BiPoly(Rational(18L)));
    CHECK(build({MatrixKind::LucasInverseClosed, 5}) == l.inverse_unit_lower());
}

TEST_CASE("bridge factors solve their defining equations") {
    Rational x(2, 3);
    for (unsigned n : {1u, 4u, 6u}) {
        Mat p = build({MatrixKind::Pascal, n, Param::val(x)});
        Mat l = build({MatrixKind::Lucas, n});
        CHECK(l * build({MatrixKind::GMat, n, Param::val(x)}) == p);
        CHECK(build({MatrixKind::HMat, n, Param::val(x)}) * l == p);
    }
}

TEST_CASE("summation factors telescope to Pascal") {
    unsigned n = 5;
    Rational x(3, 7);
    Mat prod = Mat::identity(static_cast<int>(n) + 1);
    for (unsigned k = n; k >= 1; --k) {
        MatrixSpec s{MatrixKind::SummationG, n, Param::val(x)};
        s.k = k;
        prod = prod * build(s);
    }
    CHECK(prod == build({MatrixKind::Pascal, n, Param::val(x)}));
}

TEST_CASE("pascal derivation differentiates the group") {
    unsigned n = 6;
    Mat p = build({MatrixKind::Pascal, n, Param::sym()});
    Mat lgen = build({MatrixKind::PascalDerivation, n});
    CHECK(p.d_dx() == lgen * p);
}

TEST_CASE("factorial stirling is n x n and scaled") {
    Mat s = build({MatrixKind::FactorialStirling, 4});
    CHECK(s.order() == 4);
    CHECK(s.at(2, 1) == BiPoly(Rational(2L) * seq::stirling_second(3, 2)));
    CHECK_THROWS(build({MatrixKind::FactorialStirling, 0}));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(build({MatrixKind::Pascal, 3}));  // x required
    CHECK_THROWS(build({MatrixKind::GMat, 3, Param::val(Rational(0L))}));
    CHECK_THROWS(build({MatrixKind::GMat, 3, Param::sym()}));
    CHECK_THROWS(build({MatrixKind::Euler, 3, Param::val(Rational(1L))}));  // no params
    MatrixSpec stm{MatrixKind::StM, 3};
    stm.m = 0;
    CHECK_THROWS(build(stm));
    MatrixSpec sg{MatrixKind::SummationG, 3, Param::val(Rational(1L))};
    sg.k = 4;
    CHECK_THROWS(build(sg));
    sg.k = 0;
    CHECK_THROWS(build(sg));
}

TEST_CASE("kind names round-trip") {
    const MatrixKind kinds[] = {
        MatrixKind::Identity,        MatrixKind::Pascal,
        MatrixKind::SummationS,      MatrixKind::SummationG,
        MatrixKind::PascalDerivation, MatrixKind::GenEuler,
        MatrixKind::EulerPoly,       MatrixKind::Euler,
        MatrixKind::SpecializedEuler, MatrixKind::DMatrix,
        MatrixKind::Fibonacci,       MatrixKind::FibonacciInverseClosed,
        MatrixKind::Lucas,           MatrixKind::LucasInverseClosed,
        MatrixKind::GMat,            MatrixKind::HMat,
        MatrixKind::MMat,            MatrixKind::NMat,
        MatrixKind::L1Mat,           MatrixKind::L2Mat,
        MatrixKind::StirlingFirst,   MatrixKind::StirlingSecond,
        MatrixKind::FactorialStirling, MatrixKind::StM,
        MatrixKind::CTilde,          MatrixKind::DTilde,
        MatrixKind::ShiftedEuler,    MatrixKind::Vandermonde,
        MatrixKind::DeltaBinom,
    };
    for (MatrixKind k : kinds) {
        std::string name = kind_name(k);
        CHECK(name != "?");
        auto back = kind_from_name(name);
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK(!kind_from_name("no-such-kind"));
    CHECK(kind_name(MatrixKind::SpecializedEuler) == "specialized-euler");
    CHECK(kind_name(MatrixKind::DeltaBinom) == "delta-binom");
    CHECK(kind_name(MatrixKind::StM) == "st-m");
}

TEST_CASE("formal generalized Euler matrix entries") {
    Mat e = build({MatrixKind::GenEuler, 2, Param::sym(), {}, Param::sym()});
    BiPoly a = BiPoly::var_alpha();
    CHECK(e.at(0, 0) == BiPoly(1L));
    CHECK(e.at(1, 0) == X() - a.scaled(Rational(1, 2)));
    CHECK(e.at(2, 0) ==
          X().pow(2) - X() * a + (a.pow(2) - a).scaled(Rational(1, 4)));
    CHECK(e.at(2, 1) == (X() - a.scaled(Rational(1, 2))).scaled(Rational(2L)));
}
