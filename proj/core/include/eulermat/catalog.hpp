#pragma once

#include <optional>
#include <string>

#include "eulermat/matrix.hpp"

namespace eulermat::catalog {

enum class MatrixKind {
    Identity,
    Pascal,
    SummationS,
    SummationG,
    PascalDerivation,
    GenEuler,
    EulerPoly,
    Euler,
    SpecializedEuler,
    DMatrix,
    Fibonacci,
    FibonacciInverseClosed,
    Lucas,
    LucasInverseClosed,
    GMat,
    HMat,
    MMat,
    NMat,
    L1Mat,
    L2Mat,
    StirlingFirst,
    StirlingSecond,
    FactorialStirling,
    StM,
    CTilde,
    DTilde,
    ShiftedEuler,
    Vandermonde,
    DeltaBinom,
};

// A scalar parameter that is either the formal variable or a rational value.
struct Param {
    bool formal = false;
    Rational value;

    static Param sym() { return {true, Rational(0L)}; }
    static Param val(Rational r) { return {false, std::move(r)}; }

    std::optional<Rational> as_optional() const {
        if (formal) return std::nullopt;
        return value;
    }
};

// Descriptor for one member of a matrix family; the matrix is
// (n+1)x(n+1) except SummationS (k+1) and FactorialStirling (n x n).
struct MatrixSpec {
    MatrixKind kind;
    unsigned n = 0;
    std::optional<Param> x;
    std::optional<Param> y;  // accepted by the descriptor, used by no kind
    std::optional<Param> alpha;
    std::optional<unsigned> m;
    std::optional<unsigned> k;
};

Mat build(const MatrixSpec& spec);

// D * P[1/2]; equals the forward-substitution inverse of the Euler matrix.
Mat euler_inverse(unsigned n);

// Literal-display variants kept for the identity suite's informational
// sub-results; the default builds use the readings that make the
// factorization theorems hold.
Mat build_l1_literal(unsigned n, const std::optional<Param>& alpha, const std::optional<Param>& x);
Mat build_stm_literal(unsigned n, unsigned m);
Mat build_ctilde_literal(unsigned n);
Mat build_dtilde_literal(unsigned n);

std::string kind_name(MatrixKind kind);
std::optional<MatrixKind> kind_from_name(const std::string& name);

}  // namespace eulermat::catalog
