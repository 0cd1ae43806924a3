#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulermat/matrix.hpp"

namespace eulermat::suite {

// One registered check per theorem, corollary, or displayed identity.
enum class CheckId {
    ScalarAddition,
    ScalarTranslation,
    ScalarThreeTerm,
    EpsilonConnection,
    EulerNumberParity,
    PascalInverse,
    PascalAddition,
    PascalDifferential,
    PascalSummationFactorization,
    LucasPascalBridge,
    MatrixProductFormula,
    MultiProduct,
    MatrixPower,
    MatrixThreeTerm,
    SpecializedInverse,
    PascalTranslationFamily,
    ShiftedInverse,
    SummationFactorizationEuler,
    LucasFactorizationEuler,
    DerivativeIdentities,
    FibonacciFactorization,
    MnInverses,
    LucasFactorizationGeneral,
    L1L2Inverses,
    FibonacciScalar,
    FibonacciScalarReflected,
    LucasScalar,
    LucasScalarReflected,
    EulerLucasNumeric,
    StirlingSecondConnection,
    StirlingFirstConnection,
    StirlingMatrixFactorization,
    ClosedFormInverses,
    VandermondeFactorization,
    EpsilonCombinatorial,
};

struct CheckInfo {
    CheckId id;
    std::string name;    // kebab-case, the CLI spelling
    std::string anchor;  // source equation / theorem label
};

struct CheckParams {
    unsigned n = 8;
    unsigned trials = 3;
    std::uint64_t seed = 42;
    bool symbolic_alpha = false;
    bool symbolic_x = false;
};

struct Counterexample {
    std::string params;  // human-readable draw description
    int i = 0;
    int j = 0;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    CheckId id;
    bool passed = true;
    std::string sub_identity;  // label of the first failing sub-identity, if any
    unsigned sub_count = 0;    // sub-identities evaluated
    std::optional<Counterexample> counterexample;
    // Informational outcomes: literal readings of displays with known
    // defects, reported alongside the primary (corrected) check.
    std::vector<std::string> notes;
};

// All registered checks with anchors, in stable registry order.
const std::vector<CheckInfo>& list_checks();

std::optional<CheckId> check_from_name(const std::string& name);
std::string check_name(CheckId id);

CheckResult run_check(CheckId id, const CheckParams& params);

// Runs all (or the selected) checks; result order matches list_checks().
std::vector<CheckResult> run_suite(const CheckParams& params,
                                   const std::vector<CheckId>* selection = nullptr);

// Test hook: overrides stirling_first values inside the
// stirling-first-connection check. Not synchronized; test use only.
void set_stirling_first_override(
    std::function<std::optional<Rational>(unsigned, unsigned)> hook);

}  // namespace eulermat::suite
