#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>

#include "eulermat/catalog.hpp"
#include "eulermat/serialize.hpp"

using namespace eulermat;
using namespace eulermat::catalog;
using namespace eulermat::serialize;

TEST_CASE("format names") {
    CHECK(format_from_name("json") == OutputFormat::Json);
    CHECK(format_name(OutputFormat::Latex) == "latex");
    for (auto f : {OutputFormat::Pretty, OutputFormat::Json, OutputFormat::Csv,
                   OutputFormat::Latex})
        CHECK(format_from_name(format_name(f)) == f);
    CHECK_THROWS_AS(format_from_name("xml"), std::invalid_argument);
}

TEST_CASE("entry rendering") {
    BiPoly x = BiPoly::var_x(), a = BiPoly::var_alpha();
    CHECK(entry_text(BiPoly(Rational(-3, 4))) == "-3/4");
    CHECK(entry_text(x * x - a.scaled(Rational(1, 2))) == "x^2 - 1/2*alpha");
    CHECK(entry_latex(BiPoly(Rational(-3, 4))) == "-\\frac{3}{4}");
    CHECK(entry_latex(x * x - a.scaled(Rational(1, 2))) ==
          "x^{2} - \\frac{1}{2} \\alpha");
    CHECK(entry_latex(BiPoly(5L)) == "5");
}

TEST_CASE("json schema and round-trip, rational ring") {
    MatrixSpec spec{MatrixKind::SpecializedEuler, 3};
    Mat m = build(spec);
    std::string text = to_json(m, spec);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("kind") == "specialized-euler");
    CHECK(doc.at("n") == 3);
    CHECK(doc.at("ring") == "rational");
    CHECK(doc.at("params").empty());
    CHECK(doc.at("entries").size() == 4);
    CHECK(doc.at("entries").at(2).at(0) == "-1/4");
    CHECK(mat_from_json(text) == m);
}

TEST_CASE("json schema and round-trip, poly ring") {
    MatrixSpec spec{MatrixKind::GenEuler, 3, Param::sym(), {}, Param::sym()};
    Mat m = build(spec);
    std::string text = to_json(m, spec);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("ring") == "poly");
    CHECK(doc.at("params").at("x") == "sym");
    CHECK(doc.at("params").at("alpha") == "sym");
    // term lists carry coeff and both exponents
    const auto& cell = doc.at("entries").at(1).at(0);
    REQUIRE(cell.is_array());
    CHECK(cell.at(0).contains("coeff"));
    CHECK(cell.at(0).contains("x"));
    CHECK(cell.at(0).contains("alpha"));
    CHECK(mat_from_json(text) == m);
}

TEST_CASE("json records numeric params") {
    MatrixSpec spec{MatrixKind::Pascal, 2, Param::val(Rational(-5, 3))};
    std::string text = to_json(build(spec), spec);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("params").at("x") == "-5/3");
    MatrixSpec stm{MatrixKind::StM, 2};
    stm.m = 3;
    auto doc2 = nlohmann::json::parse(to_json(build(stm), stm));
    CHECK(doc2.at("params").at("m") == 3);
}

TEST_CASE("csv and pretty agree with entry_text") {
    MatrixSpec spec{MatrixKind::Pascal, 2, Param::val(Rational(1, 2))};
    Mat m = build(spec);
    CHECK(to_csv(m) == "1,0,0\n1/2,1,0\n1/4,1,1\n");
    std::string pretty = to_pretty(m);
    CHECK(pretty.find("1/4") != std::string::npos);
    CHECK(pretty.find("[ ") == 0);
    // one bracketed line per row
    CHECK(std::count(pretty.begin(), pretty.end(), '\n') == 3);
}

TEST_CASE("latex body") {
    MatrixSpec spec{MatrixKind::SpecializedEuler, 2};
    std::string tex = to_latex(build(spec));
    CHECK(tex.find("\\begin{bmatrix}") == 0);
    CHECK(tex.find("\\end{bmatrix}") != std::string::npos);
    CHECK(tex.find("-\\frac{1}{4} & 0 & 1") != std::string::npos);
}

TEST_CASE("mat_from_json rejects ragged input") {
    CHECK_THROWS(mat_from_json(
        R"({"ring":"rational","entries":[["1","0"],["1"]]})"));
}
