#pragma once

#include <string>

#include "eulermat/catalog.hpp"
#include "eulermat/matrix.hpp"

namespace eulermat::serialize {

enum class OutputFormat { Pretty, Json, Csv, Latex };

std::string format_name(OutputFormat f);
// Recognizes "pretty", "json", "csv", "latex".
OutputFormat format_from_name(const std::string& name);

// Entry rendering: rationals in the plain text format ("-3/4", "7"),
// polynomials in graded-lex order, x before alpha.
std::string entry_text(const BiPoly& p);
std::string entry_latex(const BiPoly& p);

std::string to_pretty(const Mat& m);
std::string to_csv(const Mat& m);
std::string to_latex(const Mat& m);

// Schema: {"kind","n","params","ring","entries"} with "ring" "rational"
// when every entry is constant, else "poly"; rational entries are strings,
// poly entries are term lists [{"coeff","x","alpha"}] in graded-lex order.
std::string to_json(const Mat& m, const catalog::MatrixSpec& spec);

// Re-parses the entries of a to_json document.
Mat mat_from_json(const std::string& text);

}  // namespace eulermat::serialize
