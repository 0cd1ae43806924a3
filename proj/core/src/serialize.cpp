#include "eulermat/serialize.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace eulermat::serialize {

namespace {
using nlohmann::json;

bool is_rational_matrix(const Mat& m) {
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            if (!m.at(i, j).is_constant()) return false;
    return true;
}

json param_json(const std::optional<catalog::Param>& p) {
    if (!p) return nullptr;
    if (p->formal) return "sym";
    return p->value.str();
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.numerator().get_str();
    std::string num = r.numerator().get_str();
    std::string sign;
    if (!num.empty() && num[0] == '-') {
        sign = "-";
        num = num.substr(1);
    }
    return sign + "\\frac{" + num + "}{" + r.denominator().get_str() + "}";
}

}  // namespace

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Pretty: return "pretty";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Latex: return "latex";
    }
    return "?";
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "pretty") return OutputFormat::Pretty;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string entry_text(const BiPoly& p) {
    if (p.is_constant()) return p.constant_value().str();
    return p.str();
}

std::string entry_latex(const BiPoly& p) {
    if (p.is_constant()) return latex_rational(p.constant_value());
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string vars;
        if (m.dx > 0) vars += m.dx == 1 ? "x" : "x^{" + std::to_string(m.dx) + "}";
        if (m.da > 0) vars += m.da == 1 ? "\\alpha" : "\\alpha^{" + std::to_string(m.da) + "}";
        if (vars.empty())
            out << latex_rational(a);
        else if (a.is_one())
            out << vars;
        else
            out << latex_rational(a) << " " << vars;
    }
    return out.str();
}

std::string to_pretty(const Mat& m) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.order()));
    std::vector<std::size_t> widths(static_cast<std::size_t>(m.order()), 1);
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) {
            std::string s = entry_text(m.at(i, j));
            widths[static_cast<std::size_t>(j)] =
                std::max(widths[static_cast<std::size_t>(j)], s.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(s));
        }
    std::ostringstream out;
    for (int i = 0; i < m.order(); ++i) {
        out << "[ ";
        for (int j = 0; j < m.order(); ++j) {
            const std::string& s = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            out << s << std::string(widths[static_cast<std::size_t>(j)] - s.size() + 1, ' ');
        }
        out << "]\n";
    }
    return out.str();
}

std::string to_csv(const Mat& m) {
    std::ostringstream out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out << ",";
            out << entry_text(m.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

std::string to_latex(const Mat& m) {
    std::ostringstream out;
    out << "\\begin{bmatrix}\n";
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out << " & ";
            out << entry_latex(m.at(i, j));
        }
        out << (i + 1 < m.order() ? " \\\\" : "") << "\n";
    }
    out << "\\end{bmatrix}\n";
    return out.str();
}

std::string to_json(const Mat& m, const catalog::MatrixSpec& spec) {
    json doc;
    doc["kind"] = catalog::kind_name(spec.kind);
    doc["n"] = spec.n;
    json params = json::object();
    if (spec.x) params["x"] = param_json(spec.x);
    if (spec.y) params["y"] = param_json(spec.y);
    if (spec.alpha) params["alpha"] = param_json(spec.alpha);
    if (spec.m) params["m"] = *spec.m;
    if (spec.k) params["k"] = *spec.k;
    doc["params"] = params;
    bool rational = is_rational_matrix(m);
    doc["ring"] = rational ? "rational" : "poly";
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) {
            const BiPoly& p = m.at(i, j);
            if (rational) {
                row.push_back(p.constant_value().str());
            } else {
                json terms = json::array();
                for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                    terms.push_back(
                        {{"coeff", it->second.str()}, {"x", it->first.dx}, {"alpha", it->first.da}});
                row.push_back(terms);
            }
        }
        rows.push_back(row);
    }
    doc["entries"] = rows;
    return doc.dump(2) + "\n";
}

Mat mat_from_json(const std::string& text) {
    json doc = json::parse(text);
    const json& rows = doc.at("entries");
    int order = static_cast<int>(rows.size());
    bool rational = doc.at("ring") == "rational";
    Mat m(order);
    for (int i = 0; i < order; ++i) {
        const json& row = rows.at(static_cast<std::size_t>(i));
        if (static_cast<int>(row.size()) != order)
            throw std::invalid_argument("mat_from_json: ragged entries");
        for (int j = 0; j < order; ++j) {
            const json& cell = row.at(static_cast<std::size_t>(j));
            if (rational) {
                m.at(i, j) = BiPoly(Rational::parse(cell.get<std::string>()));
            } else {
                BiPoly p;
                for (const json& t : cell)
                    p += BiPoly::monomial(t.at("x").get<int>(), t.at("alpha").get<int>(),
                                          Rational::parse(t.at("coeff").get<std::string>()));
                m.at(i, j) = p;
            }
        }
    }
    return m;
}

}  // namespace eulermat::serialize
