/*
   Copyright 2026 the rwps authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "rwps/characterize.hpp"
#include "rwps/expansion.hpp"
#include "rwps/family.hpp"
#include "rwps/operators.hpp"

namespace rwps {

using Json = nlohmann::ordered_json;

/// Schema violation in an input document; the message carries the path of
/// the offending node ("family.c[2]", "k", ...).
class ConfigError : public std::invalid_argument {
   public:
    ConfigError(std::string path, const std::string& what)
        : std::invalid_argument(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

   private:
    std::string path_;
};

// ---------------------------------------------------------------- family

/// Family schema:
///   {"kind":"chebyshev_t"}
///   {"kind":"ultraspherical","alpha":"1/2"}
///   {"kind":"table","c":["1/2","1/4",...]}
///   {"kind":"sieved","k":2,"inner":{...}}
/// Rationals are "p/q" strings with q > 0.
inline Family parse_family(const Json& j, const std::string& path = "family") {
    if (!j.is_object()) throw ConfigError(path, "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ConfigError(path + ".kind", "missing or not a string");
    const std::string kind = j["kind"].get<std::string>();
    auto rational_at = [&](const Json& node, const std::string& node_path) {
        if (!node.is_string()) throw ConfigError(node_path, "expected a \"p/q\" string");
        try {
            return parse_rational(node.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(node_path, e.what());
        }
    };
    if (kind == "chebyshev_t") return Family::chebyshev_t();
    if (kind == "ultraspherical") {
        if (!j.contains("alpha")) throw ConfigError(path + ".alpha", "missing");
        const Rational alpha = rational_at(j["alpha"], path + ".alpha");
        if (alpha <= -1) throw ConfigError(path + ".alpha", "must be > -1");
        return Family::ultraspherical(alpha);
    }
    if (kind == "table") {
        if (!j.contains("c") || !j["c"].is_array()) throw ConfigError(path + ".c", "missing or not an array");
        std::vector<Rational> c;
        for (size_t i = 0; i < j["c"].size(); ++i) {
            const std::string node_path = path + ".c[" + std::to_string(i) + "]";
            Rational v = rational_at(j["c"][i], node_path);
            if (v <= 0 || v >= 1)
                throw ConfigError(node_path, "c_" + std::to_string(i + 1) + " = " + to_string(v) + " is outside (0,1)");
            c.push_back(std::move(v));
        }
        return Family::table(std::move(c));
    }
    if (kind == "sieved") {
        if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<long>() < 1)
            throw ConfigError(path + ".k", "expected a positive integer");
        if (!j.contains("inner")) throw ConfigError(path + ".inner", "missing");
        return Family::sieved(parse_family(j["inner"], path + ".inner"), j["k"].get<int>());
    }
    throw ConfigError(path + ".kind", "unknown kind \"" + kind + "\"");
}

inline Json family_to_json(const Family& family) {
    switch (family.kind()) {
        case Family::Kind::ChebyshevT:
            return Json{{"kind", "chebyshev_t"}};
        case Family::Kind::Ultraspherical:
            return Json{{"kind", "ultraspherical"}, {"alpha", to_string(family.alpha())}};
        case Family::Kind::Table: {
            Json c = Json::array();
            for (const auto& v : family.table_values()) c.push_back(to_string(v));
            return Json{{"kind", "table"}, {"c", std::move(c)}};
        }
        case Family::Kind::Sieved:
            return Json{{"kind", "sieved"}, {"k", family.sieve_k()}, {"inner", family_to_json(family.inner())}};
        case Family::Kind::Custom:
            return Json{{"kind", "custom"}, {"name", family.fingerprint()}};
    }
    throw std::logic_error("family_to_json: unknown kind");
}

// ---------------------------------------------------------- field elements

inline std::string theta_label(int k) { return "2cos(pi/" + std::to_string(k) + ")"; }

inline Json field_element_to_json(const FieldElement& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(to_string(c));
    return Json{{"coords", std::move(coords)}, {"theta", theta_label(x.k())}};
}

inline FieldElement field_element_from_json(const Json& j, int k, const std::string& path) {
    if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array())
        throw ConfigError(path + ".coords", "missing or not an array");
    auto field = NumberField::get(k);
    if (static_cast<int>(j["coords"].size()) != field->degree())
        throw ConfigError(path + ".coords", "expected " + std::to_string(field->degree()) + " coordinates");
    std::vector<Rational> coords;
    for (size_t i = 0; i < j["coords"].size(); ++i) {
        if (!j["coords"][i].is_string()) throw ConfigError(path + ".coords[" + std::to_string(i) + "]", "expected a string");
        coords.push_back(parse_rational(j["coords"][i].get<std::string>()));
    }
    return FieldElement(field, std::move(coords));
}

inline std::string approx_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// CSV cell form of a field element: coordinates joined by ';'.
inline std::string coords_csv(const FieldElement& x) {
    std::string out;
    for (size_t i = 0; i < x.coords().size(); ++i) {
        if (i) out += ";";
        out += to_string(x.coords()[i]);
    }
    return out;
}

// ------------------------------------------------------------ polynomials

template <class S>
inline Json cheb_poly_to_json(const ChebPoly<S>& p) {
    Json terms = Json::array();
    for (const auto& [n, c] : p.terms()) {
        if constexpr (std::is_same_v<S, Rational>)
            terms.push_back(Json::array({n, to_string(c)}));
        else
            terms.push_back(Json::array({n, field_element_to_json(c)}));
    }
    Json out{{"basis", "T"}, {"terms", std::move(terms)}};
    if constexpr (!std::is_same_v<S, Rational>) out["k"] = p.is_zero() ? 0 : p.terms().begin()->second.k();
    return out;
}

inline std::string latex_rational(const Rational& x) {
    if (den(x) == 1) return num(x).str();
    const Integer n = num(x);
    return (n < 0 ? std::string("-") : std::string()) + "\\frac{" + Integer(n < 0 ? -n : n).str() + "}{" + den(x).str() + "}";
}

inline std::string latex_of(const ChebPoly<Rational>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string coeff = latex_rational(it->second);
        if (!out.empty()) {
            if (coeff.size() && coeff[0] == '-')
                out += " - ", coeff = coeff.substr(1);
            else
                out += " + ";
        }
        out += coeff + " T_{" + std::to_string(it->first) + "}";
    }
    return out;
}

// --------------------------------------------------------- r/p/q triangles

inline Json expansion_tables_to_json(const ExpansionTables& t) {
    auto triangle = [](const std::vector<std::vector<Rational>>& rows) {
        Json out = Json::array();
        for (const auto& row : rows) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(to_string(v));
            out.push_back(std::move(r));
        }
        return out;
    };
    return Json{{"N", t.N}, {"r", triangle(t.r)}, {"p", triangle(t.p)}, {"q", triangle(t.q)}};
}

inline ExpansionTables expansion_tables_from_json(const Json& j, const std::string& path = "tables") {
    if (!j.is_object() || !j.contains("N")) throw ConfigError(path, "expected an object with N, r, p, q");
    ExpansionTables t;
    t.N = j["N"].get<int>();
    auto triangle = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_array()) throw ConfigError(path + "." + key, "missing triangle");
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : j[key]) {
            std::vector<Rational> out;
            for (const auto& v : row) out.push_back(parse_rational(v.get<std::string>()));
            rows.push_back(std::move(out));
        }
        return rows;
    };
    t.r = triangle("r");
    t.p = triangle("p");
    t.q = triangle("q");
    return t;
}

inline std::string expansion_tables_to_csv(const ExpansionTables& t) {
    std::string out = "table,n,j,value\n";
    auto emit = [&](const char* name, const std::vector<std::vector<Rational>>& rows) {
        for (size_t n = 0; n < rows.size(); ++n)
            for (size_t j = 0; j < rows[n].size(); ++j)
                out += std::string(name) + "," + std::to_string(n) + "," + std::to_string(j) + "," + to_string(rows[n][j]) + "\n";
    };
    emit("r", t.r);
    emit("p", t.p);
    emit("q", t.q);
    return out;
}

inline std::string expansion_tables_to_latex(const ExpansionTables& t) {
    std::string out;
    auto emit = [&](const char* name, const std::vector<std::vector<Rational>>& rows) {
        const size_t width = rows.empty() ? 1 : rows.back().size();
        out += "% triangle ";
        out += name;
        out += "\n\\begin{tabular}{c|";
        for (size_t i = 0; i < width; ++i) out += "c";
        out += "}\n$n \\backslash j$";
        for (size_t i = 0; i < width; ++i) out += " & " + std::to_string(i);
        out += " \\\\\n\\hline\n";
        for (size_t n = 0; n < rows.size(); ++n) {
            out += std::to_string(n);
            for (size_t j = 0; j < width; ++j) out += " & " + (j < rows[n].size() ? "$" + latex_rational(rows[n][j]) + "$" : std::string());
            out += " \\\\\n";
        }
        out += "\\end{tabular}\n";
    };
    emit("r", t.r);
    emit("p", t.p);
    emit("q", t.q);
    return out;
}

// ---------------------------------------------------------- Fourier tables

inline Json fourier_table_to_json(const FourierTable& t) {
    auto rows_json = [](const std::vector<std::vector<FieldElement>>& rows) {
        Json out = Json::array();
        for (const auto& row : rows) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(field_element_to_json(e));
            out.push_back(std::move(r));
        }
        return out;
    };
    Json out{{"k", t.k}, {"N", t.N}, {"theta", theta_label(t.k)}};
    if (t.has_kappa()) {
        out["kappa"] = rows_json(t.kappa);
        Json sigma = Json::array();
        for (int n = 1; n <= t.N; ++n) sigma.push_back(field_element_to_json(t.sigma(n)));
        out["sigma"] = std::move(sigma);
    }
    if (t.has_alpha()) out["alpha"] = rows_json(t.alpha);
    return out;
}

inline FourierTable fourier_table_from_json(const Json& j, const std::string& path = "fourier") {
    if (!j.is_object() || !j.contains("k") || !j.contains("N")) throw ConfigError(path, "expected an object with k and N");
    FourierTable t;
    t.k = j["k"].get<int>();
    t.N = j["N"].get<int>();
    t.field = NumberField::get(t.k);
    auto rows_from = [&](const char* key) {
        std::vector<std::vector<FieldElement>> rows;
        size_t n = 0;
        for (const auto& row : j[key]) {
            std::vector<FieldElement> out;
            size_t i = 0;
            for (const auto& v : row)
                out.push_back(field_element_from_json(v, t.k, path + "." + key + "[" + std::to_string(n) + "][" + std::to_string(i++) + "]"));
            rows.push_back(std::move(out));
            ++n;
        }
        return rows;
    };
    if (j.contains("kappa")) t.kappa = rows_from("kappa");
    if (j.contains("alpha")) t.alpha = rows_from("alpha");
    return t;
}

inline std::string fourier_table_to_csv(const FourierTable& t) {
    std::string out = "table,n,j,coords,approx\n";
    auto emit = [&](const char* name, const std::vector<std::vector<FieldElement>>& rows) {
        for (size_t n = 0; n < rows.size(); ++n)
            for (size_t j = 0; j < rows[n].size(); ++j)
                out += std::string(name) + "," + std::to_string(n) + "," + std::to_string(j) + "," + coords_csv(rows[n][j]) + "," +
                       approx_str(rows[n][j].approx()) + "\n";
    };
    if (t.has_kappa()) emit("kappa", t.kappa);
    if (t.has_alpha()) emit("alpha", t.alpha);
    if (t.has_kappa())
        for (int n = 1; n <= t.N; ++n)
            out += "sigma," + std::to_string(n) + ",," + coords_csv(t.sigma(n)) + "," + approx_str(t.sigma(n).approx()) + "\n";
    return out;
}

inline std::string fourier_table_to_latex(const FourierTable& t) {
    std::string out;
    auto emit = [&](const char* name, const std::vector<std::vector<FieldElement>>& rows, size_t width) {
        out += "% table ";
        out += name;
        out += "\n\\begin{tabular}{c|";
        for (size_t i = 0; i < width; ++i) out += "c";
        out += "}\n$n \\backslash j$";
        for (size_t i = 0; i < width; ++i) out += " & " + std::to_string(i);
        out += " \\\\\n\\hline\n";
        for (size_t n = 0; n < rows.size(); ++n) {
            out += std::to_string(n);
            for (size_t j = 0; j < width; ++j) out += " & " + (j < rows[n].size() ? rows[n][j].str() : std::string());
            out += " \\\\\n";
        }
        out += "\\end{tabular}\n";
    };
    if (t.has_kappa()) emit("kappa", t.kappa, t.kappa.empty() ? 0 : t.kappa.back().size());
    if (t.has_alpha()) emit("alpha", t.alpha, t.alpha.empty() ? 0 : t.alpha.back().size());
    return out;
}

// ----------------------------------------------------------------- report

inline Json verdict_to_json(const std::string& condition, const Verdict& v) {
    Json out{{"condition", condition}, {"verdict", v.holds ? "holds" : "fails"}};
    if (!v.holds) {
        out["n"] = v.n;
        out["witness"] = Json{{"value", v.witness}, {"field", v.field_label}};
    }
    return out;
}

inline Json report_to_json(const CharacterizationReport& r) {
    Json conditions = Json::array();
    for (const auto& c : r.conditions) conditions.push_back(verdict_to_json(c.condition, c.verdict));
    Json out{{"family", r.family}, {"k", r.k}, {"N", r.N}, {"mode", r.mode}, {"all_hold", r.all_hold}};
    if (r.fitted_alpha) out["fitted_alpha"] = to_string(*r.fitted_alpha);
    out["conditions"] = std::move(conditions);
    return out;
}

inline std::string report_to_csv(const CharacterizationReport& r) {
    std::string out = "condition,verdict,n,witness,field\n";
    for (const auto& c : r.conditions) {
        out += c.condition + "," + (c.verdict.holds ? "holds" : "fails");
        if (c.verdict.holds)
            out += ",,,";
        else
            out += "," + std::to_string(c.verdict.n) + ",\"" + c.verdict.witness + "\"," + c.verdict.field_label;
        out += "\n";
    }
    return out;
}

}  // namespace rwps
