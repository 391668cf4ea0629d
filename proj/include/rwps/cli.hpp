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

#include <optional>
#include <ostream>
#include <string>

#include "rwps/json_io.hpp"
#include "rwps/minpoly.hpp"

namespace rwps {

/// A fully validated run request. Exact rationals everywhere; emission is
/// deterministic byte-for-byte for a given config.
struct RunConfig {
    enum class Command { Expand, Operator, Fourier, Characterize, MinPoly, Tables };

    Command command = Command::MinPoly;
    std::optional<Family> family;
    int k = 1;
    int m = 0;        // degree of the sieved polynomial (expand)
    int n = 0;        // index of P_n (operator)
    int horizon = 24; // N (fourier, tables, characterize)
    std::string format;  // csv | json | latex | text
    KappaMode mode = KappaMode::Full;
    char op = 'B';  // operator command: 'D', 'A' or 'B' (both)
};

namespace detail {
inline int require_int(const Json& j, const std::string& key, long min_value) {
    if (!j.contains(key)) throw ConfigError(key, "missing");
    if (!j[key].is_number_integer()) throw ConfigError(key, "expected an integer");
    const long v = j[key].get<long>();
    if (v < min_value) throw ConfigError(key, "must be >= " + std::to_string(min_value));
    return static_cast<int>(v);
}

inline int optional_int(const Json& j, const std::string& key, long min_value, int fallback) {
    if (!j.contains(key)) return fallback;
    return require_int(j, key, min_value);
}
}  // namespace detail

/// Parses and validates a UTF-8 JSON run configuration. Command-specific
/// required fields are checked here, before any computation; errors name
/// the offending path.
inline RunConfig parse_config(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("(document)", std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("(document)", "expected a JSON object");
    if (!j.contains("command") || !j["command"].is_string()) throw ConfigError("command", "missing or not a string");

    RunConfig cfg;
    const std::string command = j["command"].get<std::string>();
    if (command == "expand")
        cfg.command = RunConfig::Command::Expand;
    else if (command == "operator")
        cfg.command = RunConfig::Command::Operator;
    else if (command == "fourier")
        cfg.command = RunConfig::Command::Fourier;
    else if (command == "characterize")
        cfg.command = RunConfig::Command::Characterize;
    else if (command == "minpoly")
        cfg.command = RunConfig::Command::MinPoly;
    else if (command == "tables")
        cfg.command = RunConfig::Command::Tables;
    else
        throw ConfigError("command", "unknown command \"" + command + "\"");

    const bool needs_family = cfg.command != RunConfig::Command::MinPoly;
    if (needs_family) {
        if (!j.contains("family")) throw ConfigError("family", "missing");
        cfg.family = parse_family(j["family"]);
    }
    const bool needs_k = cfg.command != RunConfig::Command::Tables;
    if (needs_k) cfg.k = detail::require_int(j, "k", 1);

    auto degree_field = [&](const char* primary, const char* alias) {
        if (j.contains(primary)) return detail::require_int(j, primary, 0);
        if (j.contains(alias)) return detail::require_int(j, alias, 0);
        throw ConfigError(primary, "missing");
    };
    switch (cfg.command) {
        case RunConfig::Command::Expand:
            cfg.m = degree_field("m", "n");
            break;
        case RunConfig::Command::Operator:
            cfg.n = degree_field("n", "m");
            break;
        case RunConfig::Command::Fourier:
        case RunConfig::Command::Tables:
            cfg.horizon = detail::require_int(j, "horizon", 0);
            break;
        case RunConfig::Command::Characterize:
            cfg.horizon = detail::optional_int(j, "horizon", 1, 24);
            break;
        default:
            break;
    }

    if (j.contains("mode")) {
        const std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "?";
        if (mode == "full")
            cfg.mode = KappaMode::Full;
        else if (mode == "weakened")
            cfg.mode = KappaMode::Weakened;
        else
            throw ConfigError("mode", "expected \"full\" or \"weakened\"");
    }
    if (j.contains("op")) {
        const std::string op = j["op"].is_string() ? j["op"].get<std::string>() : "?";
        if (op == "D" || op == "A" || op == "both")
            cfg.op = op == "both" ? 'B' : op[0];
        else
            throw ConfigError("op", "expected \"D\", \"A\" or \"both\"");
    }

    static const char* defaults[] = {"text", "text", "csv", "json", "text", "csv"};
    cfg.format = defaults[static_cast<int>(cfg.command)];
    if (j.contains("format")) {
        const std::string f = j["format"].is_string() ? j["format"].get<std::string>() : "?";
        if (f != "csv" && f != "json" && f != "latex" && f != "text")
            throw ConfigError("format", "expected one of csv, json, latex, text");
        cfg.format = f;
    }
    return cfg;
}

namespace detail {

inline std::string csv_of(const ChebPoly<Rational>& p) {
    std::string out = "degree,coeff\n";
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out += std::to_string(it->first) + "," + to_string(it->second) + "\n";
    return out;
}

inline std::string csv_of(const ChebPoly<FieldElement>& p) {
    std::string out = "degree,coords,approx\n";
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out += std::to_string(it->first) + "," + coords_csv(it->second) + "," + approx_str(it->second.approx()) + "\n";
    return out;
}

inline std::string latex_of_field_poly(const ChebPoly<FieldElement>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "\\left(" + it->second.str() + "\\right) T_{" + std::to_string(it->first) + "}";
    }
    return out;
}

inline int run_expand(const RunConfig& cfg, std::ostream& out) {
    const ChebPoly<Rational> poly = sieved_poly_expansion(*cfg.family, cfg.k, cfg.m);
    if (cfg.format == "text")
        out << to_string(poly) << "\n";
    else if (cfg.format == "json")
        out << Json{{"family", family_to_json(*cfg.family)}, {"k", cfg.k}, {"m", cfg.m}, {"poly", cheb_poly_to_json(poly)}}.dump(2)
            << "\n";
    else if (cfg.format == "csv")
        out << csv_of(poly);
    else
        out << "$" << latex_of(poly) << "$\n";
    return 0;
}

inline int run_operator(const RunConfig& cfg, std::ostream& out) {
    const auto& pn = cfg.family->polynomial(cfg.n);
    const bool want_d = cfg.op != 'A';
    const bool want_a = cfg.op != 'D';
    std::optional<ChebPoly<FieldElement>> dk, ak;
    if (want_d) dk = apply_Dk(pn, cfg.k);
    if (want_a) ak = apply_Ak(pn, cfg.k);
    if (cfg.format == "json") {
        Json o{{"family", family_to_json(*cfg.family)}, {"k", cfg.k}, {"n", cfg.n}};
        if (dk) o["Dk"] = cheb_poly_to_json(*dk);
        if (ak) o["Ak"] = cheb_poly_to_json(*ak);
        out << o.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "op,degree,coords,approx\n";
        auto emit = [&](const char* name, const ChebPoly<FieldElement>& p) {
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                out << name << "," << it->first << "," << coords_csv(it->second) << "," << approx_str(it->second.approx()) << "\n";
        };
        if (dk) emit("Dk", *dk);
        if (ak) emit("Ak", *ak);
    } else if (cfg.format == "latex") {
        if (dk) out << "$\\mathrm{D}_{" << cfg.k << "} P_{" << cfg.n << "} = " << latex_of_field_poly(*dk) << "$\n";
        if (ak) out << "$\\mathrm{A}_{" << cfg.k << "} P_{" << cfg.n << "} = " << latex_of_field_poly(*ak) << "$\n";
    } else {
        if (dk) out << "D_" << cfg.k << " P_" << cfg.n << " = " << to_string(*dk) << "\n";
        if (ak) out << "A_" << cfg.k << " P_" << cfg.n << " = " << to_string(*ak) << "\n";
    }
    return 0;
}

inline int run_fourier(const RunConfig& cfg, std::ostream& out) {
    const FourierTable t = fourier_table(*cfg.family, cfg.k, cfg.horizon);
    if (cfg.format == "json")
        out << fourier_table_to_json(t).dump(2) << "\n";
    else if (cfg.format == "latex")
        out << fourier_table_to_latex(t);
    else
        out << fourier_table_to_csv(t);
    return 0;
}

inline int run_tables(const RunConfig& cfg, std::ostream& out) {
    const ExpansionTables t = pq_tables(*cfg.family, cfg.horizon);
    if (cfg.format == "json")
        out << expansion_tables_to_json(t).dump(2) << "\n";
    else if (cfg.format == "latex")
        out << expansion_tables_to_latex(t);
    else
        out << expansion_tables_to_csv(t);
    return 0;
}

inline int run_characterize(const RunConfig& cfg, std::ostream& out) {
    const CharacterizationReport report = characterization_report(*cfg.family, cfg.k, cfg.horizon, cfg.mode);
    if (cfg.format == "json") {
        out << report_to_json(report).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << report_to_csv(report);
    } else if (cfg.format == "latex") {
        out << "\\begin{tabular}{llll}\ncondition & verdict & $n$ & witness \\\\\n\\hline\n";
        for (const auto& c : report.conditions) {
            out << c.condition << " & " << (c.verdict.holds ? "holds" : "fails") << " & ";
            if (!c.verdict.holds) out << c.verdict.n << " & " << c.verdict.witness;
            else out << " & ";
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
    } else {
        out << "family: " << report.family << "\nk = " << report.k << ", N = " << report.N << ", mode = " << report.mode << "\n";
        if (report.fitted_alpha) out << "fitted alpha = " << to_string(*report.fitted_alpha) << "\n";
        for (const auto& c : report.conditions) {
            out << "  " << c.condition << ": " << (c.verdict.holds ? "holds-up-to-N" : "fails-at(" + std::to_string(c.verdict.n) + ")");
            if (!c.verdict.holds) out << "  witness: " << c.verdict.witness;
            out << "\n";
        }
        out << (report.all_hold ? "all conditions hold" : "conditions fail") << "\n";
    }
    return report.all_hold ? 0 : 1;
}

inline int run_minpoly(const RunConfig& cfg, std::ostream& out) {
    const MinPoly mp = minimal_polynomial(cfg.k);
    if (cfg.format == "json") {
        Json coeffs = Json::array();
        for (const auto& c : mp.coefficients) coeffs.push_back(c.str());
        out << Json{{"k", mp.k}, {"degree", mp.degree()}, {"coefficients", std::move(coeffs)}, {"text", to_string(mp)}}.dump(2)
            << "\n";
    } else if (cfg.format == "csv") {
        out << "power,coefficient\n";
        for (size_t i = 0; i < mp.coefficients.size(); ++i) out << i << "," << mp.coefficients[i].str() << "\n";
    } else if (cfg.format == "latex") {
        out << "$" << to_string(mp) << "$\n";
    } else {
        out << to_string(mp) << "\n";
    }
    return 0;
}

}  // namespace detail

/// Executes a validated config. Artifacts go to `out`, diagnostics to
/// `err`. Exit status: 0 success/holds, 1 fails-at verdicts, 2 input
/// errors (the caller maps exceptions from parse_config to 2 as well).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case RunConfig::Command::Expand:
                return detail::run_expand(cfg, out);
            case RunConfig::Command::Operator:
                return detail::run_operator(cfg, out);
            case RunConfig::Command::Fourier:
                return detail::run_fourier(cfg, out);
            case RunConfig::Command::Tables:
                return detail::run_tables(cfg, out);
            case RunConfig::Command::Characterize:
                return detail::run_characterize(cfg, out);
            case RunConfig::Command::MinPoly:
                return detail::run_minpoly(cfg, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CoefficientError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TableExhaustedError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalConsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

/// Deterministic pseudo-random table family for test drives; the stream
/// is a fixed function of (seed, size), independent of platform.
inline Json random_family_json(int size, unsigned long long seed) {
    if (size < 1) throw ConfigError("random-family", "size must be >= 1");
    // splitmix64
    auto next = [state = seed]() mutable {
        state += 0x9e3779b97f4a7c15ull;
        unsigned long long z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    Json c = Json::array();
    for (int i = 0; i < size; ++i) {
        const unsigned long long d = 2 + next() % 48;       // denominator in [2, 49]
        const unsigned long long n = 1 + next() % (d - 1);  // numerator in [1, d-1]
        c.push_back(std::to_string(n) + "/" + std::to_string(d));
    }
    return Json{{"kind", "table"}, {"c", std::move(c)}};
}

}  // namespace rwps
