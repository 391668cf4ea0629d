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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rwps/rwps.hpp"

namespace {

struct Flags {
    std::string config_path;
    std::string family_json;
    int random_family = 0;
    unsigned long long seed = 0;
    int k = 0;
    long m = -1, n = -1;
    int horizon = -1;
    std::string format, mode, op, out_path;
};

void add_common(CLI::App* cmd, Flags& flags, bool family, bool eats_k) {
    if (family) {
        cmd->add_option("--family-json", flags.family_json, "family description as inline JSON");
        cmd->add_option("--random-family", flags.random_family, "generate a deterministic random table family of this length");
        cmd->add_option("--seed", flags.seed, "seed for --random-family");
    }
    if (eats_k) cmd->add_option("--k", flags.k, "sieve order k");
    cmd->add_option("--format", flags.format)->check(CLI::IsMember({"csv", "json", "latex", "text"}));
    cmd->add_option("--out", flags.out_path, "write the artifact to this file instead of stdout");
}

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables, expansions and characterizations of sieved random walk polynomial sequences"};
    app.require_subcommand(0, 1);

    Flags flags;
    app.add_option("--config", flags.config_path, "JSON run configuration (overrides subcommand flags)");

    auto* expand = app.add_subcommand("expand", "sieved polynomial in the Chebyshev T basis");
    expand->add_option("--m", flags.m, "degree of the sieved polynomial");
    expand->add_option("--n", flags.n, "alias for --m");
    add_common(expand, flags, true, true);

    auto* op = app.add_subcommand("operator", "image of P_n under the sieved operators");
    op->add_option("--n", flags.n, "index of P_n");
    op->add_option("--m", flags.m, "alias for --n");
    op->add_option("--op", flags.op)->check(CLI::IsMember({"D", "A", "both"}));
    add_common(op, flags, true, true);

    auto* fourier = app.add_subcommand("fourier", "kappa/alpha/sigma Fourier coefficient tables");
    fourier->add_option("--horizon", flags.horizon, "max row N");
    add_common(fourier, flags, true, true);

    auto* tables = app.add_subcommand("tables", "r/p/q expansion triangles of the parent family");
    tables->add_option("--horizon", flags.horizon, "max row N");
    add_common(tables, flags, true, false);

    auto* characterize = app.add_subcommand("characterize", "decide k-sievedness via the equivalent conditions");
    characterize->add_option("--horizon", flags.horizon, "finite horizon N (default 24)");
    characterize->add_option("--mode", flags.mode)->check(CLI::IsMember({"full", "weakened"}));
    add_common(characterize, flags, true, true);

    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of 2cos(pi/k)");
    add_common(minpoly, flags, false, true);

    CLI11_PARSE(app, argc, argv);

    std::string config_text;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) return fail_usage("cannot open config file " + flags.config_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        config_text = buf.str();
    } else {
        if (app.get_subcommands().empty()) return fail_usage("expected a subcommand or --config FILE");
        CLI::App* sub = app.get_subcommands().front();
        rwps::Json j;
        j["command"] = sub->get_name();
        if (sub != minpoly) {
            if (flags.random_family > 0) {
                if (!flags.family_json.empty()) return fail_usage("--family-json and --random-family are mutually exclusive");
                j["family"] = rwps::random_family_json(flags.random_family, flags.seed);
            } else if (!flags.family_json.empty()) {
                try {
                    j["family"] = rwps::Json::parse(flags.family_json);
                } catch (const nlohmann::json::parse_error& e) {
                    return fail_usage(std::string("--family-json is not valid JSON: ") + e.what());
                }
            }
        }
        if (flags.k > 0) j["k"] = flags.k;
        if (flags.m >= 0) j["m"] = flags.m;
        if (flags.n >= 0) j["n"] = flags.n;
        if (flags.horizon >= 0) j["horizon"] = flags.horizon;
        if (!flags.format.empty()) j["format"] = flags.format;
        if (!flags.mode.empty()) j["mode"] = flags.mode;
        if (!flags.op.empty()) j["op"] = flags.op;
        config_text = j.dump();
    }

    rwps::RunConfig cfg;
    try {
        cfg = rwps::parse_config(config_text);
    } catch (const rwps::ConfigError& e) {
        return fail_usage(e.what());
    }

    if (!flags.out_path.empty()) {
        std::ofstream out(flags.out_path);
        if (!out) return fail_usage("cannot open output file " + flags.out_path);
        return rwps::run(cfg, out, std::cerr);
    }
    return rwps::run(cfg, std::cout, std::cerr);
}
