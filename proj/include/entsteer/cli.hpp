// Copyright 2026 The entsteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file cli.hpp
/// Command-line front end. Kept header-only so tests can drive run()
/// in-process.
///
/// Exit codes: 0 success, 2 invalid input, 1 internal error.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "entsteer/analysis.hpp"

namespace entsteer::cli {

using nlohmann::json;

enum class Command { Iso, IsoThreshold, Figure1, TwoQubit, MonteCarlo, OneWay, Mubs };
enum class Format { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
    Command command = Command::Iso;
    Format format = Format::Json;
    std::string out_path; // empty: standard output

    int d = 2;
    std::optional<int> m;
    double q = 2.0;
    double alpha = 0.0;
    double tol = 1e-12;
    std::vector<int> dims{2, 3, 5, 7, 11, 13};
    std::vector<double> q_list{1.0, 2.0};
    std::vector<double> a{0.0, 0.0, 0.0};
    std::vector<double> b{0.0, 0.0, 0.0};
    std::vector<double> c{0.0, 0.0, 0.0};
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double theta = 0.0;
    std::optional<double> beta;
    BobAliceReading reading = BobAliceReading::Division;

    [[nodiscard]] int settings() const { return m.value_or(d + 1); }
};

/// Thrown by parse() for --help; carries the rendered text.
struct HelpRequested {
    std::string text;
};

namespace detail {

inline RealVector3 to_vec3(const std::vector<double> &v, const char *name) {
    entsteer::detail::require(v.size() == 3, std::string("--") + name + " needs exactly three comma-separated reals");
    return {v[0], v[1], v[2]};
}

inline json vec_json(const RealVector3 &v) { return json::array({v(0), v(1), v(2)}); }

inline json result_json(const CriterionResult &r) {
    json j{{"lhs", r.lhs}, {"bound", r.bound}, {"violated", r.violated}, {"margin", r.margin}};
    if (r.degenerate) {
        j["degenerate"] = true;
        j["note"] = r.note;
    }
    return j;
}

/// One-row CSV of the scalar leaves of a JSON object; nested keys are
/// joined with '.', arrays with ';'.
inline void flatten(const json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out) {
    for (const auto &[key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, name, out);
        } else if (value.is_array()) {
            std::string cell;
            for (std::size_t k = 0; k < value.size(); ++k) {
                cell += (k ? ";" : "") + value[k].dump();
            }
            out.emplace_back(name, cell);
        } else if (value.is_string()) {
            out.emplace_back(name, value.get<std::string>());
        } else {
            out.emplace_back(name, value.dump());
        }
    }
}

inline void write_record_csv(std::ostream &os, const json &j) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(j, "", cells);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        os << (k ? "," : "") << cells[k].first;
    }
    os << '\n';
    for (std::size_t k = 0; k < cells.size(); ++k) {
        os << (k ? "," : "") << cells[k].second;
    }
    os << '\n';
}

} // namespace detail

inline json run_iso(const RunConfig &cfg) {
    const int m = cfg.settings();
    const UncertaintyBound bound = select_bound(cfg.d, m, cfg.q);
    const double lhs = isotropic_lhs(cfg.d, m, cfg.q, cfg.alpha);
    const CriterionResult r = make_result(lhs, bound.value);
    json j{{"command", "iso"}, {"d", cfg.d}, {"m", m}, {"q", cfg.q}, {"alpha", cfg.alpha}};
    j.update(detail::result_json(r));
    if (is_prime(cfg.d)) {
        j["lhs_from_mubs"] = isotropic_lhs_from_mubs(cfg.d, m, cfg.q, cfg.alpha);
    }
    return j;
}

inline json run_iso_threshold(const RunConfig &cfg) {
    const ThresholdResult t = critical_alpha(cfg.d, cfg.settings(), cfg.q, cfg.tol);
    return {{"command", "iso-threshold"}, {"d", t.d},
            {"m", t.m},                   {"q", t.q},
            {"alpha_crit", t.alpha_crit}, {"iterations", t.iterations},
            {"bound", t.bound},           {"alpha_cavalcanti", cavalcanti_threshold(t.d)}};
}

inline json figure1_json(const Figure1Table &table) {
    json rows = json::array();
    for (const auto &row : table.rows) {
        json r{{"d", row.d}, {"supported", row.supported}};
        for (std::size_t k = 0; k < table.q_list.size(); ++k) {
            const std::string key = "alpha_q" + entsteer::detail::format_sig(table.q_list[k], 6);
            r[key] = row.supported ? json(row.alpha[k]) : json(nullptr);
        }
        r["alpha_cavalcanti"] = row.alpha_cavalcanti;
        rows.push_back(std::move(r));
    }
    return {{"command", "figure1"}, {"q_list", table.q_list}, {"rows", std::move(rows)}};
}

inline json run_two_qubit(const RunConfig &cfg) {
    BlochForm bloch;
    bloch.a = detail::to_vec3(cfg.a, "a");
    bloch.b = detail::to_vec3(cfg.b, "b");
    bloch.c = detail::to_vec3(cfg.c, "c");
    make_two_qubit(bloch); // rejects unphysical parameters
    CriterionResult steering;
    if (cfg.q == 2.0) {
        steering = two_qubit_pauli_q2(bloch);
    } else {
        const auto axes = canonical_axes();
        steering = two_qubit_general(bloch, axes, axes, cfg.q);
    }
    json j{{"command", "twoqubit"},
           {"a", detail::vec_json(bloch.a)},
           {"b", detail::vec_json(bloch.b)},
           {"c", detail::vec_json(bloch.c)},
           {"q", cfg.q}};
    j.update(detail::result_json(steering));
    j["separable"] = detail::result_json(separable_criterion(bloch, cfg.q));
    j["linear"] = detail::result_json(linear_criterion(bloch.c));
    return j;
}

inline json ensemble_json(const EnsembleReport &report) {
    json counts = json::object();
    json fractions = json::object();
    for (const Category c : kCategories) {
        counts[category_name(c)] = report.count(c);
        fractions[category_name(c)] = report.fraction(c);
    }
    return {{"command", "mc"},
            {"samples", report.n_samples},
            {"seed", report.seed},
            {"counts", std::move(counts)},
            {"fractions", std::move(fractions)}};
}

inline json run_one_way(const RunConfig &cfg) {
    const OneWayWindow w = one_way_window(cfg.theta, cfg.reading);
    json j{{"command", "oneway"},
           {"theta", w.theta},
           {"lower", w.lower},
           {"beta_max", w.beta_max},
           {"bob_to_alice_unsteerable_check", w.bob_to_alice_unsteerable_check},
           {"reading", cfg.reading == BobAliceReading::Division ? "division" : "product"}};
    if (cfg.beta) {
        const OneWayReport r = verify_one_way_threshold(cfg.theta, *cfg.beta, cfg.reading);
        j["beta"] = r.beta;
        j["in_window"] = r.in_window;
        j["criterion"] = detail::result_json(r.criterion);
    }
    return j;
}

inline json run_mubs(const RunConfig &cfg) {
    const int m = cfg.settings();
    const auto bases = mub_prime(cfg.d, m);
    double completeness = 0.0;
    for (const auto &basis : bases) {
        completeness = std::max(completeness, basis.completeness_deviation());
    }
    return {{"command", "mubs"},
            {"d", cfg.d},
            {"m", m},
            {"mutually_unbiased", check_mub(bases)},
            {"max_overlap_deviation", mub_overlap_deviation(bases)},
            {"max_completeness_deviation", completeness}};
}

/// Evaluates a parsed configuration and writes the artifact to `os`.
inline void execute(const RunConfig &cfg, std::ostream &os) {
    const bool csv = cfg.format == Format::Csv;
    switch (cfg.command) {
    case Command::Figure1: {
        const Figure1Table table = figure1_table(cfg.dims, cfg.q_list, cfg.tol);
        if (csv) {
            write_figure1_csv(os, table);
        } else {
            os << figure1_json(table).dump(2) << '\n';
        }
        return;
    }
    case Command::MonteCarlo: {
        const EnsembleReport report = classify_ensemble(cfg.samples, cfg.seed, cfg.threads);
        if (csv) {
            write_ensemble_csv(os, report);
        } else {
            os << ensemble_json(report).dump(2) << '\n';
        }
        return;
    }
    default:
        break;
    }
    json j;
    switch (cfg.command) {
    case Command::Iso:
        j = run_iso(cfg);
        break;
    case Command::IsoThreshold:
        j = run_iso_threshold(cfg);
        break;
    case Command::TwoQubit:
        j = run_two_qubit(cfg);
        break;
    case Command::OneWay:
        j = run_one_way(cfg);
        break;
    case Command::Mubs:
        j = run_mubs(cfg);
        break;
    default:
        break;
    }
    if (csv) {
        detail::write_record_csv(os, j);
    } else {
        os << j.dump(2) << '\n';
    }
}

/// Parses arguments into a RunConfig. Throws CLI::ParseError subclasses on
/// bad flags and InvalidArgument on out-of-range values.
inline RunConfig parse(int argc, const char *const *argv) {
    RunConfig cfg;
    CLI::App app{"Entropic steering criteria: thresholds, two-qubit tests, Monte-Carlo classification"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string reading = "division";
    const auto common = [&](CLI::App *sub) {
        sub->add_option("--out", cfg.out_path, "Output file (default: standard output)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto *iso = app.add_subcommand("iso", "Evaluate the isotropic-state criterion at one alpha");
    iso->add_option("--d", cfg.d, "Local dimension")->required();
    iso->add_option("--m", cfg.m, "Number of MUBs (default d + 1)");
    iso->add_option("--q", cfg.q, "Entropy parameter, 1 or (1, 2]");
    iso->add_option("--alpha", cfg.alpha, "Visibility in [0, 1]")->required();
    common(iso);

    auto *thr = app.add_subcommand("iso-threshold", "Critical visibility for isotropic states");
    thr->add_option("--d", cfg.d, "Local dimension")->required();
    thr->add_option("--m", cfg.m, "Number of MUBs (default d + 1)");
    thr->add_option("--q", cfg.q, "Entropy parameter, 1 or (1, 2]");
    thr->add_option("--tol", cfg.tol, "Bisection tolerance (>= 1e-12)");
    common(thr);

    auto *fig = app.add_subcommand("figure1", "Critical visibility versus dimension, complete MUB sets");
    fig->add_option("--dims", cfg.dims, "Dimensions")->delimiter(',');
    fig->add_option("--q-list", cfg.q_list, "Entropy parameters")->delimiter(',');
    fig->add_option("--tol", cfg.tol, "Bisection tolerance (>= 1e-12)");
    common(fig);

    auto *two = app.add_subcommand("twoqubit", "Three-Pauli criteria for a two-qubit Bloch normal form");
    two->add_option("--a", cfg.a, "Alice's Bloch vector a1,a2,a3")->delimiter(',');
    two->add_option("--b", cfg.b, "Bob's Bloch vector b1,b2,b3")->delimiter(',');
    two->add_option("--c", cfg.c, "Correlation diagonal c1,c2,c3")->delimiter(',');
    two->add_option("--q", cfg.q, "Entropy parameter in (1, 2]");
    common(two);

    auto *mc = app.add_subcommand("mc", "Classify Hilbert-Schmidt random two-qubit states");
    mc->add_option("--samples", cfg.samples, "Number of random states");
    mc->add_option("--seed", cfg.seed, "Ensemble seed");
    mc->add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)");
    common(mc);

    auto *one = app.add_subcommand("oneway", "Detection window of the one-way steerable family");
    one->add_option("--theta", cfg.theta, "Angle in radians, (0, pi/4]")->required();
    one->add_option("--beta", cfg.beta, "Mixing weight to test, [0, 1]");
    one->add_option("--reading", reading, "Reading of the Bob-to-Alice condition")
        ->check(CLI::IsMember({"division", "product"}));
    common(one);

    auto *mubs = app.add_subcommand("mubs", "Construct and check mutually unbiased bases (prime d)");
    mubs->add_option("--d", cfg.d, "Prime dimension")->required();
    mubs->add_option("--m", cfg.m, "Number of bases (default d + 1)");
    common(mubs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() != 0) {
            throw;
        }
        std::ostringstream help;
        std::ostringstream ignored;
        app.exit(e, help, ignored);
        throw HelpRequested{help.str()};
    }

    const std::pair<CLI::App *, Command> table[] = {
        {iso, Command::Iso},      {thr, Command::IsoThreshold}, {fig, Command::Figure1}, {two, Command::TwoQubit},
        {mc, Command::MonteCarlo}, {one, Command::OneWay},       {mubs, Command::Mubs},
    };
    for (const auto &[sub, command] : table) {
        if (sub->parsed()) {
            cfg.command = command;
        }
    }
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    cfg.reading = reading == "product" ? BobAliceReading::Product : BobAliceReading::Division;

    using entsteer::detail::require;
    require(cfg.d >= 2 && cfg.d <= 32, "--d must lie in [2, 32]");
    if (cfg.m) {
        require(*cfg.m >= 2 && *cfg.m <= cfg.d + 1, "--m must lie in [2, d + 1]");
    }
    require(cfg.q == 1.0 || (cfg.q > 1.0 && cfg.q <= 2.0), "--q must be 1 or lie in (1, 2]");
    require(cfg.alpha >= 0.0 && cfg.alpha <= 1.0, "--alpha must lie in [0, 1]");
    require(cfg.tol >= 1e-12 && cfg.tol < 1.0, "--tol must lie in [1e-12, 1)");
    require(cfg.samples >= 1, "--samples must be positive");
    require(cfg.threads >= 1, "--threads must be positive");
    for (const int d : cfg.dims) {
        require(d >= 2 && d <= 32, "--dims entries must lie in [2, 32]");
    }
    for (const double q : cfg.q_list) {
        require(q == 1.0 || (q > 1.0 && q <= 2.0), "--q-list entries must be 1 or lie in (1, 2]");
    }
    if (cfg.command == Command::OneWay) {
        require(cfg.theta > 0.0 && cfg.theta <= std::numbers::pi / 4.0 + 1e-15, "--theta must lie in (0, pi/4]");
        if (cfg.beta) {
            require(*cfg.beta >= 0.0 && *cfg.beta <= 1.0, "--beta must lie in [0, 1]");
        }
    }
    if (cfg.command == Command::TwoQubit) {
        detail::to_vec3(cfg.a, "a");
        detail::to_vec3(cfg.b, "b");
        detail::to_vec3(cfg.c, "c");
    }
    return cfg;
}

/// Full CLI entry point: parse, dispatch, write, map errors to exit codes.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    RunConfig cfg;
    try {
        cfg = parse(argc, argv);
    } catch (const HelpRequested &h) {
        out << h.text;
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        std::ostringstream buffer;
        execute(cfg, buffer);
        if (cfg.out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(cfg.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file " << cfg.out_path << '\n';
                return kExitInvalid;
            }
            file << buffer.str();
        }
        return kExitOk;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NoSolution &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace entsteer::cli
