#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qe/config_io.hpp"

namespace qe {

// Exit codes: 0 success/pass, 1 usage error, 2 validation failure,
// 3 certification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCertification = 3;

namespace cli_detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string csv_escape(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::string fibers_compact(const SurfaceConfig& config) {
    std::string out;
    for (std::size_t i = 0; i < config.fibers.size(); ++i) {
        if (i > 0) {
            out += ";";
        }
        out += to_string(config.fibers[i].kind);
        out += ":";
        out += config.fibers[i].residue.str();
    }
    return out;
}

inline std::string int_list_compact(const std::vector<Int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += values[i].str();
    }
    return out + "]";
}

inline std::string int_list_csv(const std::vector<Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ";";
        }
        out += values[i].str();
    }
    return out;
}

// Config input shared by analyze/table/threshold: a JSON file or the
// full set of inline flags.
struct ConfigSource {
    std::string path;
    long long p = 0;
    long long g = 0;
    long long chi = 0;
    long long t = 0;
    std::vector<std::string> fiber_specs;

    CLI::Option* path_opt = nullptr;
    CLI::Option* p_opt = nullptr;
    CLI::Option* g_opt = nullptr;
    CLI::Option* chi_opt = nullptr;
    CLI::Option* t_opt = nullptr;

    void attach(CLI::App& cmd) {
        path_opt = cmd.add_option("--config", path,
                                  "config JSON file (\"-\" reads standard input)");
        p_opt = cmd.add_option("--p", p, "characteristic, 2 or 3");
        g_opt = cmd.add_option("--g", g, "genus of the base curve");
        chi_opt = cmd.add_option("--chi", chi, "chi of the structure sheaf");
        t_opt = cmd.add_option("--t", t, "torsion length");
        cmd.add_option("--fiber", fiber_specs,
                       "multiple fiber as kind:residue, e.g. tame:2 (repeatable)");
        path_opt->excludes(p_opt)->excludes(g_opt)->excludes(chi_opt)->excludes(t_opt);
    }

    SurfaceConfig load(std::istream& in) const {
        if (path_opt->count() > 0) {
            std::string text;
            if (path == "-") {
                std::ostringstream buffer;
                buffer << in.rdbuf();
                text = buffer.str();
            } else {
                std::ifstream file(path);
                if (!file) {
                    throw ConfigParseError("cannot open config file: " + path);
                }
                std::ostringstream buffer;
                buffer << file.rdbuf();
                text = buffer.str();
            }
            return parse_config(text);
        }
        if (p_opt->count() == 0 || g_opt->count() == 0 || chi_opt->count() == 0 ||
            t_opt->count() == 0) {
            throw UsageError("provide --config FILE, or all of --p --g --chi --t");
        }
        SurfaceConfig config;
        config.p = p;
        config.g = g;
        config.chi = chi;
        config.t = t;
        for (const std::string& spec : fiber_specs) {
            const std::size_t colon = spec.find(':');
            if (colon == std::string::npos) {
                throw UsageError("bad --fiber \"" + spec + "\": expected kind:residue");
            }
            const std::string kind = spec.substr(0, colon);
            FiberDatum fiber;
            if (kind == "tame") {
                fiber.kind = FiberKind::Tame;
            } else if (kind == "wild") {
                fiber.kind = FiberKind::Wild;
            } else {
                throw UsageError("bad --fiber kind \"" + kind + "\": expected tame or wild");
            }
            try {
                fiber.residue = Int(spec.substr(colon + 1));
            } catch (const std::exception&) {
                throw UsageError("bad --fiber residue in \"" + spec + "\"");
            }
            config.fibers.push_back(std::move(fiber));
        }
        return config;
    }
};

struct RegionFlags {
    long long p = 0;
    long long g_max = 4;
    long long chi_t_max = 6;
    long long lambda_max = 6;
    std::vector<std::string> exclusions;

    void attach(CLI::App& cmd) {
        cmd.add_option("--p", p, "characteristic, 2 or 3")->required();
        cmd.add_option("--g-max", g_max, "largest base genus to enumerate")
            ->check(CLI::NonNegativeNumber);
        cmd.add_option("--chi-t-max", chi_t_max, "largest chi + t to enumerate")
            ->check(CLI::NonNegativeNumber);
        cmd.add_option("--lambda-max", lambda_max, "largest multiple-fiber count")
            ->check(CLI::NonNegativeNumber);
        cmd.add_option("--exclude", exclusions, "named exclusion rule (repeatable)");
    }

    RegionBounds bounds() const {
        RegionBounds region;
        region.p = p;
        region.g_max = g_max;
        region.chi_plus_t_max = chi_t_max;
        region.lambda_max = lambda_max;
        region.exclusions = exclusions;
        return region;
    }
};

inline CLI::Option* add_format_option(CLI::App& cmd, std::string& format) {
    return cmd.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured", "delimited"}))
        ->default_str("text");
}

// ---- analyze ----

inline int run_analyze(const SurfaceConfig& config, bool strict, const std::string& format,
                       std::ostream& out) {
    const ValidationReport report = validate(config, {strict});
    const bool valid = report.valid();

    if (format == "structured") {
        Json doc = {{"config", to_json(config)}, {"validation", to_json(report)}};
        if (valid) {
            doc["kodaira_dim_is_one"] = kodaira_dim_is_one(config);
            doc["criterion_value"] = kodaira_criterion_value(config).str();
            doc["canonical"] = to_json(canonical_data(config));
            doc["step_increment"] = detail::int_to_json(step_increment(config));
        }
        out << doc.dump() << "\n";
    } else if (format == "delimited") {
        out << "p,g,chi,t,fibers,valid,violations,kodaira_dim_is_one,criterion_value,"
               "base_coeff,step_increment\n";
        std::string violations;
        for (const Violation& violation : report.violations) {
            if (!violations.empty()) {
                violations += ";";
            }
            violations += violation.rule;
        }
        out << config.p << "," << config.g << "," << config.chi << "," << config.t << ","
            << fibers_compact(config) << "," << (valid ? "true" : "false") << ","
            << csv_escape(violations) << ",";
        if (valid) {
            out << (kodaira_dim_is_one(config) ? "true" : "false") << ","
                << kodaira_criterion_value(config).str() << ","
                << canonical_data(config).base_coeff << "," << step_increment(config);
        } else {
            out << ",,,";
        }
        out << "\n";
    } else {
        out << "config: " << to_string(config) << "\n";
        out << "valid: " << (valid ? "yes" : "no") << "\n";
        for (const Violation& violation : report.violations) {
            out << "violation[" << violation.rule << "]: " << violation.message << "\n";
        }
        if (valid) {
            out << "kodaira_dim_is_one: " << (kodaira_dim_is_one(config) ? "yes" : "no")
                << "\n";
            out << "criterion_value: " << kodaira_criterion_value(config).str() << "\n";
            const CanonicalClass data = canonical_data(config);
            out << "base_coeff: " << data.base_coeff << "\n";
            out << "residues: " << int_list_compact(data.residues) << "\n";
            out << "step_increment: " << step_increment(config) << "\n";
        }
    }
    return valid ? kExitOk : kExitValidation;
}

// ---- table ----

inline int run_table(const SurfaceConfig& config, bool strict, long long m_max,
                     const std::string& format, std::ostream& out) {
    const ValidationReport report = validate(config, {strict});
    if (!report.valid()) {
        throw InvalidConfigError(report);
    }
    const std::vector<PlurigenusRecord> rows = plurigenus_table(config, m_max);
    if (format == "structured") {
        Json list = Json::array();
        for (const PlurigenusRecord& row : rows) {
            list.push_back(to_json(row));
        }
        out << Json{{"config", to_json(config)}, {"rows", list}}.dump() << "\n";
    } else if (format == "delimited") {
        out << render_table_delimited(rows);
    } else {
        out << "config: " << to_string(config) << "\n" << render_table_text(rows);
    }
    return kExitOk;
}

// ---- threshold ----

inline int run_threshold(const SurfaceConfig& config, bool strict, long long scan_cap,
                         const std::string& format, std::ostream& out) {
    const ValidationReport report = validate(config, {strict});
    if (!report.valid()) {
        throw InvalidConfigError(report);
    }
    const ThresholdCertificate cert = stable_threshold(config, {scan_cap});
    if (format == "structured") {
        out << to_json(cert).dump() << "\n";
    } else if (format == "delimited") {
        out << "p,g,chi,t,fibers,first_success,stable_m,step,failures,window\n"
            << config.p << "," << config.g << "," << config.chi << "," << config.t << ","
            << fibers_compact(config) << "," << cert.first_success << "," << cert.stable_m
            << "," << cert.step << "," << int_list_csv(cert.failures) << ","
            << int_list_csv(cert.window) << "\n";
    } else {
        out << "config: " << to_string(config) << "\n";
        out << "stable_m: " << cert.stable_m << "\n";
        out << "first_success: " << cert.first_success << "\n";
        out << "step: " << cert.step << "\n";
        out << "failures: " << int_list_compact(cert.failures) << "\n";
        out << "window: " << int_list_compact(cert.window) << "\n";
    }
    return kExitOk;
}

// ---- enumerate ----

inline int run_enumerate(const RegionBounds& bounds, const std::string& format,
                         std::ostream& out) {
    if (format == "delimited") {
        out << "p,g,chi,t,fibers,case,first_success,stable_m\n";
    }
    enumerate_configs(bounds, [&](const SurfaceConfig& config) {
        const ThresholdCertificate cert = stable_threshold(config);
        const char* label = to_string(classify_case(config));
        if (format == "structured") {
            out << Json{{"config", to_json(config)},
                        {"case", label},
                        {"first_success", detail::int_to_json(cert.first_success)},
                        {"stable_m", detail::int_to_json(cert.stable_m)}}
                       .dump()
                << "\n";
        } else if (format == "delimited") {
            out << config.p << "," << config.g << "," << config.chi << "," << config.t << ","
                << fibers_compact(config) << "," << label << "," << cert.first_success << ","
                << cert.stable_m << "\n";
        } else {
            out << to_string(config) << "  case=" << label
                << "  first_success=" << cert.first_success << "  stable_m=" << cert.stable_m
                << "\n";
        }
    });
    return kExitOk;
}

// ---- certify ----

inline void print_case_row(std::ostream& out, const CaseStats& stats) {
    out << "  " << stats.label;
    out << std::string(stats.label.size() < 16 ? 16 - stats.label.size() : 1, ' ');
    out << "count=" << stats.count;
    out << "  max=" << (stats.max_stable ? stats.max_stable->str() : "-");
    out << "  bound=" << (stats.bound ? stats.bound->str() : "-");
    out << "  " << (stats.pass ? "ok" : "EXCEEDED") << "\n";
}

inline int run_certify(const RegionBounds& bounds, const std::string& format,
                       std::ostream& out) {
    const CertificationReport report = certify_bound(bounds);
    if (format == "structured") {
        out << to_json(report).dump() << "\n";
    } else if (format == "delimited") {
        out << "label,count,max_stable,bound,pass\n";
        for (const CaseStats& stats : report.per_case) {
            out << "case:" << stats.label << "," << stats.count << ","
                << (stats.max_stable ? stats.max_stable->str() : "") << ","
                << (stats.bound ? stats.bound->str() : "") << ","
                << (stats.pass ? "true" : "false") << "\n";
        }
        for (const CaseStats& stats : report.iii2_split) {
            out << "split:" << stats.label << "," << stats.count << ","
                << (stats.max_stable ? stats.max_stable->str() : "") << ","
                << (stats.bound ? stats.bound->str() : "") << ","
                << (stats.pass ? "true" : "false") << "\n";
        }
        for (const TailCheck& check : report.tail_checks) {
            out << "tail:" << check.name << ",,,," << (check.pass ? "true" : "false") << "\n";
        }
        out << "overall," << report.configs_checked << ","
            << (report.max_stable ? report.max_stable->str() : "") << ",,"
            << (report.pass ? "true" : "false") << "\n";
    } else {
        out << "region: p=" << bounds.p << " g_max=" << bounds.g_max
            << " chi_plus_t_max=" << bounds.chi_plus_t_max
            << " lambda_max=" << bounds.lambda_max << " exclusions=[";
        for (std::size_t i = 0; i < bounds.exclusions.size(); ++i) {
            out << (i > 0 ? "," : "") << bounds.exclusions[i];
        }
        out << "]\n";
        out << "configs checked: " << report.configs_checked << "\n";
        out << "max stable threshold: "
            << (report.max_stable ? report.max_stable->str() : "none (empty region)") << "\n";
        out << "extremal configs:\n";
        for (const SurfaceConfig& config : report.extremal_configs) {
            out << "  " << to_string(config) << "\n";
        }
        out << "per-case:\n";
        for (const CaseStats& stats : report.per_case) {
            print_case_row(out, stats);
        }
        out << "III-2 split:\n";
        for (const CaseStats& stats : report.iii2_split) {
            print_case_row(out, stats);
        }
        out << "tail checks:\n";
        for (const TailCheck& check : report.tail_checks) {
            out << "  " << check.name << ": " << (check.pass ? "pass" : "FAIL") << " ("
                << check.witness << ")\n";
        }
        out << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? kExitOk : kExitCertification;
}

// ---- examples ----

inline std::vector<std::pair<std::string, SurfaceConfig>> builtin_configs() {
    return {{"example-3-1", example_surface_3_1()},
            {"question-3-3", question_3_3_config()}};
}

inline int run_examples(const std::string& name, const std::string& format,
                        std::ostream& out) {
    const auto builtins = builtin_configs();
    if (!name.empty()) {
        for (const auto& [builtin_name, config] : builtins) {
            if (builtin_name == name) {
                if (format == "delimited") {
                    out << "name,p,g,chi,t,fibers\n"
                        << builtin_name << "," << config.p << "," << config.g << ","
                        << config.chi << "," << config.t << "," << fibers_compact(config)
                        << "\n";
                } else if (format == "structured") {
                    out << to_json(config).dump() << "\n";
                } else {
                    out << to_json(config).dump(2) << "\n";
                }
                return kExitOk;
            }
        }
        throw UsageError("unknown example \"" + name + "\"");
    }
    if (format == "delimited") {
        out << "name,p,g,chi,t,fibers\n";
        for (const auto& [builtin_name, config] : builtins) {
            out << builtin_name << "," << config.p << "," << config.g << "," << config.chi
                << "," << config.t << "," << fibers_compact(config) << "\n";
        }
    } else if (format == "structured") {
        for (const auto& [builtin_name, config] : builtins) {
            out << Json{{"name", builtin_name}, {"config", to_json(config)}}.dump() << "\n";
        }
    } else {
        for (const auto& [builtin_name, config] : builtins) {
            const ThresholdCertificate cert = stable_threshold(config);
            out << builtin_name << "\n";
            out << "  config: " << to_json(config).dump() << "\n";
            out << "  case: " << to_string(classify_case(config))
                << "  first_success: " << cert.first_success << "  stable_m: " << cert.stable_m
                << "\n";
        }
    }
    return kExitOk;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    using namespace cli_detail;

    CLI::App app{"exact calculator and certifier for multicanonical thresholds of "
                 "quasi-elliptic surface invariants (characteristics 2 and 3)"};
    app.require_subcommand(1);

    ConfigSource analyze_source;
    bool analyze_strict = false;
    std::string analyze_format = "text";
    CLI::App* analyze = app.add_subcommand(
        "analyze", "validate a config, decide Kodaira dimension 1, show canonical data");
    analyze_source.attach(*analyze);
    analyze->add_flag("--strict", analyze_strict, "require a wild fiber whenever t > 0");
    add_format_option(*analyze, analyze_format);

    ConfigSource table_source;
    bool table_strict = false;
    long long table_m_max = 12;
    std::string table_format = "text";
    CLI::App* table =
        app.add_subcommand("table", "plurigenus table: degree, h0 bounds, fibration test");
    table_source.attach(*table);
    table->add_flag("--strict", table_strict, "require a wild fiber whenever t > 0");
    table->add_option("--m-max", table_m_max, "last m in the table")
        ->check(CLI::PositiveNumber);
    add_format_option(*table, table_format);

    ConfigSource threshold_source;
    bool threshold_strict = false;
    long long threshold_scan_cap = 10000;
    std::string threshold_format = "text";
    CLI::App* threshold = app.add_subcommand(
        "threshold", "first-success and stable thresholds with scan evidence");
    threshold_source.attach(*threshold);
    threshold->add_flag("--strict", threshold_strict, "require a wild fiber whenever t > 0");
    threshold->add_option("--scan-cap", threshold_scan_cap,
                          "defensive bound on the threshold scan")
        ->check(CLI::PositiveNumber);
    add_format_option(*threshold, threshold_format);

    RegionFlags enumerate_region;
    std::string enumerate_format = "text";
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "stream every Kodaira-dimension-1 config in a region with thresholds");
    enumerate_region.attach(*enumerate);
    add_format_option(*enumerate, enumerate_format);

    RegionFlags certify_region;
    std::string certify_format = "text";
    CLI::App* certify = app.add_subcommand(
        "certify", "enumerate a region and certify per-case threshold bounds + tail checks");
    certify_region.attach(*certify);
    add_format_option(*certify, certify_format);

    std::string examples_name;
    std::string examples_format = "text";
    CLI::App* examples =
        app.add_subcommand("examples", "print the bundled reference configs");
    examples->add_option("--name", examples_name, "print just this config as JSON");
    add_format_option(*examples, examples_format);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) {
            return run_analyze(analyze_source.load(in), analyze_strict, analyze_format, out);
        }
        if (app.got_subcommand(table)) {
            return run_table(table_source.load(in), table_strict, table_m_max, table_format,
                             out);
        }
        if (app.got_subcommand(threshold)) {
            return run_threshold(threshold_source.load(in), threshold_strict,
                                 threshold_scan_cap, threshold_format, out);
        }
        if (app.got_subcommand(enumerate)) {
            return run_enumerate(enumerate_region.bounds(), enumerate_format, out);
        }
        if (app.got_subcommand(certify)) {
            return run_certify(certify_region.bounds(), certify_format, out);
        }
        if (app.got_subcommand(examples)) {
            return run_examples(examples_name, examples_format, out);
        }
    } catch (const UsageError& error) {
        err << "error: " << error.what() << "\n";
        return kExitUsage;
    } catch (const ConfigParseError& error) {
        err << "error: " << error.what() << "\n";
        return kExitValidation;
    } catch (const InvalidConfigError& error) {
        err << "error: " << error.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& error) {
        err << "error: " << error.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& error) {
        err << "error: " << error.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qe
