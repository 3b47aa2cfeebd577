#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qe/threshold.hpp"

namespace qe {

using ConfigPredicate = std::function<bool(const SurfaceConfig&)>;

// Named predicates a region may exclude from enumeration. Versioned by
// name so certification runs are reproducible verbatim.
//   question-3-3: genus-1 base, chi = 0, t = 0, exactly one tame fiber.
inline const std::map<std::string, ConfigPredicate>& exclusion_rules() {
    static const std::map<std::string, ConfigPredicate> rules = {
        {"question-3-3",
         [](const SurfaceConfig& c) {
             return c.g == 1 && c.chi == 0 && c.t == 0 && c.fibers.size() == 1 &&
                    c.fibers[0].kind == FiberKind::Tame;
         }},
    };
    return rules;
}

// A finite search region. Defaults cover every extremal configuration
// and populate all six cases; the tail checks extend the result beyond
// the region.
struct RegionBounds {
    Int p = 3;
    Int g_max = 4;
    Int chi_plus_t_max = 6;
    Int lambda_max = 6;
    std::vector<std::string> exclusions;

    bool operator==(const RegionBounds&) const = default;
};

inline void require_valid(const RegionBounds& bounds) {
    if (bounds.p != 2 && bounds.p != 3) {
        throw std::invalid_argument("region: p must be 2 or 3, got " + bounds.p.str());
    }
    if (bounds.g_max < 0 || bounds.chi_plus_t_max < 0 || bounds.lambda_max < 0) {
        throw std::invalid_argument("region: g_max, chi_plus_t_max and lambda_max must be "
                                    "non-negative");
    }
    for (const std::string& name : bounds.exclusions) {
        if (exclusion_rules().find(name) == exclusion_rules().end()) {
            throw std::invalid_argument("region: unknown exclusion rule \"" + name + "\"");
        }
    }
}

namespace detail {

// Non-increasing residue lists over [0, p-1], lengths 0..max_len, in a
// fixed order: by length, then lexicographically decreasing.
inline std::vector<std::vector<Int>> wild_residue_lists(const Int& p, const Int& max_len) {
    std::vector<std::vector<Int>> lists;
    const long long cap = max_len.convert_to<long long>();
    for (long long len = 0; len <= cap; ++len) {
        std::vector<Int> current;
        const std::function<void(const Int&)> extend = [&](const Int& max_residue) {
            if (static_cast<long long>(current.size()) == len) {
                lists.push_back(current);
                return;
            }
            for (Int a = max_residue; a >= 0; --a) {
                current.push_back(a);
                extend(a);
                current.pop_back();
            }
        };
        extend(p - 1);
    }
    return lists;
}

}  // namespace detail

// Streams every valid Kodaira-dimension-1 config in the region, one
// representative per fiber multiset (tame block first, then wild
// residues non-increasing), in a fixed deterministic order.
inline void enumerate_configs(const RegionBounds& bounds,
                              const std::function<void(const SurfaceConfig&)>& yield) {
    require_valid(bounds);

    std::vector<const ConfigPredicate*> excluded;
    for (const std::string& name : bounds.exclusions) {
        excluded.push_back(&exclusion_rules().at(name));
    }
    const auto is_excluded = [&excluded](const SurfaceConfig& c) {
        for (const ConfigPredicate* predicate : excluded) {
            if ((*predicate)(c)) {
                return true;
            }
        }
        return false;
    };

    const std::vector<std::vector<Int>> wild_lists =
        detail::wild_residue_lists(bounds.p, bounds.lambda_max);

    SurfaceConfig config;
    config.p = bounds.p;
    for (Int g = 0; g <= bounds.g_max; ++g) {
        config.g = g;
        for (Int chi = min_chi(g); chi <= bounds.chi_plus_t_max; ++chi) {
            config.chi = chi;
            for (Int t = 0; chi + t <= bounds.chi_plus_t_max; ++t) {
                config.t = t;
                for (Int n_tame = 0; n_tame <= bounds.lambda_max; ++n_tame) {
                    Int wild_cap = bounds.lambda_max - n_tame;
                    if (wild_cap > t) {
                        wild_cap = t;
                    }
                    for (const std::vector<Int>& wilds : wild_lists) {
                        if (Int(wilds.size()) > wild_cap) {
                            continue;
                        }
                        config.fibers.clear();
                        for (Int i = 0; i < n_tame; ++i) {
                            config.fibers.push_back(tame_fiber(bounds.p - 1));
                        }
                        for (const Int& a : wilds) {
                            config.fibers.push_back(wild_fiber(a));
                        }
                        if (!kodaira_dim_is_one(config) || is_excluded(config)) {
                            continue;
                        }
                        yield(config);
                    }
                }
            }
        }
    }
}

inline std::vector<SurfaceConfig> enumerate_configs(const RegionBounds& bounds) {
    std::vector<SurfaceConfig> configs;
    enumerate_configs(bounds, [&configs](const SurfaceConfig& c) { configs.push_back(c); });
    return configs;
}

// The six regions of the (g, chi, t) space. Exactly one applies to each
// valid config.
enum class CaseLabel { I, II_1, II_2, III_1, III_2, III_3 };

inline const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::I: return "I";
        case CaseLabel::II_1: return "II-1";
        case CaseLabel::II_2: return "II-2";
        case CaseLabel::III_1: return "III-1";
        case CaseLabel::III_2: return "III-2";
        case CaseLabel::III_3: return "III-3";
    }
    return "?";
}

inline CaseLabel classify_case(const SurfaceConfig& config) {
    require_valid(config);
    const Int ct = config.chi + config.t;
    if (config.g >= 2) {
        return CaseLabel::I;
    }
    if (config.g == 1) {
        if (ct >= 1) {
            return CaseLabel::II_1;
        }
        if (config.chi == 0 && config.t == 0) {
            return CaseLabel::II_2;
        }
        throw std::logic_error("classify_case: unreachable for a valid config (g = 1, "
                               "chi + t < 0)");
    }
    if (ct >= 3) {
        return CaseLabel::III_1;
    }
    if (ct == 2) {
        return CaseLabel::III_2;
    }
    if (ct == 1) {
        return CaseLabel::III_3;
    }
    throw std::logic_error("classify_case: unreachable for a valid config (g = 0, "
                           "chi + t <= 0)");
}

// Ceiling each per-case maximum is certified against. The p = 3 values
// are the six case conclusions; the p = 2 values come from replaying the
// same case analysis with residues <= 1 over numerical invariants. The
// II-2 worst case in characteristic 2 is the single-tame-fiber config,
// so its ceiling drops from 6 to 4 once rule "question-3-3" excludes it.
// The III-2 sub-rows are the only bounds sensitive to fiber kind.
inline std::optional<Int> case_bound(const Int& p, const std::string& label,
                                     bool question_3_3_excluded) {
    if (p == 3) {
        static const std::map<std::string, int> bounds = {
            {"I", 3},      {"II-1", 3},      {"II-2", 5},
            {"III-1", 1},  {"III-2", 3},     {"III-3", 5},
            {"III-2-tame", 2}, {"III-2-wild-only", 3},
        };
        auto it = bounds.find(label);
        return it == bounds.end() ? std::nullopt : std::optional<Int>(it->second);
    }
    static const std::map<std::string, int> bounds = {
        {"I", 3},      {"II-1", 3},      {"II-2", 6},
        {"III-1", 1},  {"III-2", 2},     {"III-3", 4},
        {"III-2-tame", 2}, {"III-2-wild-only", 2},
    };
    auto it = bounds.find(label);
    if (it == bounds.end()) {
        return std::nullopt;
    }
    if (label == "II-2" && question_3_3_excluded) {
        return Int(4);
    }
    return Int(it->second);
}

struct TailCheck {
    std::string name;
    bool pass = false;
    std::string witness;

    bool operator==(const TailCheck&) const = default;
};

namespace detail {

// Genus tail: for every g >= 2 and every valid config with that genus,
//   deg D_m >= m(2g-2+chi+t) >= 3(2g-2+min_chi(g)) >= 2g+1 for m >= 3,
// so stable thresholds beyond the genus bound never exceed 3. The middle
// quantity is linear in g with min_chi of period 3, so non-negativity of
// the margin on g = 2..7 plus a positive per-period increment proves it
// for all g >= 2.
inline TailCheck genus_tail_check() {
    TailCheck check{"genus-tail", true, ""};
    std::string margins;
    std::vector<Int> margin_at;
    for (Int g = 2; g <= 7; ++g) {
        const Int margin = 3 * (2 * g - 2 + min_chi(g)) - (2 * g + 1);
        margin_at.push_back(margin);
        if (margin < 0) {
            check.pass = false;
        }
        if (!margins.empty()) {
            margins += ",";
        }
        margins += margin.str();
    }
    std::string increments;
    for (std::size_t i = 0; i + 3 < margin_at.size(); ++i) {
        const Int increment = margin_at[i + 3] - margin_at[i];
        if (increment <= 0) {
            check.pass = false;
        }
        if (!increments.empty()) {
            increments += ",";
        }
        increments += increment.str();
    }
    check.witness = "margins(g=2..7)=[" + margins + "] period-increments=[" + increments + "]";
    return check;
}

// Legal single-fiber appends to a config: one more tame fiber, and each
// wild residue when the torsion budget allows another wild fiber.
inline std::vector<SurfaceConfig> single_appends(const SurfaceConfig& config) {
    std::vector<SurfaceConfig> variants;
    SurfaceConfig with_tame = config;
    with_tame.fibers.push_back(tame_fiber(config.p - 1));
    variants.push_back(std::move(with_tame));
    if (Int(config.wild_count()) < config.t) {
        for (Int a = 0; a <= config.p - 1; ++a) {
            SurfaceConfig with_wild = config;
            with_wild.fibers.push_back(wild_fiber(a));
            variants.push_back(std::move(with_wild));
        }
    }
    return variants;
}

// Fiber monotonicity: appending a fiber adds floor(m a / p) >= 0 to
// deg D_m for every m and leaves the target 2g+1 unchanged, so the
// success set only grows and the stable threshold cannot rise. Checked
// over the enumerated corpus; covers every lambda beyond the region cap.
inline TailCheck fiber_monotonicity_check(const std::vector<SurfaceConfig>& corpus,
                                          const ScanOptions& scan) {
    TailCheck check{"fiber-monotonicity", true, ""};
    long long appends = 0;
    Int best_drop = 0;
    std::string example;
    for (const SurfaceConfig& config : corpus) {
        const Int base = stable_threshold(config, scan).stable_m;
        for (const SurfaceConfig& variant : single_appends(config)) {
            ++appends;
            const Int grown = stable_threshold(variant, scan).stable_m;
            if (grown > base) {
                check.pass = false;
                check.witness = "stable threshold rose " + base.str() + " -> " + grown.str() +
                                " appending to " + to_string(config);
                return check;
            }
            if (base - grown > best_drop) {
                best_drop = base - grown;
                example = to_string(config) + ": " + base.str() + " -> " + grown.str();
            }
        }
    }
    check.witness = "checked " + std::to_string(appends) + " appends, none increased";
    if (!example.empty()) {
        check.witness += "; largest drop " + example;
    }
    return check;
}

// chi/t tail: raising chi or t by 1 adds m >= 1 to deg D_m for every
// m >= 1, so configs beyond the chi + t cap are dominated by ones
// inside it. Same shape of argument, applied to the linear term.
inline TailCheck chi_t_tail_check(const std::vector<SurfaceConfig>& corpus,
                                  const ScanOptions& scan) {
    TailCheck check{"chi-t-tail", true, ""};
    long long increments = 0;
    for (const SurfaceConfig& config : corpus) {
        const Int base = stable_threshold(config, scan).stable_m;
        for (int which = 0; which < 2; ++which) {
            SurfaceConfig bumped = config;
            if (which == 0) {
                bumped.chi += 1;
            } else {
                bumped.t += 1;
            }
            ++increments;
            const Int grown = stable_threshold(bumped, scan).stable_m;
            if (grown > base) {
                check.pass = false;
                check.witness = "stable threshold rose " + base.str() + " -> " + grown.str() +
                                " raising " + (which == 0 ? "chi" : "t") + " on " +
                                to_string(config);
                return check;
            }
        }
    }
    check.witness = "checked " + std::to_string(increments) + " chi/t increments, none increased";
    return check;
}

}  // namespace detail

// The three arguments that extend a finite certification region to the
// unbounded invariant space, evaluated in exact arithmetic against the
// given region's corpus.
inline std::vector<TailCheck> tail_checks(const RegionBounds& bounds,
                                          const ScanOptions& scan = {}) {
    require_valid(bounds);
    const std::vector<SurfaceConfig> corpus = enumerate_configs(bounds);
    return {
        detail::genus_tail_check(),
        detail::fiber_monotonicity_check(corpus, scan),
        detail::chi_t_tail_check(corpus, scan),
    };
}

inline std::vector<TailCheck> tail_checks(const Int& p) {
    RegionBounds bounds;
    bounds.p = p;
    return tail_checks(bounds);
}

struct CaseStats {
    std::string label;
    long long count = 0;
    std::optional<Int> max_stable;
    std::optional<Int> bound;
    bool pass = true;

    bool operator==(const CaseStats&) const = default;
};

// Result of certifying a region: the supremum of stable thresholds, the
// configs attaining it, per-case conformance against the expected
// ceilings, and the tail checks. All statements are over numerical
// invariants; whether a config is realized by an actual surface is a
// separate question.
struct CertificationReport {
    RegionBounds bounds;
    long long configs_checked = 0;
    std::optional<Int> max_stable;
    std::vector<SurfaceConfig> extremal_configs;
    std::vector<CaseStats> per_case;     // the six case rows
    std::vector<CaseStats> iii2_split;   // III-2 by fiber kind
    std::vector<TailCheck> tail_checks;
    bool pass = false;
};

inline CertificationReport certify_bound(const RegionBounds& bounds,
                                         const ScanOptions& scan = {}) {
    require_valid(bounds);

    bool question_3_3_excluded = false;
    for (const std::string& name : bounds.exclusions) {
        if (name == "question-3-3") {
            question_3_3_excluded = true;
        }
    }

    CertificationReport report;
    report.bounds = bounds;

    const std::vector<std::string> case_rows = {"I", "II-1", "II-2", "III-1", "III-2", "III-3"};
    const std::vector<std::string> split_rows = {"III-2-tame", "III-2-wild-only"};
    std::map<std::string, CaseStats> stats;
    for (const std::string& label : case_rows) {
        stats[label] = CaseStats{label, 0, std::nullopt,
                                 case_bound(bounds.p, label, question_3_3_excluded), true};
    }
    for (const std::string& label : split_rows) {
        stats[label] = CaseStats{label, 0, std::nullopt,
                                 case_bound(bounds.p, label, question_3_3_excluded), true};
    }

    auto record = [&stats](const std::string& label, const Int& stable_m) {
        CaseStats& row = stats.at(label);
        ++row.count;
        if (!row.max_stable || stable_m > *row.max_stable) {
            row.max_stable = stable_m;
        }
    };

    enumerate_configs(bounds, [&](const SurfaceConfig& config) {
        ++report.configs_checked;
        const ThresholdCertificate cert = stable_threshold(config, scan);
        const CaseLabel label = classify_case(config);
        record(to_string(label), cert.stable_m);
        if (label == CaseLabel::III_2) {
            bool has_tame = false;
            for (const FiberDatum& fiber : config.fibers) {
                if (fiber.kind == FiberKind::Tame) {
                    has_tame = true;
                }
            }
            record(has_tame ? "III-2-tame" : "III-2-wild-only", cert.stable_m);
        }
        if (!report.max_stable || cert.stable_m > *report.max_stable) {
            report.max_stable = cert.stable_m;
            report.extremal_configs.clear();
        }
        if (cert.stable_m == *report.max_stable) {
            report.extremal_configs.push_back(config);
        }
    });

    bool all_pass = true;
    auto finish = [&all_pass](CaseStats& row) {
        row.pass = !(row.count > 0 && row.bound && row.max_stable && *row.max_stable > *row.bound);
        all_pass = all_pass && row.pass;
    };
    for (const std::string& label : case_rows) {
        finish(stats.at(label));
        report.per_case.push_back(stats.at(label));
    }
    for (const std::string& label : split_rows) {
        finish(stats.at(label));
        report.iii2_split.push_back(stats.at(label));
    }

    report.tail_checks = tail_checks(bounds, scan);
    for (const TailCheck& check : report.tail_checks) {
        all_pass = all_pass && check.pass;
    }
    report.pass = all_pass;
    return report;
}

}  // namespace qe
