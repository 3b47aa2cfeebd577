#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qe/arith.hpp"

namespace qe {

enum class FiberKind { Tame, Wild };

inline const char* to_string(FiberKind kind) {
    return kind == FiberKind::Tame ? "tame" : "wild";
}

// One multiple fiber of the fibration. Every multiple fiber has
// multiplicity p, so only the kind and the canonical residue are kept.
// A tame fiber always carries residue p - 1; a wild fiber may carry any
// residue in [0, p - 1].
struct FiberDatum {
    FiberKind kind = FiberKind::Tame;
    Int residue = 0;

    bool operator==(const FiberDatum&) const = default;
};

inline FiberDatum tame_fiber(Int residue) {
    return {FiberKind::Tame, std::move(residue)};
}

inline FiberDatum wild_fiber(Int residue) {
    return {FiberKind::Wild, std::move(residue)};
}

// Numerical invariants of a quasi-elliptic fibration: the characteristic
// p (2 or 3), the genus g of the base curve, chi of the structure sheaf,
// the torsion length t of R^1 of the pushforward, and the multiple-fiber
// data. The surface itself is represented only through these numbers.
struct SurfaceConfig {
    Int p = 3;
    Int g = 0;
    Int chi = 0;
    Int t = 0;
    std::vector<FiberDatum> fibers;

    bool operator==(const SurfaceConfig&) const = default;

    Int residue_sum() const {
        Int sum = 0;
        for (const FiberDatum& fiber : fibers) {
            sum += fiber.residue;
        }
        return sum;
    }

    std::size_t wild_count() const {
        std::size_t count = 0;
        for (const FiberDatum& fiber : fibers) {
            if (fiber.kind == FiberKind::Wild) {
                ++count;
            }
        }
        return count;
    }
};

// Compact one-line form, e.g. "p=3 g=0 chi=1 t=0 fibers=[T2,T2]".
inline std::string to_string(const SurfaceConfig& config) {
    std::string out = "p=" + config.p.str() + " g=" + config.g.str() +
                      " chi=" + config.chi.str() + " t=" + config.t.str() + " fibers=[";
    for (std::size_t i = 0; i < config.fibers.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += (config.fibers[i].kind == FiberKind::Tame ? "T" : "W");
        out += config.fibers[i].residue.str();
    }
    out += "]";
    return out;
}

struct Violation {
    std::string rule;
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

struct ValidationOptions {
    // When set, a positive torsion length must be witnessed by at least
    // one wild fiber. The bound #wild <= t is enforced unconditionally;
    // its converse is optional and off by default.
    bool strict = false;
};

// Least chi an invariant set with base genus g can have. The rational
// lower bound is (1 - g)/3; chi is an integer, so the ceiling applies.
inline Int min_chi(const Int& g) {
    if (g < 0) {
        throw std::invalid_argument("min_chi: genus must be non-negative, got " + g.str());
    }
    return ceil_div(1 - g, 3);
}

// Checks every constraint on the invariant set. Nothing is thrown: each
// violated rule contributes one entry with a stable rule identifier.
inline ValidationReport validate(const SurfaceConfig& config,
                                 const ValidationOptions& options = {}) {
    ValidationReport report;
    auto flag = [&report](std::string rule, std::string message) {
        report.violations.push_back({std::move(rule), std::move(message)});
    };

    const bool p_ok = config.p == 2 || config.p == 3;
    if (!p_ok) {
        flag("p-invalid", "characteristic p must be 2 or 3, got " + config.p.str());
    }
    if (config.g < 0) {
        flag("g-negative", "genus g must be non-negative, got " + config.g.str());
    }
    if (config.t < 0) {
        flag("t-negative", "torsion length t must be non-negative, got " + config.t.str());
    }

    if (config.g >= 0) {
        const Int bound = min_chi(config.g);
        if (config.chi < bound) {
            flag("chi-below-min", "chi = " + config.chi.str() + " is below the minimum " +
                                      bound.str() + " for genus " + config.g.str());
        }
    }

    for (std::size_t i = 0; i < config.fibers.size(); ++i) {
        const FiberDatum& fiber = config.fibers[i];
        const std::string where = "fiber " + std::to_string(i);
        if (fiber.residue < 0 || (p_ok && fiber.residue > config.p - 1)) {
            flag("residue-out-of-range",
                 where + " has residue " + fiber.residue.str() + " outside [0, p-1]");
        } else if (p_ok && fiber.kind == FiberKind::Tame && fiber.residue != config.p - 1) {
            flag("tame-residue-mismatch",
                 where + " is tame, so its residue must be p-1 = " + Int(config.p - 1).str() +
                     ", got " + fiber.residue.str());
        }
    }

    if (config.t >= 0 && Int(config.wild_count()) > config.t) {
        flag("wild-count-exceeds-t", "wild fiber count " + std::to_string(config.wild_count()) +
                                         " exceeds torsion length t = " + config.t.str());
    }

    if (options.strict && config.t > 0 && config.wild_count() == 0) {
        flag("torsion-without-wild",
             "strict mode: t = " + config.t.str() + " > 0 but no wild fiber is present");
    }

    return report;
}

// Thrown by operations whose precondition is a valid config.
struct InvalidConfigError : std::invalid_argument {
    explicit InvalidConfigError(const ValidationReport& report)
        : std::invalid_argument(join_messages(report)) {}

    static std::string join_messages(const ValidationReport& report) {
        std::string text = "invalid config:";
        for (const Violation& violation : report.violations) {
            text += " [" + violation.rule + "] " + violation.message + ";";
        }
        return text;
    }
};

inline void require_valid(const SurfaceConfig& config) {
    ValidationReport report = validate(config);
    if (!report.valid()) {
        throw InvalidConfigError(report);
    }
}

// Exact value of the Kodaira criterion's left-hand side,
//   2g - 2 + chi + t + sum(a_i)/p.
// The Kodaira dimension is 1 exactly when this is positive.
inline Rat kodaira_criterion_value(const SurfaceConfig& config) {
    require_valid(config);
    return Rat(2 * config.g - 2 + config.chi + config.t) +
           Rat(config.residue_sum(), config.p);
}

inline bool kodaira_dim_is_one(const SurfaceConfig& config) {
    return kodaira_criterion_value(config) > 0;
}

}  // namespace qe
