#pragma once

// Test-only reference implementations. Everything here recomputes the
// library's results along an independent arithmetic route: rational
// comparisons and linear scans instead of integer floor division and
// early-stopping scans. Kept separate from the implementation on
// purpose; do not include library floor/ceil helpers in the math below.

#include <random>
#include <stdexcept>
#include <vector>

#include "qe/invariants.hpp"

namespace qe::testing {

// floor of a rational, found by stepping an integer past it.
inline Int slow_floor(const Rat& x) {
    Int k = 0;
    while (Rat(k) > x) {
        --k;
    }
    while (Rat(k + 1) <= x) {
        ++k;
    }
    return k;
}

inline Int slow_ceil(const Rat& x) { return -slow_floor(-x); }

// Least integer c with 3c >= 1 - g.
inline Int oracle_min_chi(const Int& g) {
    Int c = -g - 2;
    while (Rat(3 * c) < Rat(1 - g)) {
        ++c;
    }
    return c;
}

inline Int oracle_base_degree(const SurfaceConfig& config, const Int& m) {
    Int degree = m * (2 * config.g - 2 + config.chi + config.t);
    for (const FiberDatum& fiber : config.fibers) {
        degree += slow_floor(Rat(m * fiber.residue, config.p));
    }
    return degree;
}

inline bool oracle_gives_fibration(const SurfaceConfig& config, const Int& m) {
    return oracle_base_degree(config, m) >= 2 * config.g + 1;
}

inline Int oracle_first_success(const SurfaceConfig& config, long long horizon = 200) {
    for (long long m = 1; m <= horizon; ++m) {
        if (oracle_gives_fibration(config, m)) {
            return m;
        }
    }
    throw std::logic_error("oracle_first_success: no success within horizon");
}

// Stable threshold by brute force: evaluate the criterion on every
// m <= horizon and take one past the last failure. The horizon must
// leave a healthy all-success margin for the answer to be trusted.
inline Int oracle_stable_threshold(const SurfaceConfig& config, long long horizon = 200) {
    long long last_failure = 0;
    for (long long m = 1; m <= horizon; ++m) {
        if (!oracle_gives_fibration(config, m)) {
            last_failure = m;
        }
    }
    if (horizon - last_failure < 20) {
        throw std::logic_error("oracle_stable_threshold: margin too small, raise horizon");
    }
    return last_failure + 1;
}

// Uniformly random valid config over a generous box. Wild fibers are
// drawn only while the torsion budget allows them.
inline SurfaceConfig random_valid_config(std::mt19937_64& rng) {
    auto draw = [&rng](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    SurfaceConfig config;
    config.p = draw(0, 1) == 0 ? 2 : 3;
    config.g = draw(0, 6);
    const Int chi_min = min_chi(config.g);
    config.chi = chi_min + draw(0, 6);
    config.t = draw(0, 4);
    const long long fiber_count = draw(0, 6);
    Int wild_budget = config.t;
    for (long long i = 0; i < fiber_count; ++i) {
        if (wild_budget > 0 && draw(0, 1) == 1) {
            config.fibers.push_back(wild_fiber(draw(0, config.p.convert_to<long long>() - 1)));
            --wild_budget;
        } else {
            config.fibers.push_back(tame_fiber(config.p - 1));
        }
    }
    if (!validate(config).valid()) {
        throw std::logic_error("random_valid_config produced an invalid config");
    }
    return config;
}

}  // namespace qe::testing
