#pragma once

#include <stdexcept>
#include <vector>

#include "qe/canonical.hpp"

namespace qe {

// Amount by which deg D_m grows when m grows by p:
//   p(2g - 2 + chi + t) + sum(a_i),
// since floor((m+p)a/p) = floor(ma/p) + a. This is also p times the
// Kodaira criterion value, so it is >= 1 exactly when the Kodaira
// dimension is 1.
inline Int step_increment(const SurfaceConfig& config) {
    require_valid(config);
    return config.p * (2 * config.g - 2 + config.chi + config.t) + config.residue_sum();
}

inline void require_kodaira_dim_one(const SurfaceConfig& config) {
    const Rat value = kodaira_criterion_value(config);
    if (!(value > 0)) {
        throw std::domain_error(
            "thresholds are defined only for Kodaira dimension 1: criterion value "
            "2g-2+chi+t+sum(a_i)/p = " +
            value.str() + " is not > 0");
    }
}

struct ScanOptions {
    // Defensive bound on the threshold scan. Termination is guaranteed
    // by step_increment >= 1 under the Kodaira precondition, so the cap
    // should never bind; it can be raised if ever needed.
    long long scan_cap = 10000;
};

// Evidence for a stable threshold: the least M such that the fibration
// criterion holds for every m >= M, together with everything the scan
// saw on the way.
struct ThresholdCertificate {
    SurfaceConfig config;
    Int first_success;        // least m >= 1 satisfying the criterion
    Int stable_m;             // least M with all m >= M satisfying it
    Int step;                 // step_increment of the config
    std::vector<Int> failures;  // every failing m; all below stable_m
    std::vector<Int> window;    // p consecutive successes from stable_m

    bool operator==(const ThresholdCertificate&) const = default;
};

// Least m >= 1 satisfying the fibration criterion. May precede later
// failures; see stable_threshold for the permanent version.
inline Int first_success(const SurfaceConfig& config, const ScanOptions& options = {}) {
    require_valid(config);
    require_kodaira_dim_one(config);
    for (long long m = 1; m <= options.scan_cap; ++m) {
        if (gives_fibration(config, m)) {
            return m;
        }
    }
    throw std::logic_error("first_success: scan cap exceeded; unreachable when the "
                           "Kodaira criterion holds");
}

// Scans m = 1, 2, ... and stops at the first run of p consecutive
// successes. Sound: deg D_{m+p} = deg D_m + step with step >= 1, so a
// success at m is a success at m + p, and p consecutive successes cover
// every larger m. Minimal: the scan has just witnessed stable_m - 1
// failing (unless stable_m = 1).
inline ThresholdCertificate stable_threshold(const SurfaceConfig& config,
                                             const ScanOptions& options = {}) {
    require_valid(config);
    require_kodaira_dim_one(config);

    ThresholdCertificate cert;
    cert.config = config;
    cert.step = step_increment(config);
    cert.first_success = 0;

    const long long p = config.p.convert_to<long long>();
    long long run = 0;
    for (long long m = 1; m <= options.scan_cap; ++m) {
        if (gives_fibration(config, m)) {
            if (cert.first_success == 0) {
                cert.first_success = m;
            }
            if (++run == p) {
                cert.stable_m = m - p + 1;
                for (long long w = m - p + 1; w <= m; ++w) {
                    cert.window.push_back(w);
                }
                return cert;
            }
        } else {
            cert.failures.push_back(m);
            run = 0;
        }
    }
    throw std::logic_error("stable_threshold: scan cap exceeded; unreachable when the "
                           "Kodaira criterion holds");
}

}  // namespace qe
