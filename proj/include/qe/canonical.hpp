#pragma once

#include <stdexcept>
#include <vector>

#include "qe/invariants.hpp"

namespace qe {

// The canonical class pushed down to the base curve, reduced to numbers:
// the coefficient of a general fiber, deg(K_B - f) = 2g - 2 + chi + t,
// plus the residues a_i of the multiple fibers.
struct CanonicalClass {
    Int base_coeff;
    std::vector<Int> residues;
    Int p;
    Int g;

    bool operator==(const CanonicalClass&) const = default;
};

inline CanonicalClass canonical_data(const SurfaceConfig& config) {
    require_valid(config);
    CanonicalClass data;
    data.base_coeff = 2 * config.g - 2 + config.chi + config.t;
    data.residues.reserve(config.fibers.size());
    for (const FiberDatum& fiber : config.fibers) {
        data.residues.push_back(fiber.residue);
    }
    data.p = config.p;
    data.g = config.g;
    return data;
}

// deg D_m, the degree on the base of the pushed-down m-canonical class:
//   m(2g - 2 + chi + t) + sum_i floor(m a_i / p).
inline Int base_degree(const SurfaceConfig& config, const Int& m) {
    require_valid(config);
    if (m < 0) {
        throw std::invalid_argument("base_degree: m must be non-negative, got " + m.str());
    }
    Int degree = m * (2 * config.g - 2 + config.chi + config.t);
    for (const FiberDatum& fiber : config.fibers) {
        degree += floor_div(m * fiber.residue, config.p);
    }
    return degree;
}

// The fibration criterion: |mK| induces the fibration through the base
// once deg D_m reaches 2g + 1. Not monotone in m because of the floors.
inline bool gives_fibration(const SurfaceConfig& config, const Int& m) {
    if (m < 1) {
        throw std::invalid_argument("gives_fibration: m must be >= 1, got " + m.str());
    }
    return base_degree(config, m) >= 2 * config.g + 1;
}

// h^0 of the degree-d class D_m on the base curve, by Riemann-Roch.
// Exact whenever the degree alone determines the dimension; an interval
// otherwise. Numerical invariants cannot distinguish a principal
// degree-0 class on a genus-1 curve from a non-principal one, nor pin
// special divisors in the Clifford range on higher genus, so those two
// situations return honest bounds instead of a guess.
struct PlurigenusBounds {
    Int m;
    Int degree;
    Int lower;
    Int upper;

    bool exact() const { return lower == upper; }
    bool operator==(const PlurigenusBounds&) const = default;
};

inline PlurigenusBounds plurigenus_bounds(const SurfaceConfig& config, const Int& m) {
    require_valid(config);
    if (m < 0) {
        throw std::invalid_argument("plurigenus_bounds: m must be non-negative, got " + m.str());
    }
    const Int d = base_degree(config, m);
    const Int g = config.g;
    PlurigenusBounds bounds{m, d, 0, 0};
    if (d < 0) {
        return bounds;  // [0, 0]
    }
    if (g == 0) {
        bounds.lower = bounds.upper = d + 1;
    } else if (g == 1) {
        if (d >= 1) {
            bounds.lower = bounds.upper = d;
        } else {
            // d == 0: 1 if D_m is principal, 0 otherwise.
            bounds.lower = 0;
            bounds.upper = 1;
        }
    } else {
        if (d >= 2 * g - 1) {
            bounds.lower = bounds.upper = d - g + 1;
        } else {
            // 0 <= d <= 2g - 2: Riemann-Roch lower bound, Clifford upper.
            Int lower = d - g + 1;
            if (lower < 0) {
                lower = 0;
            }
            bounds.lower = lower;
            bounds.upper = floor_div(d, 2) + 1;
        }
    }
    return bounds;
}

}  // namespace qe
