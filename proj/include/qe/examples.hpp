#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qe/canonical.hpp"

namespace qe {

// Bundled reference configurations.

// Rational base, chi = 1, two tame fibers, characteristic 3. Realized by
// an explicit surface; its stable threshold 5 is the characteristic-3
// maximum, and its table below shows the non-monotone success pattern.
inline SurfaceConfig example_surface_3_1() {
    SurfaceConfig config;
    config.p = 3;
    config.g = 0;
    config.chi = 1;
    config.t = 0;
    config.fibers = {tame_fiber(2), tame_fiber(2)};
    return config;
}

// Elliptic base, chi = 0, one tame fiber, characteristic 2. Whether an
// actual surface realizes these invariants is open; over numerical
// invariants the config forces the characteristic-2 maximum up to 6,
// and excluding it (rule "question-3-3") drops the maximum to 4.
inline SurfaceConfig question_3_3_config() {
    SurfaceConfig config;
    config.p = 2;
    config.g = 1;
    config.chi = 0;
    config.t = 0;
    config.fibers = {tame_fiber(1)};
    return config;
}

struct PlurigenusRecord {
    Int m;
    Int degree;
    Int h0_lower;
    Int h0_upper;
    bool gives_fibration = false;

    bool operator==(const PlurigenusRecord&) const = default;
};

// One row per m in [1, m_max], filled from the canonical-class data.
inline std::vector<PlurigenusRecord> plurigenus_table(const SurfaceConfig& config,
                                                      const Int& m_max) {
    require_valid(config);
    if (m_max < 1) {
        throw std::invalid_argument("plurigenus_table: m_max must be >= 1, got " + m_max.str());
    }
    std::vector<PlurigenusRecord> rows;
    for (Int m = 1; m <= m_max; ++m) {
        const PlurigenusBounds bounds = plurigenus_bounds(config, m);
        rows.push_back({m, bounds.degree, bounds.lower, bounds.upper,
                        gives_fibration(config, m)});
    }
    return rows;
}

inline std::string h0_to_string(const PlurigenusRecord& row) {
    if (row.h0_lower == row.h0_upper) {
        return row.h0_lower.str();
    }
    return "[" + row.h0_lower.str() + "," + row.h0_upper.str() + "]";
}

// Comma-delimited export with a header row.
inline std::string render_table_delimited(const std::vector<PlurigenusRecord>& rows) {
    std::string out = "m,degree,h0_lower,h0_upper,gives_fibration\n";
    for (const PlurigenusRecord& row : rows) {
        out += row.m.str() + "," + row.degree.str() + "," + row.h0_lower.str() + "," +
               row.h0_upper.str() + "," + (row.gives_fibration ? "true" : "false") + "\n";
    }
    return out;
}

// Aligned table for documentation and terminal output.
inline std::string render_table_text(const std::vector<PlurigenusRecord>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"m", "deg D_m", "h0(mK)", "fibration"});
    for (const PlurigenusRecord& row : rows) {
        cells.push_back({row.m.str(), row.degree.str(), h0_to_string(row),
                         row.gives_fibration ? "yes" : "no"});
    }
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) {
                out += std::string(widths[i] - row[i].size() + 2, ' ');
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace qe
