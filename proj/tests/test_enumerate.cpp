#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "qe/config_io.hpp"
#include "qe/enumerate.hpp"
#include "qe/examples.hpp"
#include "oracles.hpp"

using namespace qe;

namespace {

RegionBounds region(int p, int g_max, int chi_t_max, int lambda_max,
                    std::vector<std::string> exclusions = {}) {
    RegionBounds bounds;
    bounds.p = p;
    bounds.g_max = g_max;
    bounds.chi_plus_t_max = chi_t_max;
    bounds.lambda_max = lambda_max;
    bounds.exclusions = std::move(exclusions);
    return bounds;
}

}  // namespace

TEST_CASE("tiny regions enumerate exactly the known configs", "[enumerate]") {
    SECTION("char 3, chi+t <= 1") {
        const auto configs = enumerate_configs(region(3, 0, 1, 2));
        REQUIRE(configs.size() == 1);
        CHECK(configs[0] == example_surface_3_1());
    }
    SECTION("empty region") {
        CHECK(enumerate_configs(region(3, 0, 0, 0)).empty());
    }
    SECTION("char 2, genus 1, chi+t = 0") {
        const auto configs = enumerate_configs(region(2, 1, 0, 1));
        REQUIRE(configs.size() == 1);
        CHECK(configs[0] == question_3_3_config());
    }
}

TEST_CASE("enumerated configs are valid, kappa = 1, canonical and duplicate-free",
          "[enumerate]") {
    const auto bounds = region(3, 2, 4, 4);
    const auto configs = enumerate_configs(bounds);
    REQUIRE_FALSE(configs.empty());
    std::set<std::string> seen;
    for (const SurfaceConfig& config : configs) {
        REQUIRE(validate(config).valid());
        REQUIRE(kodaira_dim_is_one(config));
        REQUIRE(config.g <= bounds.g_max);
        REQUIRE(config.chi + config.t <= bounds.chi_plus_t_max);
        REQUIRE(Int(config.fibers.size()) <= bounds.lambda_max);
        // Canonical fiber order: tame block first, then wilds with
        // non-increasing residues.
        bool in_wild_block = false;
        for (std::size_t i = 0; i < config.fibers.size(); ++i) {
            if (config.fibers[i].kind == FiberKind::Wild) {
                in_wild_block = true;
                if (i > 0 && config.fibers[i - 1].kind == FiberKind::Wild) {
                    REQUIRE(config.fibers[i - 1].residue >= config.fibers[i].residue);
                }
            } else {
                REQUIRE_FALSE(in_wild_block);
            }
        }
        REQUIRE(seen.insert(to_string(config)).second);
    }
}

TEST_CASE("enumeration order is deterministic", "[enumerate]") {
    const auto bounds = region(2, 2, 3, 3);
    CHECK(enumerate_configs(bounds) == enumerate_configs(bounds));
}

TEST_CASE("exclusion rules drop exactly the named configs", "[enumerate]") {
    const auto all = enumerate_configs(region(2, 4, 6, 6));
    const auto filtered = enumerate_configs(region(2, 4, 6, 6, {"question-3-3"}));
    CHECK(all.size() == filtered.size() + 1);
    CHECK(std::find(all.begin(), all.end(), question_3_3_config()) != all.end());
    CHECK(std::find(filtered.begin(), filtered.end(), question_3_3_config()) ==
          filtered.end());

    RegionBounds bad = region(2, 1, 1, 1, {"no-such-rule"});
    CHECK_THROWS_AS(enumerate_configs(bad), std::invalid_argument);
}

TEST_CASE("classify_case fixed values", "[enumerate]") {
    CHECK(classify_case(example_surface_3_1()) == CaseLabel::III_3);

    SurfaceConfig genus_two;
    genus_two.p = 3;
    genus_two.g = 2;
    CHECK(classify_case(genus_two) == CaseLabel::I);

    SurfaceConfig iii2;
    iii2.p = 3;
    iii2.g = 0;
    iii2.chi = 1;
    iii2.t = 1;
    iii2.fibers = {wild_fiber(1)};
    CHECK(classify_case(iii2) == CaseLabel::III_2);

    CHECK(classify_case(question_3_3_config()) == CaseLabel::II_2);
}

TEST_CASE("cases are exhaustive and mutually exclusive over the corpus", "[enumerate]") {
    for (int p : {2, 3}) {
        long long total = 0;
        std::map<CaseLabel, long long> counts;
        enumerate_configs(region(p, 4, 6, 6), [&](const SurfaceConfig& config) {
            ++total;
            ++counts[classify_case(config)];
            // Cross-check the predicate directly.
            int matches = 0;
            if (config.g >= 2) ++matches;
            if (config.g == 1 && config.chi + config.t >= 1) ++matches;
            if (config.g == 1 && config.chi == 0 && config.t == 0) ++matches;
            if (config.g == 0 && config.chi + config.t >= 3) ++matches;
            if (config.g == 0 && config.chi + config.t == 2) ++matches;
            if (config.g == 0 && config.chi + config.t == 1) ++matches;
            REQUIRE(matches == 1);
        });
        long long classified = 0;
        for (const auto& [label, count] : counts) {
            classified += count;
        }
        REQUIRE(total == classified);
        REQUIRE(counts.size() == 6);  // every case populated in the default region
    }
}

TEST_CASE("tail checks pass for both characteristics", "[enumerate]") {
    for (int p : {2, 3}) {
        const auto checks = tail_checks(Int(p));
        REQUIRE(checks.size() == 3);
        CHECK(checks[0].name == "genus-tail");
        CHECK(checks[1].name == "fiber-monotonicity");
        CHECK(checks[2].name == "chi-t-tail");
        for (const TailCheck& check : checks) {
            INFO(check.name << ": " << check.witness);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("genus tail margin at g = 2 is exactly 1", "[enumerate]") {
    // 3(2g - 2 + min_chi(g)) - (2g + 1) at g = 2: 3*2 - 5.
    const auto checks = tail_checks(Int(3));
    CHECK(checks[0].witness.find("margins(g=2..7)=[1,5,6,10,14,15]") != std::string::npos);
    CHECK(checks[0].witness.find("period-increments=[9,9,9]") != std::string::npos);
}

TEST_CASE("certify the char-3 default region", "[enumerate]") {
    const auto report = certify_bound(region(3, 4, 6, 6));
    REQUIRE(report.max_stable.has_value());
    CHECK(*report.max_stable == 5);
    CHECK(report.pass);

    std::vector<SurfaceConfig> expected;
    expected.push_back(example_surface_3_1());
    SurfaceConfig genus_one;
    genus_one.p = 3;
    genus_one.g = 1;
    genus_one.fibers = {tame_fiber(2)};
    expected.push_back(genus_one);
    REQUIRE(report.extremal_configs.size() == 2);
    for (const auto& config : expected) {
        CHECK(std::find(report.extremal_configs.begin(), report.extremal_configs.end(),
                        config) != report.extremal_configs.end());
    }

    for (const CaseStats& stats : report.per_case) {
        REQUIRE(stats.count > 0);
        REQUIRE(stats.bound.has_value());
        REQUIRE(stats.max_stable.has_value());
        CHECK(*stats.max_stable <= *stats.bound);
    }
}

TEST_CASE("certify the char-2 region with and without the exclusion", "[enumerate]") {
    const auto unconditional = certify_bound(region(2, 4, 6, 6));
    REQUIRE(unconditional.max_stable.has_value());
    CHECK(*unconditional.max_stable == 6);
    REQUIRE(unconditional.extremal_configs.size() == 1);
    CHECK(unconditional.extremal_configs[0] == question_3_3_config());

    const auto conditional = certify_bound(region(2, 4, 6, 6, {"question-3-3"}));
    REQUIRE(conditional.max_stable.has_value());
    CHECK(*conditional.max_stable == 4);
    SurfaceConfig three_tame;
    three_tame.p = 2;
    three_tame.g = 0;
    three_tame.chi = 1;
    three_tame.fibers = {tame_fiber(1), tame_fiber(1), tame_fiber(1)};
    CHECK(std::find(conditional.extremal_configs.begin(), conditional.extremal_configs.end(),
                    three_tame) != conditional.extremal_configs.end());
    CHECK(conditional.pass);
}

TEST_CASE("certification reports are byte-stable", "[enumerate]") {
    const auto bounds = region(3, 2, 3, 3);
    const auto first = to_json(certify_bound(bounds)).dump();
    const auto second = to_json(certify_bound(bounds)).dump();
    CHECK(first == second);
}

TEST_CASE("region bounds are validated", "[enumerate]") {
    RegionBounds bad;
    bad.p = 5;
    CHECK_THROWS_AS(enumerate_configs(bad), std::invalid_argument);
    RegionBounds negative;
    negative.p = 3;
    negative.g_max = -1;
    CHECK_THROWS_AS(enumerate_configs(negative), std::invalid_argument);
}
