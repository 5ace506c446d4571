#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "grm/oracle.hpp"

using grm::CheckStatus;
using grm::CodeKind;
using grm::GridPoint;
using Counts = std::map<std::int64_t, std::int64_t>;

TEST_CASE("affine spectra match frozen enumerations") {
    REQUIRE(grm::enum_spectrum({2, 2, 1, CodeKind::affine}).counts ==
            Counts{{0, 1}, {2, 6}, {4, 1}});
    REQUIRE(grm::enum_spectrum({2, 3, 2, CodeKind::affine}).counts ==
            Counts{{0, 1}, {2, 28}, {4, 70}, {6, 28}, {8, 1}});
    REQUIRE(grm::enum_spectrum({2, 4, 2, CodeKind::affine}).counts ==
            Counts{{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}});
    REQUIRE(grm::enum_spectrum({3, 2, 2, CodeKind::affine}).counts ==
            Counts{{0, 1}, {3, 24}, {4, 108}, {5, 108}, {6, 192}, {7, 216}, {8, 54}, {9, 26}});
}

TEST_CASE("larger affine spectra: spot counts and weight ranks") {
    struct Head {
        GridPoint gp;
        Counts spots;
        std::int64_t words;
    };
    Head heads[] = {
        {{3, 2, 3, CodeKind::affine},
         {{2, 72}, {3, 168}, {4, 756}, {5, 1260}, {6, 1848}},
         6561},
        {{4, 2, 2, CodeKind::affine}, {{8, 90}, {9, 480}, {11, 864}, {12, 840}, {13, 1440}}, 4096},
        {{4, 2, 3, CodeKind::affine},
         {{4, 60}, {6, 1920}, {7, 6720}, {8, 17910}, {9, 57600}},
         1048576},
        {{5, 2, 2, CodeKind::affine},
         {{15, 240}, {16, 1500}, {19, 4000}, {20, 2640}, {21, 6000}},
         15625},
    };
    for (const auto& h : heads) {
        CAPTURE(h.gp.q, h.gp.n, h.gp.d);
        grm::WeightDistribution dist = grm::enum_spectrum(h.gp, grm::default_enum_budget(), 3);
        std::int64_t total = 0;
        for (const auto& [w, c] : dist.counts) total += c;
        REQUIRE(total == h.words);
        for (const auto& [w, c] : h.spots) REQUIRE(dist.counts.at(w) == c);
        REQUIRE(grm::kth_weight(dist, 1) == grm::min_distance_affine(h.gp.q, h.gp.n, h.gp.d));
        REQUIRE(grm::kth_weight(dist, 2) == grm::second_weight_affine(h.gp.q, h.gp.n, h.gp.d));
    }
}

TEST_CASE("projective spectra match frozen enumerations") {
    REQUIRE(grm::enum_spectrum({2, 1, 1, CodeKind::projective}).counts ==
            Counts{{0, 1}, {2, 3}});
    REQUIRE(grm::enum_spectrum({2, 2, 2, CodeKind::projective}).counts ==
            Counts{{0, 1}, {2, 21}, {4, 35}, {6, 7}});
    REQUIRE(grm::enum_spectrum({2, 2, 3, CodeKind::projective}).counts ==
            Counts{{0, 1},
                   {1, 7},
                   {2, 21},
                   {3, 35},
                   {4, 35},
                   {5, 21},
                   {6, 7},
                   {7, 1}});
    REQUIRE(grm::enum_spectrum({3, 1, 2, CodeKind::projective}).counts ==
            Counts{{0, 1}, {2, 12}, {3, 8}, {4, 6}});
    REQUIRE(grm::enum_spectrum({3, 2, 2, CodeKind::projective}).counts ==
            Counts{{0, 1}, {6, 156}, {9, 494}, {12, 78}});
    REQUIRE(grm::enum_spectrum({4, 1, 2, CodeKind::projective}).counts ==
            Counts{{0, 1}, {3, 30}, {4, 15}, {5, 18}});
    REQUIRE(grm::enum_spectrum({4, 1, 3, CodeKind::projective}).counts ==
            Counts{{0, 1}, {2, 30}, {3, 60}, {4, 105}, {5, 60}});
}

TEST_CASE("worker count does not change the spectrum") {
    GridPoint gp{3, 2, 3, CodeKind::affine};
    grm::WeightDistribution base = grm::enum_spectrum(gp);
    for (std::uint32_t w : {2u, 3u, 5u})
        REQUIRE(grm::enum_spectrum(gp, grm::default_enum_budget(), w).counts == base.counts);

    GridPoint pp{2, 2, 2, CodeKind::projective};
    REQUIRE(grm::enum_spectrum(pp, grm::default_enum_budget(), 4).counts ==
            grm::enum_spectrum(pp).counts);
}

TEST_CASE("evaluation matrix rank agrees with the dimension formulas") {
    REQUIRE(grm::dimension_rank_oracle({2, 3, 2, CodeKind::affine}) == 7);
    REQUIRE(grm::dimension_rank_oracle({3, 2, 3, CodeKind::affine}) == 8);
    REQUIRE(grm::dimension_rank_oracle({2, 2, 2, CodeKind::projective}) == 6);
    REQUIRE(grm::dimension_rank_oracle({4, 1, 2, CodeKind::projective}) == 3);
}

TEST_CASE("enumeration budget") {
    GridPoint gp{5, 2, 2, CodeKind::affine};
    REQUIRE_THROWS_WITH(grm::enum_spectrum(gp, 1000),
                        Catch::Matchers::ContainsSubstring("390625"));
    // env override drives the default budget; malformed values are rejected
    setenv("GRM_ENUM_BUDGET", "1234", 1);
    REQUIRE(grm::default_enum_budget() == 1234);
    setenv("GRM_ENUM_BUDGET", "banana", 1);
    REQUIRE_THROWS_WITH(grm::default_enum_budget(),
                        "GRM_ENUM_BUDGET must be a positive integer");
    setenv("GRM_ENUM_BUDGET", "-5", 1);
    REQUIRE_THROWS_WITH(grm::default_enum_budget(),
                        "GRM_ENUM_BUDGET must be a positive integer");
    unsetenv("GRM_ENUM_BUDGET");
    REQUIRE(grm::default_enum_budget() == 10000000000LL);
}

namespace {

std::map<std::string, int> flag_histogram(const grm::VerificationReport& rep) {
    std::map<std::string, int> out;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::flagged) ++out[c.flag];
    return out;
}

}  // namespace

TEST_CASE("verification suites pass on their default grids") {
    struct Expect {
        std::string suite;
        std::size_t checks;
        std::map<std::string, int> flags;
    };
    Expect table[] = {
        {"min-distance", 8, {}},
        {"second-weight", 8, {}},
        {"delsarte", 3, {}},
        {"lemma-mini", 5, {}},
        {"mlem-norm", 15, {}},
        {"nai", 7, {{grm::flag_nai_q2_boundary, 1}}},
        {"proj-min", 14, {}},
        {"proj-second", 7, {}},
        {"delta", 538, {{grm::flag_case_table_d2, 21}, {grm::flag_delta_family_q2, 2}}},
        {"st-configs", 72, {{grm::flag_nat_display, 12}, {grm::flag_s_chain_d3, 6}}},
        {"w2-crosscheck", 282, {}},
        {"dimension", 15, {}},
    };
    for (const auto& e : table) {
        CAPTURE(e.suite);
        grm::VerificationReport rep = grm::run_suite(e.suite, {}, grm::default_enum_budget(), 3);
        REQUIRE(rep.suite == e.suite);
        REQUIRE(rep.checks.size() == e.checks);
        REQUIRE(rep.ok());
        REQUIRE(flag_histogram(rep) == e.flags);
    }
}

TEST_CASE("suites accept explicit grids") {
    grm::VerificationReport rep = grm::run_suite("min-distance", {{2, 2, 1, CodeKind::affine}});
    REQUIRE(rep.checks.size() == 1);
    REQUIRE(rep.checks[0].name == "affine(2,2,1) min weight");
    REQUIRE(rep.ok());

    grm::VerificationReport drep =
        grm::run_suite("delta", {{2, 2, 2, CodeKind::affine}, {4, 2, 3, CodeKind::affine}});
    REQUIRE(drep.checks.size() == 4);
    REQUIRE(flag_histogram(drep) == std::map<std::string, int>{{grm::flag_case_table_d2, 1}});
}

TEST_CASE("suite dispatch errors") {
    REQUIRE_THROWS_AS(grm::run_suite("nope"), std::invalid_argument);
    REQUIRE_THROWS_AS(grm::run_suite("mlem-norm", {{2, 2, 1, CodeKind::affine}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(grm::run_suite("min-distance", {{2, 2, 2, CodeKind::projective}}),
                      std::invalid_argument);
    REQUIRE(grm::suite_names().size() == 12);
}
