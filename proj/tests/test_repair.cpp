#include <doctest.h>

#include "test_helpers.hpp"
#include "loclib/repair.hpp"

using namespace loclib;
using namespace loclib::testing;

TEST_CASE("single-symbol repair on the (8,4,4) code") {
    LinearCode code = fig1b_code();
    LocalityProfile profile = locality_profile(code);

    RepairReport rep = repair_single(code, profile, 0);
    CHECK(rep.helpers == std::vector<int>{1, 2});
    CHECK(rep.symbols_downloaded == 2);
    CHECK(rep.bandwidth == Rational(2));

    // Every failed symbol is rebuilt exactly, over random codewords.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; trial++) {
        std::vector<FieldElement> y = encode(code, random_vector(code.field(), 4, rng));
        for (int i = 0; i < 8; i++) {
            RepairReport r = repair_single(code, profile, i);
            CHECK(local_repair_value(code, y, i, r.helpers) == y[i]);
        }
    }
    CHECK_THROWS_AS(repair_single(code, profile, 8), IndexOutOfRange);
}

TEST_CASE("repair downloads match the locality profile") {
    LinearCode g0 = embedded_g0();
    LocalityProfile profile = locality_profile(g0);

    long long total = 0;
    int seen_six = 0;
    for (int i = 0; i < 16; i++) {
        RepairReport r = repair_single(g0, profile, i);
        CHECK(r.symbols_downloaded == profile.loc[i]);
        total += r.symbols_downloaded;
        if (r.symbols_downloaded == 6) seen_six++;
    }
    CHECK(seen_six == 3);
    CHECK(Rational(total, 16) == profile.r_avg);  // averages to r-bar exactly
}

TEST_CASE("MDS repair needs k symbols") {
    LinearCode rs = mds_8_4();
    LocalityProfile profile = locality_profile(rs);
    for (int i = 0; i < 8; i++)
        CHECK(repair_single(rs, profile, i).symbols_downloaded == 4);
}

TEST_CASE("node failure statistics") {
    LinearCode g0 = embedded_g0();

    NodeFailureStats stats = node_failure_stats(g0, {16, 1});
    CHECK(stats.avg_symbols_per_block == Rational(31, 8));
    CHECK(stats.r_max == 6);
    CHECK(stats.blocks_per_node == Rational(16));
    CHECK(stats.bandwidth == Rational(62));  // 3.875 * 16
    CHECK(stats.per_symbol.size() == 16);

    // Bandwidth scales linearly in the node capacity.
    CHECK(node_failure_stats(g0, {32, 1}).bandwidth == Rational(124));

    RepairConfig bad{1, 2};
    CHECK_THROWS_AS(node_failure_stats(g0, bad), BadParams);
}

TEST_CASE("improvement over the r-bar = 5 baseline is 22.5%") {
    LinearCode g0 = embedded_g0();
    Rational ours = locality_profile(g0).r_avg;
    Rational gain = improvement_ratio(Rational(5), ours);
    CHECK(gain == Rational(9, 40));
    CHECK(gain.to_double() == doctest::Approx(0.225));
}

TEST_CASE("multi-erasure repair peels locally first") {
    LinearCode code = c16_10_5();
    std::mt19937_64 rng(17);
    std::vector<FieldElement> y = encode(code, random_vector(code.field(), 10, rng));
    LocalityProfile profile = locality_profile(code);

    // One erasure in each of two disjoint local groups: both peel at the
    // cost of their localities.
    std::vector<FieldElement> mangled = y;
    mangled[0] = 0;
    mangled[4] = 0;
    MultiRepairResult res = multi_erasure_repair(code, mangled, ErasurePattern({0, 4}));
    CHECK(res.codeword == y);
    CHECK(res.globally_solved.empty());
    REQUIRE(res.costs.size() == 2);
    for (auto [idx, cost] : res.costs) CHECK(cost == profile.loc[idx]);
}

TEST_CASE("erasing a whole local group falls through to the global solve") {
    LinearCode code = fig1b_code();
    std::mt19937_64 rng(23);
    std::vector<FieldElement> y = encode(code, random_vector(code.field(), 4, rng));

    std::vector<FieldElement> mangled = y;
    mangled[0] = mangled[1] = mangled[2] = 0;
    MultiRepairResult res = multi_erasure_repair(code, mangled, ErasurePattern({0, 1, 2}));
    CHECK(res.codeword == y);
    CHECK(res.peeled.empty());
    CHECK(res.globally_solved == std::vector<int>{0, 1, 2});
    for (auto [idx, cost] : res.costs) CHECK(cost == 5);  // reads the 5 survivors
}

TEST_CASE("multi-erasure repair round-trips every small pattern") {
    LinearCode code = fig1b_code();
    std::mt19937_64 rng(29);
    const int n = code.params().n, d = code.params().d;
    std::vector<FieldElement> y = encode(code, random_vector(code.field(), 4, rng));

    for (int s = 1; s <= d - 1; s++) {
        Combinations combos(n, s);
        std::vector<int> pattern;
        while (combos.next(pattern)) {
            std::vector<FieldElement> mangled = y;
            for (int e : pattern) mangled[e] = 0x5C;
            MultiRepairResult res = multi_erasure_repair(code, mangled, ErasurePattern(pattern));
            CHECK(res.codeword == y);
        }
    }

    CHECK_THROWS_AS(multi_erasure_repair(code, y, ErasurePattern({0, 1, 2, 3})),
                    TooManyErasures);
}

TEST_CASE("single erasure through the multi-path equals repair_single") {
    LinearCode code = fig1b_code();
    LocalityProfile profile = locality_profile(code);
    std::mt19937_64 rng(31);
    std::vector<FieldElement> y = encode(code, random_vector(code.field(), 4, rng));

    for (int i = 0; i < code.params().n; i++) {
        std::vector<FieldElement> mangled = y;
        mangled[i] = 0;
        MultiRepairResult res = multi_erasure_repair(code, mangled, ErasurePattern({i}));
        CHECK(res.codeword == y);
        REQUIRE(res.costs.size() == 1);
        CHECK(res.costs[0].second == repair_single(code, profile, i).symbols_downloaded);
        // A local fix never reads more than the global path would.
        CHECK(res.costs[0].second <= code.params().k);
    }
}
