#include <doctest.h>

#include "test_helpers.hpp"

using namespace loclib;
using namespace loclib::testing;

TEST_CASE("per-symbol locality of the proposed (8,4,4) code") {
    LinearCode code = fig1b_code();
    for (int i = 0; i < 6; i++) CHECK(symbol_locality(code, i) == 2);
    CHECK(symbol_locality(code, 6) == 3);
    CHECK(symbol_locality(code, 7) == 3);

    LocalityProfile p = locality_profile(code);
    CHECK(p.r_max == 3);
    CHECK(p.r_avg == Rational(9, 4));
}

TEST_CASE("MDS codes have locality k everywhere") {
    LinearCode rs = mds_8_4();
    LocalityProfile p = locality_profile(rs);
    for (int l : p.loc) CHECK(l == 4);
    CHECK(p.r_avg == Rational(4));
}

TEST_CASE("locality profile of the embedded (16,10,5) code") {
    LinearCode code = embedded_g0();
    LocalityProfile p = locality_profile(code);
    std::map<int, int> histogram;
    for (int l : p.loc) histogram[l]++;
    std::map<int, int> expected{{3, 8}, {4, 5}, {6, 3}};
    CHECK(histogram == expected);
    CHECK(p.r_avg == Rational(62, 16));
    CHECK(p.r_max == 6);
}

TEST_CASE("greedy local groups on the (8,4,4) code") {
    LinearCode code = fig1b_code();
    LocalGroupPartition part = build_local_groups(code);
    REQUIRE(part.group_count() == 3);
    CHECK(part.groups[0] == std::vector<int>{0, 1, 2});
    CHECK(part.groups[1] == std::vector<int>{3, 4, 5});
    CHECK(part.groups[2] == std::vector<int>{6, 7});  // residual of the overlap group
    CHECK(part.localities == std::vector<int>{2, 2, 3});
}

TEST_CASE("greedy local groups on a 16-VN mixed graph") {
    TannerGraph graph = wide_mixed_graph();
    LinearCode code = realize_tanner(graph, {16, 10, 5}, {gf256(), 5, 400});

    LocalGroupPartition part = build_local_groups(code);
    REQUIRE(part.group_count() == 4);
    CHECK(part.groups[0].size() == 4);
    CHECK(part.groups[1].size() == 5);
    CHECK(part.groups[2].size() == 5);
    CHECK(part.groups[3].size() == 2);
    CHECK(part.localities == std::vector<int>{3, 4, 4, 6});

    LocalityProfile p = locality_profile(code);
    CHECK(p.r_avg == Rational(4));
    CHECK(p.r_max == 6);
}

TEST_CASE("single-parity code forms one big group") {
    LinearCode code = single_parity_code(6);
    LocalGroupPartition part = build_local_groups(code);
    REQUIRE(part.group_count() == 1);
    CHECK(part.groups[0].size() == 6);
    CHECK(part.localities[0] == 5);
}

TEST_CASE("partition invariants on random codes") {
    FieldSpec f = gf16();
    std::mt19937_64 rng(61);
    for (int t = 0; t < 12; t++) {
        int n = 6 + static_cast<int>(rng() % 5);
        int k = 2 + static_cast<int>(rng() % (n - 3));
        LinearCode code = random_sparse_code(f, n, k, rng);
        LocalGroupPartition part = build_local_groups(code);

        CHECK(part.group_count() <= n - k);
        std::vector<bool> seen(n, false);
        for (const auto& g : part.groups)
            for (int v : g) {
                CHECK(!seen[v]);
                seen[v] = true;
            }
        for (int v = 0; v < n; v++) CHECK(seen[v]);
        for (int j = 1; j < part.group_count(); j++)
            CHECK(part.localities[j - 1] <= part.localities[j]);
    }
}

TEST_CASE("oracle consistency: the found repair set is minimal") {
    LinearCode code = fig1b_code();
    const FieldMatrix& h = code.parity_check();
    for (int i = 0; i < code.params().n; i++) {
        std::vector<int> witness = min_repair_set(h, code.params().k, i);
        CHECK(helper_set_exists(h, i, witness));
        // No set one element smaller works.
        std::vector<int> candidates;
        for (int j = 0; j < code.params().n; j++)
            if (j != i) candidates.push_back(j);
        int t = static_cast<int>(witness.size()) - 1;
        Combinations combos(static_cast<int>(candidates.size()), t);
        std::vector<int> picks;
        while (combos.next(picks)) {
            std::vector<int> helpers(t);
            for (int j = 0; j < t; j++) helpers[j] = candidates[picks[j]];
            CHECK(!helper_set_exists(h, i, helpers));
        }
    }
}

TEST_CASE("locality Tanner graph validation") {
    ConstructionPlan plan = plan_class3(16, 10, 5);
    LinearCode code = realize(plan, {gf256(), 11, 400});
    TannerGraph graph = plan_to_tanner(plan);

    CHECK(validate_locality_tanner(graph, code).ok);

    // Omitting a VN from every local check breaks condition (a).
    TannerGraph missing = graph;
    for (TannerCheck& c : missing.checks) {
        if (!c.local) continue;
        c.support.erase(std::remove(c.support.begin(), c.support.end(), 0), c.support.end());
    }
    ValidationResult res = validate_locality_tanner(missing, code);
    CHECK(!res.ok);
    CHECK(!res.diagnostics.empty());

    // Duplicating a local check breaks independence.
    TannerGraph dup = graph;
    dup.checks[1] = dup.checks[0];
    CHECK(!validate_locality_tanner(dup, code).ok);

    TannerGraph wrong_n = graph;
    wrong_n.n = 15;
    CHECK_THROWS_AS(validate_locality_tanner(wrong_n, code), Error);
}

TEST_CASE("coverage certificate") {
    // (8,4,4): J = 2, every pair of local checks covers >= 6 VNs.
    TannerGraph fig1b = plan_to_tanner(plan_class3(8, 4, 4));
    CHECK(coverage_check(fig1b, 4, 4).ok);

    // Class-2 (13,5,8) layout: J = 2, every pair covers >= 7.
    TannerGraph c2 = plan_to_tanner(plan_class2(13, 5, 8));
    CHECK(coverage_check(c2, 5, 8).ok);

    // Hypothesis-satisfying violation: two overlapping small groups leave
    // the pair coverage at 4 < J + k = 6.
    TannerGraph bad;
    bad.n = 8;
    bad.checks.push_back({{0, 1, 2}, true});
    bad.checks.push_back({{1, 2, 3}, true});
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
    bad.checks.push_back({all, false});
    bad.checks.push_back({all, false});
    CoverageResult res = coverage_check(bad, 4, 4);
    CHECK(!res.ok);
    CHECK(res.witness == std::vector<int>{0, 1});
}

TEST_CASE("coverage hypotheses violations fall back to the full sweep") {
    // Identical local groups: no private VN, so the shortcut refuses.
    TannerGraph twin;
    twin.n = 8;
    twin.checks.push_back({{0, 1, 2}, true});
    twin.checks.push_back({{0, 1, 2}, true});
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
    twin.checks.push_back({all, false});
    twin.checks.push_back({all, false});
    CHECK_THROWS_AS(coverage_check(twin, 4, 4), HypothesisViolated);

    CoverageResult res = coverage_sweep(twin, 4, 4);
    CHECK(!res.ok);
    CHECK(res.witness == std::vector<int>{0, 1});

    // A partial global check also violates the hypotheses.
    TannerGraph partial = plan_to_tanner(plan_class3(8, 4, 4));
    partial.checks.back().support.pop_back();
    CHECK_THROWS_AS(coverage_check(partial, 4, 4), HypothesisViolated);

    // The full sweep accepts the honest (8,4,4) layout.
    CHECK(coverage_sweep(plan_to_tanner(plan_class3(8, 4, 4)), 4, 4).ok);
}

TEST_CASE("coverage violation forces a distance drop") {
    // Remove a private VN from one group of the (8,4,4) layout so checks
    // {0, 2} cover only 5 VNs; no coefficient choice can then reach d = 4.
    ConstructionPlan plan = plan_class3(8, 4, 4);
    TannerGraph graph = plan_to_tanner(plan);
    auto& grp = graph.checks[0].support;  // {0,1,2} -> {0,2}
    grp.erase(grp.begin() + 1);

    for (std::uint64_t seed = 1; seed <= 5; seed++) {
        std::mt19937_64 rng(seed);
        FieldMatrix h = random_parity_check(graph, gf256(), rng);
        if (rank(h) != 4) continue;
        CHECK(min_distance(h) < 4);
    }

    // Same deterministic drop for a gamma above J: strip the fresh VNs of
    // the (16,10,5) overlap group so all four local checks together cover
    // 13 <= gamma + k - 1 VNs.
    TannerGraph g16 = plan_to_tanner(plan_class3(16, 10, 5));
    auto& overlap = g16.checks[3].support;
    overlap.erase(std::remove_if(overlap.begin(), overlap.end(), [](int v) { return v >= 13; }),
                  overlap.end());
    CHECK(!coverage_sweep(g16, 10, 5).ok);
    for (std::uint64_t seed = 1; seed <= 5; seed++) {
        std::mt19937_64 rng(seed);
        FieldMatrix h = random_parity_check(g16, gf256(), rng);
        if (rank(h) != 6) continue;
        CHECK(min_distance(h) < 5);
    }
}
