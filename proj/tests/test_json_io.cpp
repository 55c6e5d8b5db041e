#include <doctest.h>

#include <cstdio>

#include "test_helpers.hpp"
#include "loclib/json_io.hpp"

using namespace loclib;
using namespace loclib::testing;

TEST_CASE("tanner graph json schema") {
    TannerGraph g = plan_to_tanner(plan_class3(8, 4, 4));
    nlohmann::json j = tanner_to_json(g);
    CHECK(j["n"] == 8);
    CHECK(j["checks"].size() == 4);
    CHECK(j["checks"][0]["support"] == std::vector<int>{0, 1, 2});
    CHECK(j["checks"][0]["local"] == true);
    CHECK(j["checks"][3]["local"] == false);

    TannerGraph back = tanner_from_json(j);
    CHECK(back.n == g.n);
    REQUIRE(back.checks.size() == g.checks.size());
    for (size_t c = 0; c < g.checks.size(); c++) {
        CHECK(back.checks[c].support == g.checks[c].support);
        CHECK(back.checks[c].local == g.checks[c].local);
    }
}

TEST_CASE("bound report json") {
    nlohmann::json j = bound_report_to_json(bound_report(16, 10, 5));
    CHECK(j["J"] == 3);
    CHECK(j["r_lb"] == 4);
    CHECK(j["rbar_lb_general"]["num"] == 7);
    CHECK(j["rbar_lb_general"]["den"] == 2);
    CHECK(j["rbar_lb_general"]["decimal"] == 3.5);
    CHECK(j["rbar_lb_tight"]["num"] == 31);
    CHECK(j["rbar_lb_tight"]["den"] == 8);
    CHECK(j["theta_star"] == 3);
    CHECK(j["rate_condition_holds"] == true);

    nlohmann::json j2 = bound_report_to_json(bound_report(13, 5, 8));
    CHECK(j2["rate_condition_holds"] == false);
    CHECK(!j2.contains("rbar_lb_tight"));
}

TEST_CASE("code files round trip bit-exactly") {
    ConstructionPlan plan = plan_class3(8, 4, 4);
    LinearCode code = realize(plan, {gf256(), 12, 200});
    CodeFileMeta meta;
    meta.class_id = 3;
    meta.seed = 12;
    meta.theta_star = plan.theta_star;
    CodeFile file = make_code_file(code, plan_to_tanner(plan), meta);

    std::string path = "codefile_test_tmp.json";
    save_code_file(file, path);
    CodeFile loaded = load_code_file(path);
    std::remove(path.c_str());

    CHECK(loaded.field == file.field);
    CHECK(loaded.params.n == 8);
    CHECK(loaded.h == file.h);
    CHECK(loaded.g == file.g);
    CHECK(loaded.meta.class_id == 3);
    CHECK(loaded.meta.seed == 12);
    CHECK(loaded.meta.theta_star == 2);
    REQUIRE(loaded.tanner.has_value());

    // Reconstruction runs the full constructor checks.
    LinearCode back = code_from_file(loaded);
    CHECK(back.parity_check() == code.parity_check());
    CHECK(back.generator() == code.generator());

    // Serialization itself is deterministic.
    CHECK(code_file_to_json(loaded).dump() == code_file_to_json(file).dump());
}

TEST_CASE("loading rejects inconsistent content") {
    LinearCode code = fig1b_code();
    CodeFile file = make_code_file(code, std::nullopt, {});

    CodeFile tampered = file;
    tampered.h[0][0] ^= 1;
    CHECK_THROWS_AS(code_from_file(tampered), Error);

    CodeFile bad_params = file;
    bad_params.params.d = 1;
    CHECK_THROWS_AS(code_from_file(bad_params), BadParams);

    nlohmann::json j = code_file_to_json(file);
    j.erase("H");
    CHECK_THROWS(code_file_from_json(j));

    nlohmann::json badfield = code_file_to_json(file);
    badfield["field"]["poly"] = 0x100;  // not primitive
    CHECK_THROWS_AS(code_file_from_json(badfield), NonPrimitivePolynomial);
}

TEST_CASE("g-less files reconstruct through systematize") {
    LinearCode code = fig1b_code();
    CodeFile file = make_code_file(code, std::nullopt, {});
    file.g.reset();
    LinearCode back = code_from_file(file);
    CHECK(back.parity_check() == code.parity_check());
    FieldMatrix product = matmul(back.generator(), transpose(back.parity_check()));
    for (int i = 0; i < product.rows(); i++)
        for (int j = 0; j < product.cols(); j++) CHECK(product.at(i, j) == 0);
}
