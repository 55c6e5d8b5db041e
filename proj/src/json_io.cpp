#include "loclib/json_io.hpp"

#include <fstream>

namespace loclib {

using nlohmann::json;

json tanner_to_json(const TannerGraph& graph) {
    json checks = json::array();
    for (const TannerCheck& c : graph.checks)
        checks.push_back({{"support", c.support}, {"local", c.local}});
    return {{"n", graph.n}, {"checks", checks}};
}

TannerGraph tanner_from_json(const json& j) {
    TannerGraph graph;
    graph.n = j.at("n").get<int>();
    for (const json& c : j.at("checks"))
        graph.checks.push_back({c.at("support").get<std::vector<int>>(), c.at("local").get<bool>()});
    graph.validate();
    return graph;
}

json rational_to_json(const Rational& r) {
    return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_double()}};
}

json bound_report_to_json(const BoundReport& r) {
    json j = {{"n", r.n},
              {"k", r.k},
              {"d", r.d},
              {"J", r.J},
              {"r_lb", r.r_lb},
              {"rbar_lb_general", rational_to_json(r.rbar_lb_general)},
              {"alpha", rational_to_json(r.alpha)},
              {"gap", rational_to_json(r.gap)},
              {"rate_condition_holds", r.rate_condition_holds}};
    if (r.rbar_lb_tight) j["rbar_lb_tight"] = rational_to_json(*r.rbar_lb_tight);
    if (r.theta_star) j["theta_star"] = *r.theta_star;
    if (r.a_theta) j["a_theta"] = *r.a_theta;
    return j;
}

std::vector<std::vector<int>> matrix_to_rows(const FieldMatrix& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols()));
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) rows[i][j] = static_cast<int>(m.at(i, j));
    return rows;
}

FieldMatrix rows_to_matrix(const FieldSpec& f, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw ShapeMismatch("matrix needs at least one row");
    FieldMatrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); i++) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw ShapeMismatch("ragged matrix rows");
        for (int j = 0; j < m.cols(); j++) {
            if (rows[i][j] < 0) throw ShapeMismatch("negative matrix entry");
            m.set(i, j, static_cast<FieldElement>(rows[i][j]));
        }
    }
    return m;
}

json code_file_to_json(const CodeFile& file) {
    json j;
    j["field"] = {{"m", file.field.m()}, {"poly", file.field.poly()}};
    j["params"] = {{"n", file.params.n}, {"k", file.params.k}, {"d", file.params.d}};
    j["H"] = file.h;
    if (file.g) j["G"] = *file.g;
    if (file.tanner) j["tanner"] = tanner_to_json(*file.tanner);
    json meta;
    if (file.meta.class_id) meta["class"] = *file.meta.class_id;
    if (file.meta.seed) meta["seed"] = *file.meta.seed;
    if (file.meta.theta_star) meta["theta_star"] = *file.meta.theta_star;
    if (!meta.empty()) j["meta"] = meta;
    return j;
}

CodeFile code_file_from_json(const json& j) {
    CodeFile file;
    file.field = make_field(j.at("field").at("m").get<int>(),
                            j.at("field").at("poly").get<unsigned>());
    file.params = {j.at("params").at("n").get<int>(), j.at("params").at("k").get<int>(),
                   j.at("params").at("d").get<int>()};
    file.params.validate();
    file.h = j.at("H").get<std::vector<std::vector<int>>>();
    if (j.contains("G")) file.g = j.at("G").get<std::vector<std::vector<int>>>();
    if (j.contains("tanner")) file.tanner = tanner_from_json(j.at("tanner"));
    if (j.contains("meta")) {
        const json& meta = j.at("meta");
        if (meta.contains("class")) file.meta.class_id = meta.at("class").get<int>();
        if (meta.contains("seed")) file.meta.seed = meta.at("seed").get<std::uint64_t>();
        if (meta.contains("theta_star")) file.meta.theta_star = meta.at("theta_star").get<int>();
    }
    return file;
}

CodeFile make_code_file(const LinearCode& code, const std::optional<TannerGraph>& tanner,
                        const CodeFileMeta& meta) {
    CodeFile file;
    file.field = code.field();
    file.params = code.params();
    file.h = matrix_to_rows(code.parity_check());
    file.g = matrix_to_rows(code.generator());
    file.tanner = tanner;
    file.meta = meta;
    return file;
}

LinearCode code_from_file(const CodeFile& file) {
    FieldMatrix h = rows_to_matrix(file.field, file.h);
    if (!file.g) return LinearCode::from_parity_check(file.params, h);
    return LinearCode(file.params, rows_to_matrix(file.field, *file.g), h);
}

void save_code_file(const CodeFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << code_file_to_json(file).dump(2) << "\n";
}

CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return code_file_from_json(j);
}

}  // namespace loclib
