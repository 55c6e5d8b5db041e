#ifndef LOCLIB_JSON_IO_HPP
#define LOCLIB_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "loclib/bounds.hpp"
#include "loclib/construct.hpp"

namespace loclib {

/*
 * On-disk description of a code. Entries are decimal field elements, the
 * field is {"m", "poly"} with the polynomial in decimal, and everything else
 * is plain integers, so round trips are bit exact.
 */
struct CodeFileMeta {
    std::optional<int> class_id;
    std::optional<std::uint64_t> seed;
    std::optional<int> theta_star;
};

struct CodeFile {
    FieldSpec field;
    CodeParams params;
    std::vector<std::vector<int>> h;
    std::optional<std::vector<std::vector<int>>> g;
    std::optional<TannerGraph> tanner;
    CodeFileMeta meta;
};

nlohmann::json tanner_to_json(const TannerGraph& graph);
TannerGraph tanner_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);

nlohmann::json bound_report_to_json(const BoundReport& r);

nlohmann::json code_file_to_json(const CodeFile& file);
CodeFile code_file_from_json(const nlohmann::json& j);

// Matrix helpers between FieldMatrix and plain int rows.
std::vector<std::vector<int>> matrix_to_rows(const FieldMatrix& m);
FieldMatrix rows_to_matrix(const FieldSpec& f, const std::vector<std::vector<int>>& rows);

// Assemble a file from a realized construction.
CodeFile make_code_file(const LinearCode& code, const std::optional<TannerGraph>& tanner,
                        const CodeFileMeta& meta);

// Reconstruct the LinearCode (running every constructor check). Throws on
// inconsistent content.
LinearCode code_from_file(const CodeFile& file);

void save_code_file(const CodeFile& file, const std::string& path);
CodeFile load_code_file(const std::string& path);

}  // namespace loclib

#endif
