#pragma once

#include <string>

#include <json.hpp>

#include "gl2q/quantum/expr.hpp"

namespace gl2q::cli {

using Json = nlohmann::ordered_json;

/// {"rows", "cols", "format": "dense", "data": [[[re, im], ...], ...]}
Json dense_to_json(const quantum::CMatrix& m);
/// {"rows", "cols", "format": "coo", "entries": [[i, j, re, im], ...]} in column-major order.
Json sparse_to_json(const quantum::SparseMatrix& m);
/// Accepts either format.
quantum::SparseMatrix matrix_from_json(const Json& j);

/// Skeleton report: tool, version, command echo, empty sections.
Json make_report(const std::string& command);
void set_verdict(Json& report, bool pass);
bool verdict_of(const Json& report);

}  // namespace gl2q::cli
