#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cforge/complex.hpp"
#include "cforge/corridor_process.hpp"
#include "cforge/pm_process.hpp"
#include "cforge/trajectory.hpp"

namespace cforge::io {

using nlohmann::json;

/// {"n": n, "d": d, "facets": [[...], ...]}, facets and vertices sorted.
json complex_to_json(const SimplicialComplex& complex, int d);

struct ComplexDocument {
  SimplicialComplex complex;
  int d = 0;
};

/// Throws FormatError on schema violations or malformed faces.
ComplexDocument complex_from_json(const json& doc);

json report_to_json(const corridor::RunReport& report);
json report_to_json(const pm::RunReport& report);
corridor::RunReport corridor_report_from_json(const json& doc);
pm::RunReport pm_report_from_json(const json& doc);

/// Which schema a document claims to follow, from its "kind" field.
enum class DocumentKind { kComplex, kCorridorReport, kPmReport };

/// The schema text embedded at build time (identical to the files shipped
/// under schema/).
const json& schema(DocumentKind kind);

/// Violations of the supported JSON-Schema subset (type, required,
/// properties, items, enum, minimum), as "path: message" strings.
std::vector<std::string> schema_violations(const json& doc, const json& schema);

/// Throws FormatError listing the violations, if any.
void validate(const json& doc, DocumentKind kind);

/// Trajectory rows: one per (record, tracked complex) plus a "terminal" row
/// per record for the boundary of the current terminal face.
/// Columns: step,t,p,A_id,size_A,Y_obs,Y_pred,band,W_0..W_{P-1},Z_0..Z_{P-1}.
std::string trajectory_csv(const std::vector<TrajectoryRecord>& records, int period);
/// Inverse of trajectory_csv. Throws FormatError on malformed input.
std::vector<TrajectoryRecord> parse_trajectory_csv(const std::string& text);

/// Shortest text that parses back to exactly `value`; "inf", "-inf", "nan"
/// for non-finite values.
std::string format_real(double value);
double parse_real(const std::string& text);

/// Stable pretty-printed text (2-space indent, trailing newline).
std::string dump(const json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace cforge::io
