#pragma once

namespace cforge::io::detail {

extern const char* const kComplexSchema;
extern const char* const kCorridorReportSchema;
extern const char* const kPmReportSchema;

}  // namespace cforge::io::detail
