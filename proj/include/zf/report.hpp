#ifndef ZF_REPORT_HPP
#define ZF_REPORT_HPP

#include <span>
#include <string>

#include "zf/claims.hpp"

namespace zf {

// JSON array of records; the field order is fixed.
std::string report_json(std::span<const EvaluationRecord> records);
// Columns id,params,lhs,rhs,relation,status,elapsed_ms.
std::string report_csv(std::span<const EvaluationRecord> records);
// One line per record followed by per-status totals.
std::string report_text(const GridRun& run);

std::string format_ids(std::span<const VertexId> ids);

} // namespace zf

#endif // ZF_REPORT_HPP
