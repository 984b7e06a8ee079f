#pragma once

// JSON instance files and solve reports.
//
// Instance document:
//   {"root": id,
//    "edges": [{"child": id, "parent": id, "w": x, "u": x, "c": x, "r": k}, ...],
//    "params": {"M": x, "K": x, "N": k, "D": x},
//    "child_order": "ascending" | "as_listed"}          (optional)
// Ids are nonnegative integers or strings. Unknown keys are rejected.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ditree/report.hpp"
#include "ditree/tree.hpp"

namespace ditree {

/// Malformed document; the message names the offending line or field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TreeInstance parse_instance(std::string_view text);
TreeInstance read_instance(const std::filesystem::path& path);

nlohmann::json instance_to_json(const TreeInstance& inst);
void write_instance(const TreeInstance& inst, const std::filesystem::path& path);

/// status, objective, min_path, upgraded edges (child ids), per-edge w_hat,
/// lambda* / K* when present, trace length and call counts, wall time.
nlohmann::json report_to_json(const TreeInstance& inst, const SolveReport& report,
                              std::string_view problem);

}  // namespace ditree
