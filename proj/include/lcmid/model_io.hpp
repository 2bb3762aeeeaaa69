#pragma once

#include "lcmid/model.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace lcmid {

using ordered_json = nlohmann::ordered_json;

/// Parse `{ "n": int, "edges": [[from,to],...], "in": [...], "out": [...], "leak": [...] }`.
/// "in" and "leak" may be omitted (empty). Unknown keys are rejected.
/// Throws ParseError (with line/column for syntax errors) or ValidationError.
ModelSpec parse_model_json(std::string_view text);

ModelSpec load_model_file(const std::string& path);

/// Canonical JSON: keys in the order n, edges, in, out, leak; sorted arrays.
ordered_json model_to_json(const ModelSpec& model);

/// model_to_json(model).dump(2) plus a trailing newline.
std::string model_to_string(const ModelSpec& model);

}  // namespace lcmid
