#pragma once

#include <json.hpp>

#include "blc/ast.hpp"

namespace blc {

// Tagged-node JSON encoding, schema "blc-ast/1". The version tag sits on the
// root object; round trips are exact including every annotation.
inline constexpr const char* kAstSchema = "blc-ast/1";

nlohmann::json ty_to_json(const TyPtr& t);
nlohmann::json to_json(const BlcPtr& d);
nlohmann::json to_json(const DcPtr& d);

TyPtr ty_from_json(const nlohmann::json& j);
BlcPtr blc_from_json(const nlohmann::json& j);
DcPtr dc_from_json(const nlohmann::json& j);

}  // namespace blc
