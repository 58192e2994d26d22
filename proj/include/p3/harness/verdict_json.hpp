#pragma once

#include <string>

#include "json.hpp"
#include "p3/grundy.hpp"

namespace p3 {

// {"winner": "first"|"second", "grundy": g|null, "witness": v|null}
nlohmann::ordered_json verdict_to_json(const Verdict& v);
// Throws std::invalid_argument on a malformed object.
Verdict verdict_from_json(const nlohmann::json& j);

// Short human form, e.g. "first g=1 w=0".
std::string describe(const Verdict& v);

}  // namespace p3
