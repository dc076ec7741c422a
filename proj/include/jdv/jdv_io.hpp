#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "jdv/jdv.hpp"

namespace jdv {

// JDV documents are JSON objects:
//
//   {"n": 6, "entries": [{"i": 1, "k": 5, "count": 1}, ...]}
//
// Writers sort entries by (i, k). Readers accept entries in any order, drop
// zero counts and ignore unknown top-level keys.

nlohmann::json to_json(const Jdv& j);
Jdv jdv_from_json(const nlohmann::json& doc);

Jdv read_jdv(std::istream& in);
Jdv parse_jdv(const std::string& text);

}  // namespace jdv
