#pragma once

// Configuration documents:
//   {"generators": [{"kind": "explicit", "arcs": [[a, b], ...]},
//                   {"kind": "fan", "vertex": v},
//                   {"kind": "zigzag", "center": c},
//                   {"kind": "splitfan", "p": p, "q": q}],
//    "infinite_arcs": [m, ...]}

#include <string>
#include <string_view>

#include "infgon/configuration.hpp"
#include "json.hpp"

namespace infgon::cli {

// Throws DomainError on malformed documents or invalid arcs.
ArcConfiguration config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ArcConfiguration& c);

ArcConfiguration parse_config(std::string_view text);
ArcConfiguration load_config(const std::string& path);

}  // namespace infgon::cli
