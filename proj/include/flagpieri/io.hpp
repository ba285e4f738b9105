#pragma once

#include <string>

#include <json.hpp>

#include "flagpieri/pieri.hpp"
#include "flagpieri/schubert.hpp"

namespace flagpieri {

// [{"perm": "231", "coeff": 1}, ...] sorted by the one-line string.
nlohmann::json expansion_to_json(const SchubertExpansion& e);
// Inverse of expansion_to_json; the ambient is the common degree of the keys.
SchubertExpansion expansion_from_json(const nlohmann::json& j);

// {"start": "...", "k": k, "steps": [[a,b],...], "intermediates": [...]}
nlohmann::json path_to_json(const BruhatPath& path);
BruhatPath path_from_json(const nlohmann::json& j);

// One "perm coeff" line per class, in the same order as the JSON form.
std::string expansion_to_text(const SchubertExpansion& e);

// "5412763 -(3,4)-> 5421763 -(1,6)-> ..."
std::string path_to_text(const BruhatPath& path);

}  // namespace flagpieri
