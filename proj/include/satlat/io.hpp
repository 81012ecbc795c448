#pragma once

// JSON (de)serialisation: family files, custom poset files, and the JSON
// renderings of results the CLI and the run-record cache share.
//
// Family file:  {"n": 3, "sets": ["110", 5, "001"]}   — members are integer
// masks or bitstrings of length n (leftmost character = ground element 1);
// output always uses canonical bitstrings.
//
// Poset file:   {"size": 4, "less": [[0,1],[0,2],[1,3],[2,3]], "label": "..."}
// with 0-based pairs; the relation is closed transitively on load and the
// strict-order axioms are validated.

#include <string>

#include "json.hpp"
#include "satlat/family.hpp"
#include "satlat/poset.hpp"

namespace satlat {

nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

Family load_family_file(const std::string& path);
void save_family_file(const Family& f, const std::string& path);

PosetSpec load_poset_file(const std::string& path);

}  // namespace satlat
