#pragma once

#include <string>

#include <json.hpp>

#include "oag/groups.hpp"
#include "oag/semilinear.hpp"
#include "oag/setrep.hpp"
#include "oag/stdform.hpp"
#include "oag/structure.hpp"
#include "oag/witness.hpp"

namespace oag {

using json = nlohmann::json;

// {"period":p,"hi":{"threshold":t,"residues":[...]},"lo":{...},"middle":[...]}
json indexset_to_json(const IndexSet& s);
IndexSet indexset_from_json(const json& j);

// "blockset-v1": rationals as strings "p/q", elements as coordinate arrays.
json blockset_to_json(const BlockSet& d);
BlockSet blockset_from_json(const json& j);

// "stdform-v1"
json stdform_to_json(const StdForm& x);
StdForm stdform_from_json(const json& j);

json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j);

json inp_instance_to_json(const InpPatternInstance& inst);

json decomposition_to_json(const Decomposition& dec);
json sigma_cover_to_json(const SigmaCover& cover);

BlockSet load_blockset(const std::string& path);
void save_json(const std::string& path, const json& j);
json load_json(const std::string& path);

}  // namespace oag
