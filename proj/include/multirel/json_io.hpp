#pragma once

#include <string>

#include <json.hpp>

#include "multirel/generate.hpp"
#include "multirel/mrel.hpp"
#include "multirel/rel.hpp"

namespace multirel {

using Json = nlohmann::json;

// Rel:  {"src": n, "dst": m, "pairs": [[a,b], ...]}        pairs sorted
// MRel: {"src": n, "dst": m, "rows": [[[e, ...], ...], ...]} masks in numeric order

Json to_json(const Rel& r);
Json to_json(const MRel& r);
Json to_json(const Instance& v);

Rel rel_from_json(const Json& j);
MRel mrel_from_json(const Json& j);
/// Dispatches on the presence of "pairs" or "rows".
Instance instance_from_json(const Json& j);

Json subset_json(Mask m);
Mask subset_from_json(const Json& j, std::size_t width);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace multirel
