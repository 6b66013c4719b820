#pragma once

#include "zsf/chf.hpp"
#include "zsf/search.hpp"

#include <json.hpp>

namespace zsf {

using json = nlohmann::json;

json to_json(const GroupSubset& s);
json to_json(const Seq& s);
json to_json(const AtomSet& a);
json to_json(const DeltaResult& r);
json to_json(const HFReport& r);
json to_json(const DeltaStarTable& t);
json to_json(const std::vector<InverseHit>& hits);
json to_json(const InverseFamily& f);
json to_json(const SuiteReport& r);
json to_json(const AlphaBounds& b);

}  // namespace zsf
