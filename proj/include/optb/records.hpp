#pragma once

#include <json.hpp>

#include "optb/decider.hpp"
#include "optb/gof.hpp"
#include "optb/homology.hpp"
#include "optb/torus_surgery.hpp"

namespace optb {

// JSON shapes for the machine-readable output mode and the scan store.
// nlohmann::json keeps keys sorted, so dump() output round-trips through
// parse + dump verbatim.

nlohmann::json to_json(const GofVerdict& v);
nlohmann::json to_json(const SurgeryDescription& d);
nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const OptbVerdict& v);
nlohmann::json to_json(const ScanRecord& r);

ScanRecord scan_record_from_json(const nlohmann::json& j);

} // namespace optb
