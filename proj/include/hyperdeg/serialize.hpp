#pragma once

#include <nlohmann/json.hpp>

#include "hyperdeg/mc.hpp"
#include "hyperdeg/oracle.hpp"
#include "hyperdeg/summation.hpp"
#include "hyperdeg/switching.hpp"
#include "hyperdeg/verify.hpp"

namespace hyperdeg {

using json = nlohmann::json;

/* Counts are serialized as decimal strings so they survive JSON number
   precision; rationals as "num/den" (or "num" when integral). */

json partition_to_json(const Partition& q);
Partition partition_from_json(const json& j, std::uint32_t r);

json hypergraph_to_json(const HypergraphView& h);

json tuple_to_json(const SwitchingTuple& t);
SwitchingTuple tuple_from_json(const json& j);

json diagnosis_to_json(const LegalityDiagnosis& d);

json census_to_json(const ExactCensus& c);

json estimate_report_to_json(const EstimateReport& r);

json count_result_to_json(const CountResult& c);

json ratios_to_json(const RatiosReport& r);
json double_count_to_json(const DoubleCountReport& r);
json necessity_to_json(const NecessityReport& r);
json summation_verify_to_json(const SummationVerifyReport& r);
json identity_to_json(const IdentityReport& r);

}  // namespace hyperdeg
