#pragma once

#include "degseq/adversarial.hpp"
#include "degseq/constructive.hpp"
#include "degseq/counting.hpp"
#include "degseq/graph.hpp"
#include "degseq/regions.hpp"
#include "degseq/switch_chain.hpp"
#include "degseq/trails.hpp"

#include <json.hpp>

#include <string>

namespace degseq {

// All serialization goes through ordered_json so output key order (and thus
// the byte stream) is deterministic.
using Json = nlohmann::ordered_json;

Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j); // throws Errc::invalid_argument

Json sequence_to_json(const DegreeSequence& d);

Json verdict_to_json(const GraphicVerdict& v);
Json trail_to_json(const AlternatingTrail& t);
Json hostile_to_json(const HostileConfiguration& h);
Json certificate_to_json(const Certificate& c);
Json classification_to_json(const RegionClassification& c);
Json boundary_to_json(const BoundaryReport& le_report, const BoundaryReport& lt_report,
                      PairConvention selected);
Json window_to_json(const UnstableWindow& w);
Json construction_to_json(const UnstableConstruction& u);
Json mixing_to_json(const MixingReport& m);

std::string rat_decimal(const Rat& value, int digits10 = 12);

} // namespace degseq
