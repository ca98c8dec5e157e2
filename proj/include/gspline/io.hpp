#pragma once

#include "gspline/certificate.hpp"
#include "gspline/geometry.hpp"
#include "gspline/graph.hpp"
#include "gspline/spline.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gspline::io {

// Objects keep insertion order so output follows declaration order.
using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Schema errors naming `source`.
Json parse_json(const std::string& text, const std::string& source);

Json to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const Json& j);

Json to_json(const FactoredElement& label, const RingDescriptor& ring);
FactoredElement label_from_json(const Json& j, const RingDescriptor& ring, const std::string& where);

Json to_json(const EdgeLabeledGraph& g);
RawGraph raw_graph_from_json(const Json& j);
EdgeLabeledGraph graph_from_json(const Json& j);

Json to_json(const std::vector<BasicOpen>& opens, const RingDescriptor& ring);
std::vector<BasicOpen> opens_from_json(const Json& j, const RingDescriptor& ring);

Json to_json(const SplineModule& m);
/// The inverse of to_json(SplineModule); the ring is not part of the JSON.
SplineModule module_from_json(const Json& j, const RingDescriptor& ring);

Json to_json(const LimitTrace& t, const RingDescriptor& ring);

Json to_json(const SpectrumReport& r);
/// Reads back fibers, holeCount and components (plus the optional fields).
SpectrumReport report_from_json(const Json& j, const RingDescriptor& ring);

Json to_json(const SpectrumDiff& d);
Json to_json(const BaseChangeCheck& c);
Json to_json(const RestrictionOutcome& r);
Json to_json(const CertificateReport& r);

}  // namespace gspline::io
