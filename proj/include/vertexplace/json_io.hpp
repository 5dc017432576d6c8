#pragma once

#include <string>

#include "vertexplace/objective.hpp"
#include "vertexplace/topology.hpp"

namespace vertexplace {

// Stable plain-JSON graph document: vertex count, per-node attributes, and
// the canonical edge list. Serialization of equal topologies is
// byte-identical.
std::string serialize_topology(const Topology& t);

// Throws std::invalid_argument: "malformed document" for unparseable or
// structurally wrong input, "dangling vertex id" / "duplicate edge" etc. for
// semantic violations. Node attribute entries are optional; omitted ids get
// defaults.
Topology deserialize_topology(const std::string& text);

std::string serialize_cover(const CoverSolution& s);
CoverSolution deserialize_cover(const std::string& text);

// One-way report document used by the CLI.
std::string breakdown_to_json(const CostBreakdown& b);

}  // namespace vertexplace
