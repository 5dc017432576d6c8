#include "vertexplace/json_io.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vertexplace {

using nlohmann::json;

std::string serialize_topology(const Topology& t) {
    json doc;
    doc["n"] = t.n();
    json nodes = json::array();
    for (std::uint32_t v = 0; v < t.n(); ++v) {
        const NodeAttrs& a = t.node(v);
        nodes.push_back({{"id", v},
                         {"adapter", adapter_name(a.adapter)},
                         {"holds_replica", a.holds_replica},
                         {"storage_cost", a.storage_cost}});
    }
    doc["nodes"] = nodes;
    json edges = json::array();
    for (const Edge& e : t.edges()) {
        edges.push_back({{"u", e.u},
                         {"v", e.v},
                         {"capacity_mbps", e.capacity_mbps},
                         {"usage_mbps", e.usage_mbps}});
    }
    doc["edges"] = edges;
    return doc.dump(2);
}

namespace {

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed document");
    }
}

// Vertex ids must arrive as non-negative integers that fit in 32 bits;
// json's get<uint32_t> would silently wrap negatives and oversized values.
std::uint32_t id_or_throw(const json& v) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xFFFFFFFFull) {
        throw std::invalid_argument("malformed document");
    }
    return static_cast<std::uint32_t>(v.get<std::uint64_t>());
}

}  // namespace

Topology deserialize_topology(const std::string& text) {
    const json doc = parse_or_throw(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["edges"].is_array() || !doc["n"].is_number_unsigned()) {
        throw std::invalid_argument("malformed document");
    }
    try {
        const auto n = doc["n"].get<std::uint32_t>();

        std::vector<NodeAttrs> nodes(n);
        if (doc.contains("nodes")) {
            if (!doc["nodes"].is_array()) throw std::invalid_argument("malformed document");
            std::vector<std::uint8_t> seen(n, 0);
            for (const json& nd : doc["nodes"]) {
                const std::uint32_t id = id_or_throw(nd.at("id"));
                if (id >= n) throw std::invalid_argument("dangling vertex id");
                if (seen[id]) throw std::invalid_argument("duplicate node attribute");
                seen[id] = 1;
                NodeAttrs a;
                a.adapter = adapter_from_name(nd.value("adapter", std::string("ethernet")));
                a.holds_replica = nd.value("holds_replica", false);
                a.storage_cost = nd.value("storage_cost", 1.0);
                nodes[id] = a;
            }
        }

        std::vector<Edge> edges;
        for (const json& ed : doc["edges"]) {
            Edge e;
            e.u = id_or_throw(ed.at("u"));
            e.v = id_or_throw(ed.at("v"));
            e.capacity_mbps = ed.value("capacity_mbps", kEthernetMBps);
            e.usage_mbps = ed.value("usage_mbps", 0.0);
            edges.push_back(e);
        }
        return Topology(n, std::move(edges), std::move(nodes));
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed document");
    }
}

std::string serialize_cover(const CoverSolution& s) {
    json doc;
    doc["members"] = s.members;
    doc["producer"] = s.producer;
    doc["seed"] = s.seed;
    return doc.dump(2);
}

CoverSolution deserialize_cover(const std::string& text) {
    const json doc = parse_or_throw(text);
    if (!doc.is_object() || !doc.contains("members") || !doc["members"].is_array()) {
        throw std::invalid_argument("malformed document");
    }
    try {
        CoverSolution s;
        s.members.reserve(doc["members"].size());
        for (const json& m : doc["members"]) s.members.push_back(id_or_throw(m));
        s.producer = doc.value("producer", std::string());
        s.seed = doc.value("seed", std::uint64_t{0});
        return s;
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed document");
    }
}

std::string breakdown_to_json(const CostBreakdown& b) {
    json doc;
    doc["replica_count"] = b.replica_count;
    // +inf is not representable in JSON numbers; report it as a string.
    const auto num = [](double x) -> json {
        if (std::isinf(x)) return "inf";
        return x;
    };
    doc["transfer_term"] = num(b.transfer_term);
    doc["cf"] = num(b.cf);
    json per = json::array();
    for (const DestinationReport& d : b.per_destination) {
        per.push_back({{"dst", d.dst}, {"provider", d.provider}, {"delay_s", num(d.delay_s)}});
    }
    doc["per_destination"] = per;
    doc["unreachable"] = b.unreachable;
    return doc.dump(2);
}

}  // namespace vertexplace
