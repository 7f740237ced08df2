#include "gridmp/document.hpp"

#include <algorithm>
#include <fmt/format.h>

#include <json.hpp>

namespace gridmp {

using nlohmann::json;

GeneralGraph InstanceDocument::build_graph() const {
    switch (family) {
        case Family::Grid: return make_grid(shape);
        case Family::Path: return make_path(order);
        case Family::Cycle: return make_cycle(order);
        case Family::Explicit: return GeneralGraph::from_edges(explicit_vertices, explicit_edges);
    }
    throw std::logic_error("unreachable");
}

int InstanceDocument::vertex_count() const {
    switch (family) {
        case Family::Grid: return shape.vertex_count();
        case Family::Path:
        case Family::Cycle: return order;
        case Family::Explicit: return explicit_vertices;
    }
    throw std::logic_error("unreachable");
}

InstanceDocument document_for_grid(const Multipacking& mp) {
    InstanceDocument doc;
    doc.family = InstanceDocument::Family::Grid;
    doc.shape = mp.shape;
    std::vector<int> ids;
    ids.reserve(mp.members.size());
    for (const Vertex& v : mp.members) ids.push_back(mp.shape.id(v.x, v.y));
    std::sort(ids.begin(), ids.end());
    doc.multipacking = std::move(ids);
    doc.size = mp.size();
    return doc;
}

namespace {

json graph_to_json(const InstanceDocument& doc) {
    switch (doc.family) {
        case InstanceDocument::Family::Grid:
            return json{{"family", "grid"}, {"n", doc.shape.n}, {"m", doc.shape.m}};
        case InstanceDocument::Family::Path: return json{{"family", "path"}, {"z", doc.order}};
        case InstanceDocument::Family::Cycle: return json{{"family", "cycle"}, {"z", doc.order}};
        case InstanceDocument::Family::Explicit: {
            json edges = json::array();
            for (auto [u, v] : doc.explicit_edges) edges.push_back(json::array({u, v}));
            return json{{"family", "explicit"},
                        {"vertices", doc.explicit_vertices},
                        {"edges", std::move(edges)}};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string to_json(const InstanceDocument& doc, int indent) {
    json out;
    out["graph"] = graph_to_json(doc);
    if (doc.multipacking) {
        json members = json::array();
        if (doc.is_grid()) {
            // grid members serialize as [x, y] pairs, already id-sorted
            // which matches (y, x) order
            for (int id : *doc.multipacking)
                members.push_back(json::array({id % doc.shape.n, id / doc.shape.n}));
        } else {
            for (int id : *doc.multipacking) members.push_back(id);
        }
        out["multipacking"] = std::move(members);
    }
    if (doc.broadcast) {
        json powers = json::object();
        for (auto [v, p] : doc.broadcast->powers) {
            std::string key = doc.is_grid()
                                  ? fmt::format("{},{}", v % doc.shape.n, v / doc.shape.n)
                                  : std::to_string(v);
            powers[key] = p;
        }
        out["broadcast"] = std::move(powers);
    }
    if (doc.size) out["size"] = *doc.size;
    if (doc.gamma_b) out["gamma_b"] = *doc.gamma_b;
    if (doc.optimal_pair) out["optimal_pair"] = *doc.optimal_pair;
    if (!doc.methods.empty()) out["method"] = doc.methods;
    return out.dump(indent);
}

namespace {

int require_int(const json& j, const char* what, int min_value) {
    if (!j.is_number_integer())
        throw DocumentError(fmt::format("{}: expected an integer", what));
    int v = j.get<int>();
    if (v < min_value) throw DocumentError(fmt::format("{}: must be >= {}", what, min_value));
    return v;
}

int parse_member_id(const json& entry, const InstanceDocument& doc) {
    if (doc.is_grid()) {
        if (!entry.is_array() || entry.size() != 2)
            throw DocumentError("multipacking: grid member must be an [x, y] pair");
        int x = require_int(entry[0], "multipacking: x", 0);
        int y = require_int(entry[1], "multipacking: y", 0);
        if (!doc.shape.contains(x, y))
            throw DocumentError(fmt::format("multipacking: member ({}, {}) out of bounds", x, y));
        return doc.shape.id(x, y);
    }
    int id = require_int(entry, "multipacking: member", 0);
    if (id >= doc.vertex_count())
        throw DocumentError(fmt::format("multipacking: member {} out of bounds", id));
    return id;
}

int parse_broadcast_key(const std::string& key, const InstanceDocument& doc) {
    try {
        if (doc.is_grid()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw DocumentError("broadcast: key must be \"x,y\"");
            int x = std::stoi(key.substr(0, comma));
            int y = std::stoi(key.substr(comma + 1));
            if (!doc.shape.contains(x, y))
                throw DocumentError(fmt::format("broadcast: vertex ({}, {}) out of bounds", x, y));
            return doc.shape.id(x, y);
        }
        int id = std::stoi(key);
        if (id < 0 || id >= doc.vertex_count())
            throw DocumentError(fmt::format("broadcast: vertex {} out of bounds", id));
        return id;
    } catch (const std::invalid_argument&) {
        throw DocumentError(fmt::format("broadcast: malformed vertex key \"{}\"", key));
    }
}

}  // namespace

InstanceDocument from_json(const std::string& text) {
    json in = json::parse(text, nullptr, false);
    if (in.is_discarded()) throw DocumentError("malformed JSON");
    if (!in.is_object() || !in.contains("graph") || !in["graph"].is_object())
        throw DocumentError("missing \"graph\" object");

    InstanceDocument doc;
    const json& graph = in["graph"];
    std::string family = graph.value("family", "");
    if (family == "grid") {
        doc.family = InstanceDocument::Family::Grid;
        doc.shape = GridShape(require_int(graph.at("n"), "graph.n", 1),
                              require_int(graph.at("m"), "graph.m", 1));
    } else if (family == "path" || family == "cycle") {
        doc.family = family == "path" ? InstanceDocument::Family::Path
                                      : InstanceDocument::Family::Cycle;
        doc.order = require_int(graph.at("z"), "graph.z", family == "path" ? 1 : 3);
    } else if (family == "explicit") {
        doc.family = InstanceDocument::Family::Explicit;
        doc.explicit_vertices = require_int(graph.at("vertices"), "graph.vertices", 1);
        if (!graph.contains("edges") || !graph["edges"].is_array())
            throw DocumentError("graph.edges: expected an array");
        for (const json& e : graph["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw DocumentError("graph.edges: each edge must be a [u, v] pair");
            doc.explicit_edges.emplace_back(require_int(e[0], "edge endpoint", 0),
                                            require_int(e[1], "edge endpoint", 0));
        }
    } else {
        throw DocumentError(fmt::format("unknown graph family \"{}\"", family));
    }

    try {
        if (in.contains("multipacking")) {
            if (!in["multipacking"].is_array())
                throw DocumentError("multipacking: expected an array");
            std::vector<int> ids;
            for (const json& entry : in["multipacking"]) ids.push_back(parse_member_id(entry, doc));
            std::sort(ids.begin(), ids.end());
            if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
                throw DocumentError("multipacking: duplicate member");
            doc.multipacking = std::move(ids);
        }
        if (in.contains("broadcast")) {
            if (!in["broadcast"].is_object())
                throw DocumentError("broadcast: expected an object");
            BroadcastAssignment b;
            for (auto& [key, value] : in["broadcast"].items())
                b.powers[parse_broadcast_key(key, doc)] = require_int(value, "broadcast power", 1);
            doc.broadcast = std::move(b);
        }
        if (in.contains("size")) doc.size = require_int(in["size"], "size", 0);
        if (in.contains("gamma_b")) doc.gamma_b = require_int(in["gamma_b"], "gamma_b", 0);
        if (in.contains("optimal_pair")) {
            if (!in["optimal_pair"].is_boolean())
                throw DocumentError("optimal_pair: expected a boolean");
            doc.optimal_pair = in["optimal_pair"].get<bool>();
        }
        if (in.contains("method")) {
            if (!in["method"].is_array()) throw DocumentError("method: expected an array");
            for (const json& s : in["method"]) {
                if (!s.is_string()) throw DocumentError("method: expected strings");
                doc.methods.push_back(s.get<std::string>());
            }
        }
    } catch (const json::exception& e) {
        throw DocumentError(fmt::format("malformed document: {}", e.what()));
    }
    return doc;
}

std::string render_ascii(const InstanceDocument& doc) {
    if (!doc.is_grid()) throw DocumentError("render: only grid instances can be drawn");
    std::string out;
    out.reserve(static_cast<size_t>(doc.shape.m) * (doc.shape.n + 1));
    for (int y = doc.shape.m - 1; y >= 0; --y) {
        for (int x = 0; x < doc.shape.n; ++x) {
            int id = doc.shape.id(x, y);
            char c = '.';
            if (doc.multipacking &&
                std::binary_search(doc.multipacking->begin(), doc.multipacking->end(), id))
                c = 'X';
            if (doc.broadcast) {
                auto it = doc.broadcast->powers.find(id);
                if (it != doc.broadcast->powers.end())
                    c = it->second <= 9 ? static_cast<char>('0' + it->second) : '+';
            }
            out += c;
        }
        out += '\n';
    }
    return out;
}

}  // namespace gridmp
