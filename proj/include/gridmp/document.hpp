#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridmp/broadcast.hpp"
#include "gridmp/graph.hpp"
#include "gridmp/multipacking.hpp"

namespace gridmp {

struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One self-contained instance: a graph plus optional witnesses and
// result metadata. Round-trips losslessly through JSON.
struct InstanceDocument {
    enum class Family { Grid, Path, Cycle, Explicit };

    Family family = Family::Grid;
    GridShape shape{1, 1};                           // grid
    int order = 0;                                   // path / cycle
    int explicit_vertices = 0;                       // explicit edge list
    std::vector<std::pair<int, int>> explicit_edges;

    std::optional<std::vector<int>> multipacking;  // vertex ids, sorted
    std::optional<BroadcastAssignment> broadcast;

    std::optional<int> size;
    std::optional<int> gamma_b;
    std::optional<bool> optimal_pair;
    std::vector<std::string> methods;

    bool is_grid() const { return family == Family::Grid; }
    GeneralGraph build_graph() const;
    int vertex_count() const;

    bool operator==(const InstanceDocument&) const = default;
};

InstanceDocument document_for_grid(const Multipacking& mp);

// Serialization; from_json throws DocumentError on malformed input,
// out-of-bounds coordinates, or non-positive powers.
std::string to_json(const InstanceDocument& doc, int indent = 2);
InstanceDocument from_json(const std::string& text);

// m lines, top row first: 'X' members, '.' background, broadcast powers
// as a digit overlay ('+' for powers above 9). Grid instances only.
std::string render_ascii(const InstanceDocument& doc);

}  // namespace gridmp
