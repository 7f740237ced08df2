#pragma once

#include <map>
#include <optional>

#include "gridmp/graph.hpp"

namespace gridmp {

// Sparse broadcast f: vertex id -> power >= 1 (absent means 0).
// A vertex u is dominated when d(u, v) <= f(v) for some keyed v.
struct BroadcastAssignment {
    std::map<int, int> powers;

    int cost() const {
        int s = 0;
        for (auto [v, p] : powers) s += p;
        return s;
    }

    bool operator==(const BroadcastAssignment&) const = default;
};

struct UncoveredWitness {
    int vertex = 0;
};

// nullopt means every vertex is dominated; otherwise the smallest-id
// uncovered vertex. Throws on out-of-range keys or powers < 1.
std::optional<UncoveredWitness> is_dominating(const GeneralGraph& g, const BroadcastAssignment& b);

// Single ball of power radius(g) at the smallest-id center vertex
// (power 1 on a single-vertex graph, since powers must be positive).
BroadcastAssignment radius_broadcast(const GeneralGraph& g);

}  // namespace gridmp
