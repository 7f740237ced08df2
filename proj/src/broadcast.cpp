#include "gridmp/broadcast.hpp"

#include <algorithm>

namespace gridmp {

std::optional<UncoveredWitness> is_dominating(const GeneralGraph& g, const BroadcastAssignment& b) {
    for (auto [v, p] : b.powers) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("is_dominating: keyed vertex out of range");
        if (p < 1) throw std::invalid_argument("is_dominating: power must be >= 1");
    }
    std::vector<char> covered(g.vertex_count(), 0);
    for (auto [v, p] : b.powers) {
        auto row = bfs_distances(g, v);
        for (int u = 0; u < g.vertex_count(); ++u)
            if (row.dist[u] <= p) covered[u] = 1;
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!covered[u]) return UncoveredWitness{u};
    return std::nullopt;
}

BroadcastAssignment radius_broadcast(const GeneralGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("radius_broadcast: empty graph");
    int best_v = 0;
    int best_ecc = eccentricity(g, 0);
    for (int v = 1; v < g.vertex_count(); ++v) {
        int e = eccentricity(g, v);
        if (e < best_ecc) {
            best_ecc = e;
            best_v = v;
        }
    }
    BroadcastAssignment b;
    b.powers[best_v] = std::max(best_ecc, 1);
    return b;
}

}  // namespace gridmp
