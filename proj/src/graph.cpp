#include "gridmp/graph.hpp"

#include <algorithm>
#include <queue>

namespace gridmp {

void GeneralGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("GeneralGraph: self-loop");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("GeneralGraph: endpoint out of range");
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end())
        throw std::invalid_argument("GeneralGraph: duplicate edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

GeneralGraph GeneralGraph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    GeneralGraph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

int GeneralGraph::edge_count() const {
    int deg_sum = 0;
    for (const auto& nbrs : adj_) deg_sum += static_cast<int>(nbrs.size());
    return deg_sum / 2;
}

GeneralGraph make_grid(const GridShape& shape) {
    std::vector<std::pair<int, int>> edges;
    for (int y = 0; y < shape.m; ++y)
        for (int x = 0; x < shape.n; ++x) {
            if (x + 1 < shape.n) edges.emplace_back(shape.id(x, y), shape.id(x + 1, y));
            if (y + 1 < shape.m) edges.emplace_back(shape.id(x, y), shape.id(x, y + 1));
        }
    return GeneralGraph::from_edges(shape.vertex_count(), edges);
}

GeneralGraph make_path(int z) {
    if (z < 1) throw std::invalid_argument("make_path: order must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < z; ++i) edges.emplace_back(i, i + 1);
    return GeneralGraph::from_edges(z, edges);
}

GeneralGraph make_cycle(int z) {
    if (z < 3) throw std::invalid_argument("make_cycle: order must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < z; ++i) edges.emplace_back(i, (i + 1) % z);
    return GeneralGraph::from_edges(z, edges);
}

DistanceRow bfs_distances(const GeneralGraph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("bfs_distances: source out of range");
    DistanceRow row{source, std::vector<int>(g.vertex_count(), -1)};
    row.dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (row.dist[w] < 0) {
                row.dist[w] = row.dist[u] + 1;
                q.push(w);
            }
    }
    for (int d : row.dist)
        if (d < 0) throw std::runtime_error("bfs_distances: graph is disconnected");
    return row;
}

int eccentricity(const GeneralGraph& g, int v) {
    auto row = bfs_distances(g, v);
    return *std::max_element(row.dist.begin(), row.dist.end());
}

int radius(const GeneralGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("radius: empty graph");
    int best = eccentricity(g, 0);
    for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, eccentricity(g, v));
    return best;
}

int diameter(const GeneralGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("diameter: empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
    return best;
}

}  // namespace gridmp
