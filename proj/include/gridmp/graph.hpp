#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridmp {

// Axis-aligned grid of n columns (x) by m rows (y), origin at the
// bottom-left corner. Vertex ids are row-major: id = y * n + x.
struct GridShape {
    int n = 1;
    int m = 1;

    GridShape() = default;
    GridShape(int n_, int m_) : n(n_), m(m_) {
        if (n < 1 || m < 1) throw std::invalid_argument("GridShape: extents must be >= 1");
    }

    int vertex_count() const { return n * m; }
    bool contains(int x, int y) const { return x >= 0 && x < n && y >= 0 && y < m; }
    int id(int x, int y) const { return y * n + x; }

    bool operator==(const GridShape&) const = default;
};

struct Vertex {
    int x = 0;
    int y = 0;

    bool operator==(const Vertex&) const = default;
    // (y, x) order so sorted member lists match serialized documents.
    auto operator<=>(const Vertex& o) const {
        if (auto c = y <=> o.y; c != 0) return c;
        return x <=> o.x;
    }
};

inline int grid_distance(Vertex a, Vertex b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Shortest-path eccentricity of (x, y) in an n-by-m grid (L1 metric).
inline int grid_eccentricity(const GridShape& g, Vertex v) {
    return std::max(v.x, g.n - 1 - v.x) + std::max(v.y, g.m - 1 - v.y);
}

inline int grid_radius(const GridShape& g) { return g.n / 2 + g.m / 2; }

// Undirected simple graph, immutable after construction.
class GeneralGraph {
  public:
    GeneralGraph() = default;
    explicit GeneralGraph(int vertex_count) : adj_(vertex_count) {}

    static GeneralGraph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    int edge_count() const;

  private:
    void add_edge(int u, int v);
    std::vector<std::vector<int>> adj_;
};

struct DistanceRow {
    int source = 0;
    std::vector<int> dist;
};

GeneralGraph make_grid(const GridShape& shape);
GeneralGraph make_path(int z);
GeneralGraph make_cycle(int z);

// Throws if some vertex is unreachable from the source.
DistanceRow bfs_distances(const GeneralGraph& g, int source);

int eccentricity(const GeneralGraph& g, int v);
int radius(const GeneralGraph& g);
int diameter(const GeneralGraph& g);

}  // namespace gridmp
