#include "gridmp/multipacking.hpp"

#include <algorithm>

namespace gridmp {

namespace {

void check_members(const GridShape& shape, std::span<const Vertex> members) {
    std::vector<int> ids;
    ids.reserve(members.size());
    for (const Vertex& v : members) {
        if (!shape.contains(v.x, v.y))
            throw std::invalid_argument("multipacking: member out of bounds");
        ids.push_back(shape.id(v.x, v.y));
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("multipacking: duplicate member");
}

void check_members(const GeneralGraph& g, std::span<const int> members) {
    std::vector<int> ids(members.begin(), members.end());
    for (int v : ids)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("multipacking: member out of bounds");
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("multipacking: duplicate member");
}

// Per-center cumulative member counts by distance, padded to `maxr`.
std::vector<int> cumulative_counts(const std::vector<int>& dist, std::span<const int> members,
                                   int maxr) {
    std::vector<int> cum(maxr + 1, 0);
    for (int u : members) {
        int d = dist[u];
        if (d <= maxr) cum[d] += 1;
    }
    for (int r = 1; r <= maxr; ++r) cum[r] += cum[r - 1];
    return cum;
}

}  // namespace

GridBallCounter::GridBallCounter(const GridShape& shape, std::span<const Vertex> members)
    : shape_(shape), side_(shape.n + shape.m - 1) {
    // prefix_[(u + 1) * (side_ + 1) + (w + 1)] = #members with rotated
    // coordinates <= (u, w); w is shifted by m - 1 to stay non-negative.
    prefix_.assign(static_cast<size_t>(side_ + 1) * (side_ + 1), 0);
    for (const Vertex& v : members) {
        int u = v.x + v.y;
        int w = v.x - v.y + shape.m - 1;
        prefix_[static_cast<size_t>(u + 1) * (side_ + 1) + (w + 1)] += 1;
    }
    for (int u = 1; u <= side_; ++u)
        for (int w = 1; w <= side_; ++w)
            prefix_[static_cast<size_t>(u) * (side_ + 1) + w] +=
                prefix_[static_cast<size_t>(u - 1) * (side_ + 1) + w] +
                prefix_[static_cast<size_t>(u) * (side_ + 1) + w - 1] -
                prefix_[static_cast<size_t>(u - 1) * (side_ + 1) + w - 1];
}

int GridBallCounter::count(Vertex center, int r) const {
    int uc = center.x + center.y;
    int wc = center.x - center.y + shape_.m - 1;
    int u0 = std::max(uc - r, 0), u1 = std::min(uc + r, side_ - 1);
    int w0 = std::max(wc - r, 0), w1 = std::min(wc + r, side_ - 1);
    if (u0 > u1 || w0 > w1) return 0;
    auto at = [&](int u, int w) { return prefix_[static_cast<size_t>(u) * (side_ + 1) + w]; };
    return static_cast<int>(at(u1 + 1, w1 + 1) - at(u0, w1 + 1) - at(u1 + 1, w0) + at(u0, w0));
}

int ball_count(const GridShape& shape, std::span<const Vertex> members, Vertex center, int r) {
    if (!shape.contains(center.x, center.y))
        throw std::invalid_argument("ball_count: center out of bounds");
    int c = 0;
    for (const Vertex& v : members)
        if (grid_distance(v, center) <= r) ++c;
    return c;
}

int ball_count(const GeneralGraph& g, std::span<const int> members, int center, int r) {
    auto row = bfs_distances(g, center);
    int c = 0;
    for (int v : members)
        if (row.dist[v] <= r) ++c;
    return c;
}

std::optional<ViolationWitness> is_multipacking(const GridShape& shape,
                                                std::span<const Vertex> members) {
    check_members(shape, members);
    GridBallCounter counter(shape, members);
    int max_ecc = shape.n - 1 + shape.m - 1;
    // radius-major scan yields the witness minimal in (r, center id)
    for (int r = 1; r <= max_ecc; ++r)
        for (int y = 0; y < shape.m; ++y)
            for (int x = 0; x < shape.n; ++x) {
                Vertex v{x, y};
                if (r > grid_eccentricity(shape, v)) continue;
                int c = counter.count(v, r);
                if (c > r) return ViolationWitness{shape.id(x, y), r, c};
            }
    return std::nullopt;
}

std::optional<ViolationWitness> is_multipacking(const Multipacking& mp) {
    return is_multipacking(mp.shape, mp.members);
}

std::optional<ViolationWitness> is_multipacking(const GeneralGraph& g,
                                                std::span<const int> members, int all_pairs_cap) {
    check_members(g, members);
    if (g.vertex_count() == 0) return std::nullopt;

    std::optional<ViolationWitness> best;
    auto consider_center = [&](int v, const std::vector<int>& dist) {
        int ecc = *std::max_element(dist.begin(), dist.end());
        auto cum = cumulative_counts(dist, members, ecc);
        for (int r = 1; r <= ecc; ++r)
            if (cum[r] > r) {
                if (!best || r < best->radius || (r == best->radius && v < best->center_id))
                    best = ViolationWitness{v, r, cum[r]};
                break;
            }
    };

    if (g.vertex_count() <= all_pairs_cap) {
        std::vector<std::vector<int>> table(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) table[v] = bfs_distances(g, v).dist;
        for (int v = 0; v < g.vertex_count(); ++v) consider_center(v, table[v]);
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) consider_center(v, bfs_distances(g, v).dist);
    }
    return best;
}

Ratio max_violation_ratio(const GridShape& shape, std::span<const Vertex> members) {
    check_members(shape, members);
    if (members.empty()) throw std::invalid_argument("max_violation_ratio: empty member set");
    GridBallCounter counter(shape, members);
    Ratio best{0, 1};
    for (int y = 0; y < shape.m; ++y)
        for (int x = 0; x < shape.n; ++x) {
            Vertex v{x, y};
            int ecc = grid_eccentricity(shape, v);
            for (int r = 1; r <= ecc; ++r) {
                Ratio cand{counter.count(v, r), r};
                if (best < cand) best = cand;
            }
        }
    return best;
}

Ratio max_violation_ratio(const GeneralGraph& g, std::span<const int> members) {
    check_members(g, members);
    if (members.empty()) throw std::invalid_argument("max_violation_ratio: empty member set");
    Ratio best{0, 1};
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v).dist;
        int ecc = *std::max_element(dist.begin(), dist.end());
        auto cum = cumulative_counts(dist, members, ecc);
        for (int r = 1; r <= ecc; ++r) {
            Ratio cand{cum[r], r};
            if (best < cand) best = cand;
        }
    }
    return best;
}

}  // namespace gridmp
