#include "gridmp/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <fmt/format.h>
#include <numeric>

#include "gridmp/constructions.hpp"

namespace gridmp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Bits {
    std::vector<uint64_t> w;

    explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    bool subset_of(const Bits& o) const {
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] & ~o.w[j]) return false;
        return true;
    }
    void or_with(const Bits& o) {
        for (size_t j = 0; j < w.size(); ++j) w[j] |= o.w[j];
    }
};

std::vector<std::vector<int>> all_pairs(const GeneralGraph& g) {
    std::vector<std::vector<int>> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = bfs_distances(g, v).dist;
    return d;
}

void check_cap(const GeneralGraph& g, const SolverLimits& limits, const char* who) {
    if (g.vertex_count() == 0) throw std::invalid_argument(fmt::format("{}: empty graph", who));
    if (g.vertex_count() > limits.vertex_cap)
        throw std::runtime_error(
            fmt::format("{}: {} vertices exceeds the cap of {}; raise SolverLimits::vertex_cap "
                        "only if the instance is known to be tractable",
                        who, g.vertex_count(), limits.vertex_cap));
}

// Shared incremental state: cum[v][r] = #chosen members within distance
// r of v, for r in [0, ecc(v)]. Feasible while cum[v][r] <= r (r >= 1).
struct BallCounts {
    const std::vector<std::vector<int>>& dist;
    const std::vector<int>& ecc;
    int stride;
    std::vector<int> cum;

    BallCounts(const std::vector<std::vector<int>>& d, const std::vector<int>& e, int max_ecc)
        : dist(d), ecc(e), stride(max_ecc + 1), cum(d.size() * stride, 0) {}

    bool can_add(int u) const {
        for (size_t v = 0; v < dist.size(); ++v) {
            int d = std::max(dist[v][u], 1);
            for (int r = d; r <= ecc[v]; ++r)
                if (cum[v * stride + r] + 1 > r) return false;
        }
        return true;
    }
    void add(int u, int delta) {
        for (size_t v = 0; v < dist.size(); ++v) {
            int d = std::max(dist[v][u], 1);
            for (int r = d; r <= ecc[v]; ++r) cum[v * stride + r] += delta;
        }
    }
};

struct MpSearch {
    BallCounts counts;
    int radius_ub;
    int floor_size;  // witnesses must strictly beat this
    std::vector<int> current;
    std::vector<int> best;
    long long nodes = 0;

    void dfs(const std::vector<int>& open) {
        ++nodes;
        if (current.size() > best.size()) best = current;
        int threshold = std::max(static_cast<int>(best.size()), floor_size);
        if (threshold >= radius_ub) return;  // cannot exceed the radius bound

        std::vector<int> addable;
        addable.reserve(open.size());
        for (int u : open)
            if (counts.can_add(u)) addable.push_back(u);
        if (static_cast<int>(current.size() + addable.size()) <= threshold) return;

        for (size_t j = 0; j < addable.size(); ++j) {
            // include addable[j], excluding all earlier candidates
            if (static_cast<int>(current.size() + addable.size() - j) <= threshold) break;
            int u = addable[j];
            current.push_back(u);
            counts.add(u, +1);
            dfs(std::vector<int>(addable.begin() + j + 1, addable.end()));
            counts.add(u, -1);
            current.pop_back();
            threshold = std::max(static_cast<int>(best.size()), floor_size);
        }
    }
};

}  // namespace

MpSolveResult exact_mp(const GeneralGraph& g, int initial_lower_bound, SolverLimits limits) {
    check_cap(g, limits, "exact_mp");
    auto t0 = Clock::now();

    auto dist = all_pairs(g);  // throws if disconnected
    std::vector<int> ecc(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        ecc[v] = *std::max_element(dist[v].begin(), dist[v].end());
    int rad = *std::min_element(ecc.begin(), ecc.end());
    int max_ecc = *std::max_element(ecc.begin(), ecc.end());

    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.neighbors(a).size() < g.neighbors(b).size();
    });

    MpSearch search{BallCounts(dist, ecc, max_ecc), std::max(rad, 1),
                    std::max(initial_lower_bound - 1, 0)};
    search.dfs(order);

    MpSolveResult res;
    res.optimum = static_cast<int>(search.best.size());
    res.witness = std::move(search.best);
    std::sort(res.witness.begin(), res.witness.end());
    res.nodes_explored = search.nodes;
    res.wall_seconds = seconds_since(t0);
    if (auto w = is_multipacking(g, res.witness))
        throw std::logic_error("exact_mp: witness failed validation");
    return res;
}

namespace {

struct BallCandidate {
    int center;
    int weight;  // the radius
    Bits mask;
};

struct GammaBSearch {
    const std::vector<std::vector<int>>& dist;
    const std::vector<int>& ecc;
    std::vector<BallCandidate> balls;
    // per-vertex candidate indices that cover it, cheapest weight first
    std::vector<std::vector<int>> covering;
    int vertex_count;
    int max_ecc;

    int best_cost;
    std::vector<int> best_choice;
    std::vector<int> choice;
    long long nodes = 0;

    // Remaining cost is at least the size of any multipacking made of
    // uncovered vertices: every ball of weight r holds at most r of them.
    int uncovered_packing_bound(const Bits& covered) const {
        BallCounts counts(dist, ecc, max_ecc);
        int size = 0;
        for (int u = 0; u < vertex_count; ++u)
            if (!covered.test(u) && counts.can_add(u)) {
                counts.add(u, +1);
                ++size;
            }
        return size;
    }

    int pick_branch_vertex(const Bits& covered) const {
        int best_v = -1, best_depth = -1;
        bool none_covered = covered.count() == 0;
        for (int u = 0; u < vertex_count; ++u) {
            if (covered.test(u)) continue;
            int depth;
            if (none_covered) {
                depth = ecc[u];
            } else {
                depth = std::numeric_limits<int>::max();
                for (int v = 0; v < vertex_count; ++v)
                    if (covered.test(v)) depth = std::min(depth, dist[u][v]);
            }
            if (depth > best_depth) {
                best_depth = depth;
                best_v = u;
            }
        }
        return best_v;
    }

    void dfs(const Bits& covered, int cost) {
        ++nodes;
        if (covered.count() == vertex_count) {
            if (cost < best_cost) {
                best_cost = cost;
                best_choice = choice;
            }
            return;
        }
        if (cost + uncovered_packing_bound(covered) >= best_cost) return;

        int u = pick_branch_vertex(covered);
        for (int ci : covering[u]) {
            const BallCandidate& ball = balls[ci];
            if (cost + ball.weight >= best_cost) break;  // sorted by weight
            bool center_used = false;
            for (int prev : choice)
                if (balls[prev].center == ball.center) center_used = true;
            if (center_used) continue;  // co-centred balls are never both needed
            Bits next = covered;
            next.or_with(ball.mask);
            choice.push_back(ci);
            dfs(next, cost + ball.weight);
            choice.pop_back();
        }
    }
};

}  // namespace

GammaBSolveResult exact_gamma_b(const GeneralGraph& g, SolverLimits limits) {
    check_cap(g, limits, "exact_gamma_b");
    auto t0 = Clock::now();
    int vc = g.vertex_count();

    auto dist = all_pairs(g);
    std::vector<int> ecc(vc);
    for (int v = 0; v < vc; ++v) ecc[v] = *std::max_element(dist[v].begin(), dist[v].end());
    int rad = *std::min_element(ecc.begin(), ecc.end());
    int max_ecc = *std::max_element(ecc.begin(), ecc.end());

    GammaBSolveResult res;
    BroadcastAssignment upper = radius_broadcast(g);
    res.optimum = upper.cost();
    res.witness = upper;
    if (vc == 1 || rad <= 1) {  // the radius ball is trivially optimal
        res.nodes_explored = 1;
        res.wall_seconds = seconds_since(t0);
        return res;
    }

    std::vector<BallCandidate> balls;
    for (int v = 0; v < vc; ++v)
        for (int r = 1; r <= std::min(ecc[v], rad); ++r) {
            Bits mask(vc);
            for (int u = 0; u < vc; ++u)
                if (dist[v][u] <= r) mask.set(u);
            balls.push_back(BallCandidate{v, r, std::move(mask)});
        }

    // Drop dominated balls: same-or-less coverage at same-or-higher
    // weight (index order breaks exact ties).
    std::vector<char> dead(balls.size(), 0);
    for (size_t a = 0; a < balls.size(); ++a)
        for (size_t b = 0; b < balls.size(); ++b) {
            if (a == b || dead[a] || dead[b]) continue;
            if (balls[a].weight >= balls[b].weight && balls[a].mask.subset_of(balls[b].mask)) {
                bool tie = balls[a].weight == balls[b].weight &&
                           balls[b].mask.subset_of(balls[a].mask);
                if (!tie || a > b) dead[a] = 1;
            }
        }
    std::vector<BallCandidate> kept;
    for (size_t a = 0; a < balls.size(); ++a)
        if (!dead[a]) kept.push_back(std::move(balls[a]));

    GammaBSearch search{dist, ecc, std::move(kept), {}, vc, max_ecc, res.optimum, {}, {}, 0};
    search.covering.assign(vc, {});
    for (size_t ci = 0; ci < search.balls.size(); ++ci)
        for (int u = 0; u < vc; ++u)
            if (search.balls[ci].mask.test(u)) search.covering[u].push_back(static_cast<int>(ci));
    for (auto& list : search.covering)
        std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
            return search.balls[a].weight < search.balls[b].weight;
        });

    search.dfs(Bits(vc), 0);

    if (!search.best_choice.empty()) {
        BroadcastAssignment found;
        for (int ci : search.best_choice) found.powers[search.balls[ci].center] = search.balls[ci].weight;
        res.optimum = search.best_cost;
        res.witness = std::move(found);
    }
    res.nodes_explored = search.nodes;
    res.wall_seconds = seconds_since(t0);
    if (is_dominating(g, res.witness)) throw std::logic_error("exact_gamma_b: witness not dominating");
    if (res.witness.cost() != res.optimum) throw std::logic_error("exact_gamma_b: witness cost mismatch");
    return res;
}

CrosscheckReport crosscheck_grid(int n, int m, SolverLimits limits) {
    CrosscheckReport rep;
    rep.n = n;
    rep.m = m;
    rep.closed_form_mp = mp_value(n, m);
    rep.grid_radius = grid_radius(GridShape(n, m));

    GeneralGraph g = make_grid(GridShape(n, m));
    rep.oracle_mp = exact_mp(g, 0, limits).optimum;
    rep.oracle_gamma_b = exact_gamma_b(g, limits).optimum;
    rep.construction_size = build_multipacking(n, m).packing.size();

    if (rep.oracle_mp != rep.closed_form_mp)
        rep.discrepancies.push_back(fmt::format("oracle mp {} != closed form {}", rep.oracle_mp,
                                                rep.closed_form_mp));
    if (rep.construction_size != rep.closed_form_mp)
        rep.discrepancies.push_back(fmt::format("construction size {} != closed form {}",
                                                rep.construction_size, rep.closed_form_mp));
    if (n >= 2 && m >= 2 && rep.oracle_gamma_b != rep.grid_radius)
        rep.discrepancies.push_back(fmt::format("oracle gamma_b {} != radius {}",
                                                rep.oracle_gamma_b, rep.grid_radius));
    return rep;
}

}  // namespace gridmp
