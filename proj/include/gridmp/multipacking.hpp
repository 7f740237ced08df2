#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gridmp/graph.hpp"

namespace gridmp {

// Candidate multipacking on a grid. Members are kept sorted by (y, x)
// and duplicate-free; validity is decided by is_multipacking.
struct Multipacking {
    GridShape shape;
    std::vector<Vertex> members;

    int size() const { return static_cast<int>(members.size()); }
};

// Negative certificate: the ball of the given radius around `center`
// holds `count` > `radius` members.
struct ViolationWitness {
    int center_id = 0;
    int radius = 0;
    int count = 0;
};

struct Ratio {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }
};

// O(1) L1-ball member counting. Under the rotation u = x+y, w = x-y
// an L1 ball becomes an axis-aligned square, answered from a 2D
// prefix-sum table over the rotated member coordinates.
class GridBallCounter {
  public:
    GridBallCounter(const GridShape& shape, std::span<const Vertex> members);
    int count(Vertex center, int r) const;

  private:
    GridShape shape_;
    int side_ = 0;  // rotated lattice extent, n + m - 1
    std::vector<long long> prefix_;
};

// Naive counters; the oracles for the prefix-sum fast path.
int ball_count(const GridShape& shape, std::span<const Vertex> members, Vertex center, int r);
int ball_count(const GeneralGraph& g, std::span<const int> members, int center, int r);

// nullopt means valid. A witness is minimal in (radius, center id).
// Throws std::invalid_argument on out-of-bounds or duplicate members.
std::optional<ViolationWitness> is_multipacking(const GridShape& shape,
                                                std::span<const Vertex> members);
std::optional<ViolationWitness> is_multipacking(const Multipacking& mp);
std::optional<ViolationWitness> is_multipacking(const GeneralGraph& g,
                                                std::span<const int> members,
                                                int all_pairs_cap = 4096);

// max over centers v and radii r in [1, ecc(v)] of count/r; <= 1 iff valid.
Ratio max_violation_ratio(const GridShape& shape, std::span<const Vertex> members);
Ratio max_violation_ratio(const GeneralGraph& g, std::span<const int> members);

}  // namespace gridmp
