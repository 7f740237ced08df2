#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridmp/broadcast.hpp"
#include "gridmp/multipacking.hpp"

namespace gridmp {

// Requested grid falls outside the cases a construction handles.
struct InapplicableCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Path-index selection: every third index 0, 3, ..., 3(i-1), then every
// fourth starting at 3i, clipped to [0, z-1]. Selects exactly
// ceil((z+i)/4) indices. Requires 3i <= z.
std::vector<int> i_pattern_indices(int z, int i);

// Upper bound ceil((len+1+i)/4) on how many pattern indices any window
// of len+1 consecutive path indices can hit.
int pattern_window_bound(int i, int len);

// Periodic optimal packings for grids of height 1, 2, and 3 (the
// height-1 case is the every-third-vertex path packing).
Multipacking height1_packing(int n);
Multipacking height2_packing(int n);
Multipacking height3_packing(int n);

// Perimeter packing for even n, m >= 8: i-patterns on the four sides,
// each side a path with the 3 vertices before the next corner removed.
// Size n/2 + m/2.
Multipacking large_grid_packing(int n, int m);

// Top-and-bottom-only packing for m in {4, 6} and even n, where the
// aspect ratio permits. Size n/2 + m/2.
Multipacking long_grid_packing(int n, int m);

// Hard-coded optimal sets for the handful of grids the periodic and
// perimeter schemes miss (and their transposes).
std::optional<Multipacking> table_packing(int n, int m);

enum class Axis { X, Y };

// Grow the grid by one line along `axis` at `position`; members at or
// past the position shift by one. Interior positions preserve validity.
Multipacking insert_blank_line(const Multipacking& mp, Axis axis, int position);

// Closed-form multipacking number of the n-by-m grid.
int mp_value(int n, int m);

struct ConstructionPlan {
    GridShape shape;
    std::vector<std::string> methods;  // outermost reduction first
    int expected_size = 0;
};

struct BuiltPacking {
    Multipacking packing;
    ConstructionPlan plan;
};

// Dispatches over the construction cases; result is always a valid
// multipacking of size mp_value(n, m).
BuiltPacking build_multipacking(int n, int m);

struct DualityCertificate {
    int value = 0;
    std::vector<int> multipacking;  // vertex ids
    BroadcastAssignment broadcast;
};

struct CertifyResult {
    std::optional<DualityCertificate> certificate;
    std::string failure;  // empty iff certified

    bool ok() const { return certificate.has_value(); }
};

// Equal-value feasible pair => both optimal (weak duality).
CertifyResult certify_optimality(const GeneralGraph& g, std::span<const int> members,
                                 const BroadcastAssignment& b);

Multipacking transpose(const Multipacking& mp);

}  // namespace gridmp
