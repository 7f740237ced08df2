#pragma once

#include <string>
#include <vector>

#include "gridmp/broadcast.hpp"
#include "gridmp/graph.hpp"
#include "gridmp/multipacking.hpp"

namespace gridmp {

struct SolverLimits {
    int vertex_cap = 64;
};

struct MpSolveResult {
    int optimum = 0;
    std::vector<int> witness;  // vertex ids, sorted
    long long nodes_explored = 0;
    double wall_seconds = 0.0;
};

struct GammaBSolveResult {
    int optimum = 0;
    BroadcastAssignment witness;
    long long nodes_explored = 0;
    double wall_seconds = 0.0;
};

// Exact maximum multipacking via branch and bound over vertex
// inclusion: upper bound radius(g), incremental ball-count feasibility,
// candidates ordered by degree then id.
MpSolveResult exact_mp(const GeneralGraph& g, int initial_lower_bound = 0,
                       SolverLimits limits = {});

// Exact minimum dominating broadcast as weighted set cover over balls
// (v, r), weight r. Branches on the balls covering a deepest uncovered
// vertex; lower-bounded by a greedy multipacking of the uncovered set.
GammaBSolveResult exact_gamma_b(const GeneralGraph& g, SolverLimits limits = {});

struct CrosscheckReport {
    int n = 0, m = 0;
    int oracle_mp = 0;
    int oracle_gamma_b = 0;
    int closed_form_mp = 0;
    int grid_radius = 0;  // the closed-form broadcast number
    int construction_size = 0;
    std::vector<std::string> discrepancies;

    bool consistent() const { return discrepancies.empty(); }
};

// Runs both oracles on the n-by-m grid and compares them against the
// closed forms and the constructive packing.
CrosscheckReport crosscheck_grid(int n, int m, SolverLimits limits = {});

}  // namespace gridmp
