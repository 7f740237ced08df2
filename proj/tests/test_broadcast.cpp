#include <doctest.h>

#include <random>

#include "gridmp/broadcast.hpp"
#include "gridmp/multipacking.hpp"

using namespace gridmp;

TEST_CASE("cost sums the stored powers") {
    BroadcastAssignment b;
    CHECK(b.cost() == 0);
    b.powers[5] = 4;
    CHECK(b.cost() == 4);
    b.powers[0] = 2;
    b.powers[7] = 3;
    CHECK(b.cost() == 9);
}

TEST_CASE("is_dominating") {
    GridShape shape(4, 4);
    GeneralGraph g = make_grid(shape);

    BroadcastAssignment center;
    center.powers[shape.id(1, 1)] = 4;  // ecc((1,1)) = 4
    CHECK_FALSE(is_dominating(g, center));

    BroadcastAssignment weak;
    weak.powers[shape.id(1, 1)] = 3;
    auto u = is_dominating(g, weak);
    REQUIRE(u.has_value());
    CHECK(u->vertex == shape.id(3, 3));  // only (3,3) is at distance 4

    GeneralGraph p9 = make_path(9);
    BroadcastAssignment thirds;
    thirds.powers[1] = thirds.powers[4] = thirds.powers[7] = 1;
    CHECK_FALSE(is_dominating(p9, thirds));
    CHECK(thirds.cost() == 3);

    BroadcastAssignment empty;
    auto w = is_dominating(p9, empty);
    REQUIRE(w.has_value());
    CHECK(w->vertex == 0);
}

TEST_CASE("is_dominating input errors") {
    GeneralGraph p3 = make_path(3);
    BroadcastAssignment oob;
    oob.powers[5] = 1;
    CHECK_THROWS_AS((void)is_dominating(p3, oob), std::invalid_argument);
    BroadcastAssignment zero;
    zero.powers[0] = 0;
    CHECK_THROWS_AS((void)is_dominating(p3, zero), std::invalid_argument);
}

TEST_CASE("radius_broadcast") {
    CHECK(radius_broadcast(make_grid(GridShape(8, 8))).cost() == 8);
    CHECK(radius_broadcast(make_grid(GridShape(5, 7))).cost() == 5);

    // single vertex: radius 0 but powers must be positive
    BroadcastAssignment k1 = radius_broadcast(make_path(1));
    CHECK(k1.cost() == 1);
    CHECK_FALSE(is_dominating(make_path(1), k1));

    for (int n = 2; n <= 9; ++n)
        for (int m = 1; m <= 5; ++m) {
            GeneralGraph g = make_grid(GridShape(n, m));
            BroadcastAssignment b = radius_broadcast(g);
            CHECK(b.cost() == radius(g));
            CHECK_FALSE(is_dominating(g, b));
        }
}

TEST_CASE("weak duality on random small instances") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 7)(rng);
        int m = std::uniform_int_distribution<int>(1, 7)(rng);
        GridShape shape(n, m);
        GeneralGraph g = make_grid(shape);

        // greedy multipacking in shuffled order
        std::vector<int> order(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> members;
        for (int v : order) {
            members.push_back(v);
            if (is_multipacking(g, members)) members.pop_back();
        }
        REQUIRE_FALSE(is_multipacking(g, members));

        BroadcastAssignment b = radius_broadcast(g);
        REQUIRE_FALSE(is_dominating(g, b));
        CHECK(static_cast<int>(members.size()) <= b.cost());
    }
}
