#include <doctest.h>

#include <random>
#include <set>

#include "gridmp/constructions.hpp"

using namespace gridmp;

namespace {

std::set<std::pair<int, int>> as_set(const Multipacking& mp) {
    std::set<std::pair<int, int>> s;
    for (const Vertex& v : mp.members) s.insert({v.x, v.y});
    return s;
}

}  // namespace

TEST_CASE("i_pattern_indices examples") {
    CHECK(i_pattern_indices(13, 1) == std::vector<int>{0, 3, 7, 11});
    CHECK(i_pattern_indices(15, 2) == std::vector<int>{0, 3, 6, 10, 14});
    CHECK(i_pattern_indices(15, 0) == std::vector<int>{0, 4, 8, 12});
    CHECK(i_pattern_indices(3, 1) == std::vector<int>{0});
    CHECK_THROWS_AS(i_pattern_indices(5, 2), InapplicableCase);
    CHECK_THROWS_AS(i_pattern_indices(0, 0), std::invalid_argument);
}

TEST_CASE("pattern size law: exactly ceil((z+i)/4) indices") {
    for (int i = 0; i <= 8; ++i)
        for (int z = std::max(3 * i, 1); z <= 120; ++z)
            REQUIRE(static_cast<int>(i_pattern_indices(z, i).size()) == (z + i + 3) / 4);
}

TEST_CASE("pattern density law: windows of length l hit at most ceil((l+1+i)/4)") {
    CHECK(pattern_window_bound(1, 7) == 3);
    CHECK(pattern_window_bound(0, 0) == 1);
    CHECK(pattern_window_bound(2, 5) == 2);

    for (int i = 0; i <= 8; ++i)
        for (int z = std::max(3 * i, 1); z <= 120; ++z) {
            std::vector<char> hit(z, 0);
            for (int t : i_pattern_indices(z, i)) hit[t] = 1;
            std::vector<int> prefix(z + 1, 0);
            for (int t = 0; t < z; ++t) prefix[t + 1] = prefix[t] + hit[t];
            for (int len = 0; len <= 60; ++len)
                for (int start = 0; start + len < z; ++start)
                    REQUIRE(prefix[start + len + 1] - prefix[start] <=
                            pattern_window_bound(i, len));
        }
}

TEST_CASE("pattern gaps are 3 or 4 and the pattern starts at 0") {
    for (int i = 0; i <= 8; ++i)
        for (int z = std::max(3 * i, 1); z <= 120; ++z) {
            auto idx = i_pattern_indices(z, i);
            REQUIRE(idx.front() == 0);
            for (size_t j = 1; j < idx.size(); ++j) {
                int gap = idx[j] - idx[j - 1];
                REQUIRE(gap >= 3);
                REQUIRE(gap <= 4);
            }
        }
}

TEST_CASE("height-2 packing") {
    CHECK(as_set(height2_packing(5)) == std::set<std::pair<int, int>>{{0, 0}, {2, 1}});
    CHECK(height2_packing(1).size() == 1);
    CHECK(height2_packing(12).size() == 5);
    for (int n = 1; n <= 30; ++n) {
        Multipacking p = height2_packing(n);
        CHECK(p.size() == (2 * n + 4) / 5);
        CHECK_FALSE(is_multipacking(p));
    }
}

TEST_CASE("height-3 packing") {
    CHECK(as_set(height3_packing(4)) == std::set<std::pair<int, int>>{{0, 0}, {1, 2}});
    CHECK(as_set(height3_packing(5)) ==
          std::set<std::pair<int, int>>{{0, 0}, {1, 2}, {4, 0}});
    CHECK(height3_packing(1).size() == 1);
    for (int n = 1; n <= 30; ++n) {
        Multipacking p = height3_packing(n);
        CHECK(p.size() == n / 2 + (n % 4 != 0 ? 1 : 0));
        CHECK_FALSE(is_multipacking(p));
    }
}

TEST_CASE("large grid packing matches the published selections") {
    Multipacking p16 = large_grid_packing(16, 16);
    CHECK(p16.size() == 16);
    auto s16 = as_set(p16);
    for (int x : {0, 3, 7, 11}) CHECK(s16.contains({x, 15}));   // top, 1-pattern
    for (int x : {15, 12, 8, 4}) CHECK(s16.contains({x, 0}));   // bottom, mirrored

    Multipacking p18 = large_grid_packing(18, 18);
    CHECK(p18.size() == 18);
    auto s18 = as_set(p18);
    for (int x : {0, 3, 6, 10, 14}) CHECK(s18.contains({x, 17}));  // 2-pattern
    for (int x : {17, 13, 9, 5}) CHECK(s18.contains({x, 0}));      // 0-pattern

    Multipacking p810 = large_grid_packing(8, 10);
    CHECK(p810.size() == 9);
    CHECK_FALSE(is_multipacking(p810));

    CHECK_THROWS_AS(large_grid_packing(6, 8), InapplicableCase);
    CHECK_THROWS_AS(large_grid_packing(9, 8), InapplicableCase);
}

TEST_CASE("all four corners belong to every large-grid packing") {
    for (int n = 8; n <= 20; n += 2)
        for (int m = 8; m <= 20; m += 2) {
            auto s = as_set(large_grid_packing(n, m));
            CHECK(s.contains({0, 0}));
            CHECK(s.contains({n - 1, 0}));
            CHECK(s.contains({0, m - 1}));
            CHECK(s.contains({n - 1, m - 1}));
        }
}

TEST_CASE("long grid packing") {
    CHECK(as_set(long_grid_packing(4, 4)) ==
          std::set<std::pair<int, int>>{{0, 3}, {3, 3}, {3, 0}, {0, 0}});

    Multipacking p104 = long_grid_packing(10, 4);  // k = 5 odd: stretched 0-pattern below
    CHECK(p104.size() == 7);
    CHECK_FALSE(is_multipacking(p104));

    Multipacking p106 = long_grid_packing(10, 6);  // k = 5, k' = 3: 3-patterns
    CHECK(p106.size() == 8);
    CHECK_FALSE(is_multipacking(p106));

    CHECK_THROWS_AS(long_grid_packing(6, 6), InapplicableCase);
    CHECK_THROWS_AS(long_grid_packing(12, 6), InapplicableCase);
    CHECK_THROWS_AS(long_grid_packing(6, 4), InapplicableCase);
    CHECK_THROWS_AS(long_grid_packing(10, 8), InapplicableCase);
}

TEST_CASE("table packings") {
    auto t65 = table_packing(6, 5);
    REQUIRE(t65.has_value());
    CHECK(t65->size() == 5);
    CHECK_FALSE(is_multipacking(*t65));

    auto t126 = table_packing(12, 6);
    REQUIRE(t126.has_value());
    CHECK(t126->size() == 9);

    auto t64 = table_packing(6, 4);
    REQUIRE(t64.has_value());
    CHECK(t64->size() == 4);
    CHECK_FALSE(is_multipacking(*t64));

    // transposes
    auto t56 = table_packing(5, 6);
    REQUIRE(t56.has_value());
    CHECK(t56->shape == GridShape(5, 6));
    CHECK_FALSE(is_multipacking(*t56));

    CHECK_FALSE(table_packing(9, 9).has_value());
}

TEST_CASE("insert_blank_line") {
    auto t65 = *table_packing(6, 5);
    Multipacking grown = insert_blank_line(t65, Axis::X, 3);
    CHECK(grown.shape == GridShape(7, 5));
    CHECK(grown.size() == 5);
    CHECK_FALSE(is_multipacking(grown));

    Multipacking wide = insert_blank_line(large_grid_packing(16, 16), Axis::X, 8);
    CHECK(wide.shape == GridShape(17, 16));
    CHECK(wide.size() == 16);
    CHECK_FALSE(is_multipacking(wide));

    Multipacking none(GridShape(4, 4), {});
    CHECK(insert_blank_line(none, Axis::Y, 2).shape == GridShape(4, 5));

    CHECK_THROWS_AS(insert_blank_line(t65, Axis::X, 0), std::invalid_argument);
    CHECK_THROWS_AS(insert_blank_line(t65, Axis::X, 7), std::invalid_argument);
}

TEST_CASE("interior blank lines preserve validity at every position") {
    std::mt19937 rng(4);
    std::vector<Multipacking> bases{*table_packing(6, 5), *table_packing(8, 6),
                                    large_grid_packing(10, 8), long_grid_packing(12, 4)};
    for (const Multipacking& base : bases)
        for (int trial = 0; trial < 8; ++trial) {
            Axis axis = std::uniform_int_distribution<int>(0, 1)(rng) ? Axis::X : Axis::Y;
            int extent = axis == Axis::X ? base.shape.n : base.shape.m;
            int pos = std::uniform_int_distribution<int>(1, extent - 1)(rng);
            CHECK_FALSE(is_multipacking(insert_blank_line(base, axis, pos)));
        }
}

TEST_CASE("mp_value closed form") {
    CHECK(mp_value(6, 4) == 4);
    CHECK(mp_value(4, 6) == 4);
    CHECK(mp_value(9, 7) == 7);
    CHECK(mp_value(11, 2) == 5);
    CHECK(mp_value(1, 1) == 1);
    CHECK(mp_value(7, 1) == 3);
    CHECK(mp_value(8, 3) == 4);
    CHECK(mp_value(9, 3) == 5);
    CHECK_THROWS_AS(mp_value(0, 3), std::invalid_argument);
    // transpose symmetry
    for (int n = 1; n <= 15; ++n)
        for (int m = 1; m <= 15; ++m) REQUIRE(mp_value(n, m) == mp_value(m, n));
}

TEST_CASE("build_multipacking is valid with the expected size for all grids up to 40") {
    for (int n = 1; n <= 40; ++n)
        for (int m = 1; m <= 40; ++m) {
            BuiltPacking built = build_multipacking(n, m);  // throws on any defect
            REQUIRE(built.packing.size() == mp_value(n, m));
            REQUIRE(built.packing.shape == GridShape(n, m));
        }
}

TEST_CASE("construction plans record the case chain") {
    BuiltPacking p75 = build_multipacking(7, 5);
    CHECK(p75.plan.methods == std::vector<std::string>{"odd-reduction", "table"});
    CHECK(p75.packing.size() == 5);

    CHECK(build_multipacking(24, 18).plan.methods == std::vector<std::string>{"large"});
    CHECK(build_multipacking(24, 18).packing.size() == 21);

    CHECK(build_multipacking(14, 4).plan.methods == std::vector<std::string>{"long"});
    CHECK(build_multipacking(14, 4).packing.size() == 9);

    CHECK(build_multipacking(9, 1).plan.methods ==
          std::vector<std::string>{"height1-extension"});
}

TEST_CASE("certify_optimality") {
    GridShape shape(10, 10);
    GeneralGraph g = make_grid(shape);
    BuiltPacking built = build_multipacking(10, 10);
    std::vector<int> ids;
    for (const Vertex& v : built.packing.members) ids.push_back(shape.id(v.x, v.y));
    CertifyResult good = certify_optimality(g, ids, radius_broadcast(g));
    REQUIRE(good.ok());
    CHECK(good.certificate->value == 10);

    // the duality-gap grid: 4 vs 5
    GridShape gap(6, 4);
    GeneralGraph gg = make_grid(gap);
    std::vector<int> gap_ids;
    for (const Vertex& v : build_multipacking(6, 4).packing.members)
        gap_ids.push_back(gap.id(v.x, v.y));
    CertifyResult bad = certify_optimality(gg, gap_ids, radius_broadcast(gg));
    CHECK_FALSE(bad.ok());
    CHECK(bad.failure.find("value mismatch") != std::string::npos);

    GeneralGraph c6 = make_cycle(6);
    BroadcastAssignment f;
    f.powers[0] = f.powers[3] = 1;
    CertifyResult cyc = certify_optimality(c6, std::vector<int>{0, 3}, f);
    REQUIRE(cyc.ok());
    CHECK(cyc.certificate->value == 2);
}
