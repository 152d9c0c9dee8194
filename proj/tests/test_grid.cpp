#include <doctest.h>

#include <set>

#include "puzzle/grid.hpp"

using namespace puzzle;

TEST_CASE("interval count and boundary sizes") {
    for (int n = 1; n <= 7; ++n) {
        TriangleGrid g(n);
        CHECK(g.N() == 3 * n * (n + 1) / 2);
        CHECK(static_cast<int>(g.triangles().size()) == n * n);
        for (Side s : {Side::left, Side::right, Side::bottom}) CHECK(static_cast<int>(g.boundary(s).size()) == n);
        for (RhombusDir d : {RhombusDir::left, RhombusDir::right, RhombusDir::bottom})
            CHECK(static_cast<int>(g.rhombi(d).size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("every interval lies on one or two triangles") {
    TriangleGrid g(5);
    std::vector<int> uses(g.N() + 1, 0);
    for (const auto& t : g.triangles())
        for (int s : t.sides) ++uses[s];
    int boundary = 0;
    for (int i = 1; i <= g.N(); ++i) {
        CHECK((uses[i] == 1 || uses[i] == 2));
        boundary += uses[i] == 1;
    }
    CHECK(boundary == 15);
}

TEST_CASE("small numbering") {
    TriangleGrid g(2);
    CHECK(g.up(1, 1) == std::array<int, 3>{1, 2, 3});
    CHECK(g.down(2, 1) == std::array<int, 3>{5, 3, 6});
    CHECK(g.triangles()[0].tri == TriRef{true, 1, 1});
    CHECK(g.triangles()[2].tri == TriRef{false, 2, 1});
}

TEST_CASE("boundary sides are disjoint and on the rim") {
    TriangleGrid g(4);
    std::set<int> all;
    for (Side s : {Side::left, Side::right, Side::bottom})
        for (int v : g.boundary(s)) CHECK(all.insert(v).second);
    CHECK(g.boundary(Side::left).front() == g.up(4, 1)[0]);
    CHECK(g.boundary(Side::right).front() == g.up(1, 1)[1]);
    CHECK(g.boundary(Side::bottom).back() == g.up(4, 4)[2]);
}

TEST_CASE("rhombus placements share their middle interval") {
    TriangleGrid g(4);
    for (RhombusDir d : {RhombusDir::left, RhombusDir::right, RhombusDir::bottom})
        for (const auto& r : g.rhombi(d)) {
            auto [su, sd] = rhombus_shared(d);
            CHECK(g.sides(r.up)[su] == r.middle);
            CHECK(g.sides(r.down)[sd] == r.middle);
            CHECK(g.find_rhombus(d, r.up, r.down) == &r);
        }
}

TEST_CASE("polygon placements fit") {
    TriangleGrid g(4);
    for (PolygonShape s : {PolygonShape::up2, PolygonShape::down2, PolygonShape::hexagon})
        for (const auto& p : g.polygons(s)) {
            std::set<int> iv(p.intervals.begin(), p.intervals.end());
            CHECK(iv.size() == p.intervals.size());
            CHECK(p.triangle_sides.size() == p.triangles.size());
        }
    CHECK(g.polygons(PolygonShape::hexagon).size() == 3);
    CHECK(TriangleGrid(2).polygons(PolygonShape::hexagon).empty());
}

TEST_CASE("partitions and words") {
    CHECK(partition_to_binary({8, 7, 6, 5, 4, 3, 2, 1}, 16, 8) == "1010101010101010");
    CHECK(partition_to_binary({6, 5, 4, 3, 2, 1, 1}, 16, 8) == "0010101010101101");
    CHECK(partition_to_binary({}, 4, 2) == "0011");
    for (const char* w : {"010101", "0011", "1100", "1", "0"}) CHECK(partition_to_binary(binary_to_partition(w), static_cast<int>(std::string(w).size()),
                                                                    static_cast<int>(std::count(w, w + std::string(w).size(), '1'))) == w);
    CHECK(word_weight("1100") == 4);
    CHECK(word_weight("0011") == 0);
    CHECK(partition_size({3, 1}) == 4);
    CHECK_FALSE(is_binary_word("0120"));
    CHECK_THROWS(partition_to_binary({5}, 4, 2));
}
