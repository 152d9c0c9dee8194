#include <doctest.h>

#include <algorithm>

#include "puzzle/pieces.hpp"

using namespace puzzle;

TEST_CASE("atomic universe") {
    auto u = atomic_universe();
    CHECK(u.size() == 18);
    for (const auto& a : u) CHECK(a.atomic());
    CHECK(std::count_if(u.begin(), u.end(), [](const AtomicPiece& a) { return a.up; }) == 9);
}

TEST_CASE("builtin names parse") {
    for (BuiltinId id : all_builtins()) CHECK(parse_builtin_id(builtin_name(id)) == id);
    CHECK(parse_builtin_id("\xCE\xA9T") == BuiltinId::omegaT);
    CHECK(parse_builtin_id("c") == BuiltinId::omegaC);
    CHECK_FALSE(parse_builtin_id("Omega9"));
}

TEST_CASE("omega0 refinement") {
    PieceSet s = builtin_piece_set(BuiltinId::omega0);
    for (auto v : {std::array<Val, 3>{0, 0, 0}, {1, 1, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}})
        CHECK(s.in_refined(AtomicPiece{true, v}));
    for (auto v : {std::array<Val, 3>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 2, 2}}) CHECK_FALSE(s.in_refined(AtomicPiece{true, v}));
    CHECK(s.forbidden.empty());
    CHECK(s.implicit.empty());
    CHECK(s.separable);
}

TEST_CASE("every builtin is separable and refines to atomic pieces") {
    for (BuiltinId id : all_builtins()) {
        CAPTURE(builtin_name(id));
        PieceSet s = builtin_piece_set(id);
        CHECK(s.separable);
        for (const auto& a : s.refined) CHECK(a.atomic());
        CHECK(std::is_sorted(s.refined.begin(), s.refined.end()));
    }
}

TEST_CASE("only T carries equivariant pieces; only A-D carry polygons") {
    for (BuiltinId id : all_builtins()) {
        PieceSet s = builtin_piece_set(id);
        CHECK(s.equivariant_pieces().empty() == (id != BuiltinId::omegaT));
        bool k = id == BuiltinId::omegaA || id == BuiltinId::omegaB || id == BuiltinId::omegaC || id == BuiltinId::omegaD;
        CHECK(s.polygons.empty() == !k);
        CHECK(s.implicit.empty() == !k);
    }
}

TEST_CASE("T and C have two forbidden rhombi") {
    PieceSet t = builtin_piece_set(BuiltinId::omegaT);
    PieceSet c = builtin_piece_set(BuiltinId::omegaC);
    CHECK(t.forbidden.size() == 2);
    CHECK(c.forbidden.size() == 2);
    for (const auto& f : c.forbidden) CHECK(f.dir == RhombusDir::left);
    for (const auto& f : t.forbidden) CHECK(f.dir == RhombusDir::bottom);
}

TEST_CASE("rhombus halves are atomic") {
    for (RhombusDir d : {RhombusDir::left, RhombusDir::right, RhombusDir::bottom}) {
        PieceSet s = builtin_piece_set(BuiltinId::omega0);
        for (const auto& o : s.psi(d)) {
            auto mid = rhombus_middle_value(d, o);
            REQUIRE(mid);
            auto [u, w] = rhombus_halves(d, o, *mid);
            CHECK(u.atomic());
            CHECK(w.atomic());
        }
    }
}

TEST_CASE("stitch merges only 2-sides") {
    // up(1,1), up(2,1), down(2,1), up(2,2); the middle pair meets on a 2.
    TriangleGrid g(2);
    std::vector<AtomicPiece> tris = {{true, {0, 0, 0}}, {true, {0, 2, 1}}, {false, {2, 0, 1}}, {true, {1, 1, 1}}};
    auto index = [](const TriRef& t) { return (t.r - 1) * (t.r - 1) + 2 * (t.y - 1) + (t.up ? 0 : 1); };
    std::vector<RhombusLink> links;
    for (int d = 0; d < 3; ++d)
        for (const auto& r : g.rhombi(static_cast<RhombusDir>(d))) links.push_back({r.dir, index(r.up), index(r.down)});
    auto st = stitch(tris, links);
    CHECK(st.size() == 3);
    REQUIRE(std::count_if(st.begin(), st.end(), [](const StitchedPiece& p) { return p.kind == StitchedPiece::Kind::rhombus; }) == 1);
    for (const auto& p : st)
        if (p.kind == StitchedPiece::Kind::rhombus) {
            CHECK(p.tri_a == 1);
            CHECK(p.tri_b == 2);
            CHECK(p.dir == RhombusDir::right);
        }
}

TEST_CASE("piece-set text round trip") {
    for (BuiltinId id : all_builtins()) {
        PieceSet a = builtin_piece_set(id);
        PieceSet b = parse_piece_set(format_piece_set(a));
        CHECK(a.refined == b.refined);
        CHECK(a.rhombi.size() == b.rhombi.size());
        CHECK(a.polygons.size() == b.polygons.size());
    }
    CHECK_THROWS(parse_piece_set("triangle up 0 1\n"));
}
