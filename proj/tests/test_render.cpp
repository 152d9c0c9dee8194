#include <doctest.h>

#include "puzzle/golden.hpp"
#include "puzzle/render.hpp"

using namespace puzzle;

namespace {

Tiling single() {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omega0));
    return point_to_tiling({0, 0, 0}, std::make_shared<const TriangleGrid>(1), S);
}

}  // namespace

TEST_CASE("one triangle") {
    Tiling t = single();
    CHECK(render_ascii(t) == "0\n");
    RenderOptions o;
    o.labels = true;
    CHECK(render_ascii(t, o) == "0\nup(1,1) 0/0/0\n");
    std::string svg = render_svg(t, o);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("#f08080") != std::string::npos);
    CHECK(svg.find(">0</text>") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaT));
    ConstantResult r = constant(golden::equivariant_boundary(), S, Backend::oracle, true);
    REQUIRE(!r.tilings.empty());
    for (const auto& t : r.tilings) {
        CHECK(render_svg(t) == render_svg(t));
        CHECK(render_ascii(t) == render_ascii(t));
        Tiling copy = point_to_tiling(t.values, t.grid, t.pieces);
        CHECK(render_svg(copy) == render_svg(t));
    }
}

TEST_CASE("equivariant pieces are annotated") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaT));
    ConstantResult r = constant(golden::equivariant_boundary(), S, Backend::oracle, true);
    for (const auto& t : r.tilings)
        if (golden::figure_pieces(t) == golden::equivariant_panel()) {
            std::string svg = render_svg(t);
            CHECK(svg.find("#1f6b2a") != std::string::npos);
            CHECK(svg.find(">(5,1)<") != std::string::npos);
            CHECK(svg.find(">(6,5)<") != std::string::npos);
            std::string a = render_ascii(t);
            CHECK(std::count(a.begin(), a.end(), 'E') == 4);
        }
}

TEST_CASE("ascii shape") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omega0));
    ConstantResult r = constant(golden::n6_boundary(), S, Backend::oracle, true);
    for (const auto& t : r.tilings) {
        std::string a = render_ascii(t);
        CHECK(std::count(a.begin(), a.end(), '\n') == 6);
        CHECK(a.find('*') == std::string::npos);
    }
}

TEST_CASE("polygon pieces are drawn") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaC));
    for (const char* nu : {"0011", "0101", "0110", "1001", "1010", "1100"}) {
        ConstantResult r = constant(Boundary{"0011", "0101", nu}, S, Backend::oracle, true);
        for (const auto& t : r.tilings) {
            bool poly = std::any_of(t.recovered.begin(), t.recovered.end(),
                                    [](const RecoveredPiece& p) { return p.kind == RecoveredPiece::Kind::polygon; });
            std::string a = render_ascii(t);
            CHECK((a.find('P') != std::string::npos) == poly);
            if (poly) CHECK(render_svg(t).find("#f2d27a") != std::string::npos);
        }
    }
}
