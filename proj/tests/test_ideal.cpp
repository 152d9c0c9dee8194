#include <doctest.h>

#include "helpers.hpp"
#include "puzzle/golden.hpp"
#include "puzzle/groebner.hpp"
#include "puzzle/ideal.hpp"
#include "puzzle/synthesis.hpp"

using namespace puzzle;

TEST_CASE("family sizes") {
    Boundary b{"0101", "0101", "1010"};
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaC));
    PuzzleIdeal I = build_ideal(b, S, IdealKind::full);
    IdealStats st = ideal_stats(I);
    CHECK(I.nvars() == 30);
    CHECK(st.count[0] == 30);              // field equations
    CHECK(st.count[1] == 12);              // boundary
    CHECK(st.count[2] == 16);              // triangle sums
    CHECK(st.count[3] == 16);              // distinguishing
    CHECK(st.count[4] == 18);              // forbidding, every rhombus
    CHECK(st.count[5] == 3);               // three hexagons at n=4
    CHECK(st.quadratic_field == 0);
}

TEST_CASE("kinds nest") {
    Boundary b{"0101", "0011", "0110"};
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaT));
    auto a = ideal_stats(build_ideal(b, S, IdealKind::atomic));
    auto f = ideal_stats(build_ideal(b, S, IdealKind::forbidding));
    CHECK(a.count[4] == 0);
    CHECK(f.count[4] > 0);
    CHECK(f.count[5] == 0);
}

TEST_CASE("side-free ideal has quadratic field equations on the free side") {
    Boundary b{"0101", "0101", std::nullopt};
    PuzzleIdeal I = build_ideal(b, builtin_piece_set(BuiltinId::omega0), IdealKind::side_free);
    CHECK(ideal_stats(I).quadratic_field == 4);
    CHECK(ideal_stats(I).count[1] == 8);
}

TEST_CASE("bad boundaries") {
    auto S = builtin_piece_set(BuiltinId::omega0);
    CHECK_THROWS_AS(build_ideal(Boundary{"01", "011", "101"}, S, IdealKind::full), BadBoundary);
    CHECK_THROWS_AS(build_ideal(Boundary{"01", "11", "10"}, S, IdealKind::full), BadBoundary);
    CHECK_THROWS_AS(build_ideal(Boundary{"0a", "01", "10"}, S, IdealKind::full), BadBoundary);
    CHECK_THROWS_AS(build_ideal(Boundary{std::nullopt, "01", std::nullopt}, S, IdealKind::side_free), BadBoundary);
}

TEST_CASE("dump lists every family") {
    PuzzleIdeal I = build_ideal(Boundary{"01", "01", "10"}, builtin_piece_set(BuiltinId::omega0), IdealKind::full);
    std::string d = dump_ideal(I);
    for (const char* h : {"# F1", "# F2", "# F3", "# F4"}) CHECK(d.find(h) != std::string::npos);
}

namespace {

std::vector<std::vector<std::uint8_t>> variety(const PuzzleIdeal& I) {
    return enumerate_variety(buchberger(I, MonomialOrder::lex(I.nvars())));
}

}  // namespace

TEST_CASE("reference distinguishing polynomials leave varieties unchanged") {
    struct Case {
        BuiltinId id;
        golden::PrintedPoly up, down;
    };
    std::vector<Case> cases = {{BuiltinId::omega0, golden::omega0_distinguishing(), golden::omega0_distinguishing()},
                               {BuiltinId::omegaT, golden::t_up(), golden::t_down()},
                               {BuiltinId::omegaC, golden::c_up(), golden::c_down()}};
    for (const auto& c : cases) {
        auto S = std::make_shared<const PieceSet>(builtin_piece_set(c.id));
        TemplateBundle t = templates_for(*S);
        t.f_up = parse_poly(c.up.text);
        t.f_down = parse_poly(c.down.text);
        for (const auto& l : testutil::words(4, 2))
            for (const auto& n : testutil::words(4, 2)) {
                Boundary b{l, "0101", n};
                CHECK(variety(build_ideal(b, S, IdealKind::full)) == variety(build_ideal(b, S, IdealKind::full, &t)));
            }
    }
    auto S0 = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omega0));
    TemplateBundle t0 = templates_for(*S0);
    t0.f_up = t0.f_down = parse_poly(golden::omega0_distinguishing().text);
    CHECK(variety(build_ideal(golden::n6_boundary(), S0, IdealKind::full, &t0)).size() == 2);
}
