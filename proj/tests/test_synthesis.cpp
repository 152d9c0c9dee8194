#include <doctest.h>

#include "puzzle/golden.hpp"
#include "puzzle/ideal.hpp"
#include "puzzle/synthesis.hpp"
#include "puzzle/tables.hpp"

using namespace puzzle;

TEST_CASE("synthesized templates satisfy their tables") {
    for (BuiltinId id : all_builtins()) {
        CAPTURE(builtin_name(id));
        PieceSet s = builtin_piece_set(id);
        TemplateBundle t = synthesize(s);
        CHECK(check_distinguishing(t.f_up, s, true).ok());
        CHECK(check_distinguishing(t.f_down, s, false).ok());
        for (int d = 0; d < 3; ++d) CHECK(check_forbidding(t.f_rhombus[d], s, static_cast<RhombusDir>(d)).ok());
        for (std::size_t i = 0; i < s.implicit.size(); ++i) {
            CHECK(check_implying(t.f_implying[i], s, s.implicit[i]).ok());
            CHECK(check_edge(t.f_edge[i], s, s.implicit[i]).ok());
        }
    }
}

TEST_CASE("nothing to forbid gives the zero polynomial") {
    PieceSet s = builtin_piece_set(BuiltinId::omega0);
    for (int d = 0; d < 3; ++d) CHECK(synth_forbidding(s, static_cast<RhombusDir>(d)).is_zero());
    std::vector<AtomicPiece> ups;
    for (const auto& a : atomic_universe())
        if (a.up) ups.push_back(a);
    CHECK(synth_distinguishing(ups, true).is_zero());
}

TEST_CASE("implying polynomials of one polygon agree on its refinement") {
    for (BuiltinId id : {BuiltinId::omegaA, BuiltinId::omegaB, BuiltinId::omegaC, BuiltinId::omegaD}) {
        PieceSet s = builtin_piece_set(id);
        TemplateBundle t = synthesize(s);
        for (std::size_t i = 0; i < s.implicit.size(); ++i) {
            const auto& ref = s.polygons[s.implicit[i].polygon].refinement;
            CHECK(poly_eval(t.f_implying[i], ref).is_zero());
        }
    }
}

TEST_CASE("fixed-support solve matches the requested rows") {
    std::vector<std::pair<std::vector<Val>, Val>> rows = {{{0, 0}, 1}, {{1, 2}, 0}, {{2, 2}, 2}};
    PolyF3 f = synth_from_table(2, rows);
    for (const auto& [pt, v] : rows) CHECK(poly_eval(f, pt).value() == v);
}

TEST_CASE("reference distinguishing polynomials") {
    PieceSet s0 = builtin_piece_set(BuiltinId::omega0);
    PieceSet st = builtin_piece_set(BuiltinId::omegaT);
    PieceSet sc = builtin_piece_set(BuiltinId::omegaC);
    auto P = [](const golden::PrintedPoly& p) { return parse_poly(p.text); };
    CHECK(check_distinguishing(P(golden::omega0_distinguishing()), s0, true).ok());
    CHECK(check_distinguishing(P(golden::omega0_distinguishing()), s0, false).ok());
    CHECK(check_distinguishing(P(golden::t_up()), st, true).ok());
    CHECK(check_distinguishing(P(golden::t_down()), st, false).ok());
    CHECK(check_distinguishing(P(golden::c_up()), sc, true).ok());
    CHECK(check_distinguishing(P(golden::c_down()), sc, false).ok());
}

TEST_CASE("reference forbidding polynomials") {
    PieceSet st = builtin_piece_set(BuiltinId::omegaT);
    PieceSet sc = builtin_piece_set(BuiltinId::omegaC);
    PolyF3 ft = parse_poly(golden::t_rhombus().text);
    auto chk = check_forbidding5(ft, st, RhombusDir::bottom, {0, 1, 2, 3, 5});
    CHECK(chk.ok());
    CHECK(chk.rows == 12);
    for (const auto& [pt, v] : golden::t_rhombus_table()) CHECK(poly_eval(ft, pt).value() == v);
    CHECK(check_forbidding5(parse_poly(golden::c_rhombus().text), sc, RhombusDir::left, {1, 2, 0, 4, 3}).ok());
}

TEST_CASE("reference hexagon polynomial table") {
    PolyF3 g = parse_poly(golden::c_hexagon().text);
    // The printed form vanishes at (2,2,1,2) and not at (2,1,1,2).
    CHECK(poly_eval(g, std::vector<Val>{2, 2, 1, 2}).is_zero());
    CHECK(poly_eval(g, std::vector<Val>{2, 1, 1, 2}).value() == 2);
    PolyF3 alt = g - parse_poly("2*x1^2*x2^2*x3*x4") + parse_poly("2*x1*x2^2*x3*x4");
    for (const auto& [pt, zero] : golden::c_hexagon_table()) CHECK(poly_eval(alt, pt).is_zero() == zero);
}
