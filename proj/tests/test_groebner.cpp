#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "puzzle/groebner.hpp"
#include "puzzle/ideal.hpp"

using namespace puzzle;

namespace {

// Points of F3^n where every generator vanishes, by brute force.
std::vector<std::vector<std::uint8_t>> brute_variety(const std::vector<PolyF3>& gens, int n) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> p(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& g : gens) ok = ok && poly_eval(g, p).is_zero();
        if (ok) out.push_back(p);
        int i = n - 1;
        while (i >= 0 && p[i] == 2) p[i--] = 0;
        if (i < 0) break;
        ++p[i];
    }
    return out;
}

}  // namespace

TEST_CASE("random systems: basis variety equals brute force, certified") {
    std::mt19937 rng(3);
    for (int it = 0; it < 60; ++it) {
        int n = 4;
        std::vector<PolyF3> gens;
        for (int g = 0; g < 3; ++g) gens.push_back(testutil::random_poly(rng, n, 4));
        GroebnerBasis gb = buchberger(gens, MonomialOrder::lex(n));
        CHECK(enumerate_variety(gb) == brute_variety(gens, n));
        Certificate c = certify(gb, gens);
        CHECK(c.ok);
        for (const auto& e : gb.elements) CHECK(e.terms().front().coeff == F3(1));
    }
}

TEST_CASE("normal form is linear and idempotent") {
    std::mt19937 rng(5);
    std::vector<PolyF3> gens = {parse_poly("x1*x2 + x3"), parse_poly("x2^2 + 2*x4 + 1"), parse_poly("x1 + x3*x4")};
    GroebnerBasis gb = buchberger(gens, MonomialOrder::lex(4));
    for (int it = 0; it < 100; ++it) {
        PolyF3 p = testutil::random_poly(rng, 4, 6), q = testutil::random_poly(rng, 4, 6);
        F3 a(static_cast<int>(rng() % 3));
        CHECK(normal_form(p + q * a, gb) == normal_form(p, gb) + normal_form(q, gb) * a);
        CHECK(normal_form(normal_form(p, gb), gb) == normal_form(p, gb));
        // Multiples of generators reduce to zero.
        CHECK(normal_form(p * gens[it % 3], gb).is_zero());
    }
}

TEST_CASE("unit ideal") {
    GroebnerBasis gb = buchberger({parse_poly("x1 + 1"), parse_poly("x1")}, MonomialOrder::lex(1));
    CHECK(gb.is_unit());
    CHECK(enumerate_variety(gb).empty());
    // x^2 + 1 has no root in F3.
    CHECK(buchberger({parse_poly("x1^2 + 1")}, MonomialOrder::lex(1)).is_unit());
}

TEST_CASE("field equations are implicit") {
    GroebnerBasis gb = buchberger(std::vector<PolyF3>{}, MonomialOrder::lex(2));
    CHECK(gb.elements.empty());
    CHECK(enumerate_variety(gb).size() == 9);
    CHECK(certify(gb).ok);
}

TEST_CASE("a broken basis fails certification") {
    GroebnerBasis gb = buchberger({parse_poly("x1*x2 + 1"), parse_poly("x2 + x3")}, MonomialOrder::lex(3));
    GroebnerBasis bad = gb;
    bad.elements.pop_back();
    CHECK_FALSE(certify(bad, {parse_poly("x1*x2 + 1"), parse_poly("x2 + x3")}).ok);
}

TEST_CASE("elimination and point decomposition on a side-free ideal") {
    Boundary b{"0101", "0101", std::nullopt};
    PuzzleIdeal I = build_ideal(b, builtin_piece_set(BuiltinId::omega0), IdealKind::side_free);
    const auto& keep = I.grid->boundary(Side::bottom);
    std::vector<int> elim;
    for (int v = 1; v <= I.nvars(); ++v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) elim.push_back(v);
    GroebnerBasis gb = buchberger(I, MonomialOrder::block_lex(elim, keep));
    GroebnerBasis el = eliminate(gb, keep);
    for (const auto& e : el.elements)
        for (int v : e.variables()) CHECK(std::find(keep.begin(), keep.end(), v) != keep.end());
    CHECK(certify(el).ok);
    for (int v : keep) CHECK(normal_form(PolyF3::variable(v) * PolyF3::variable(v) - PolyF3::variable(v), el).is_zero());
    auto pd = point_decomposition(el);
    CHECK(pd.size() == enumerate_variety(el).size());
    for (const auto& pp : pd) {
        CHECK(pp.vars == keep);
        for (const auto& e : el.elements) {
            std::vector<std::uint8_t> full(I.nvars(), 0);
            for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i] - 1] = pp.point[i];
            CHECK(poly_eval(e, full).is_zero());
        }
    }
    CHECK_THROWS(eliminate(buchberger(I, MonomialOrder::lex(I.nvars())), keep));
}

TEST_CASE("intersection of point ideals") {
    auto order = MonomialOrder::lex(2);
    std::vector<PolyF3> a = {parse_poly("x1"), parse_poly("x2 + 2")};   // (0, 1)
    std::vector<PolyF3> b = {parse_poly("x1 + 2"), parse_poly("x2")};   // (1, 0)
    GroebnerBasis J = intersect(a, b, order);
    auto pts = enumerate_variety(J);
    CHECK(pts == std::vector<std::vector<std::uint8_t>>{{0, 1}, {1, 0}});
    CHECK(certify(J).ok);
    GroebnerBasis ga = buchberger(a, order);
    CHECK(all_reduce_to_zero(J.elements, ga));
}

TEST_CASE("variety coordinates follow the requested variables") {
    GroebnerBasis gb = buchberger({parse_poly("x1 + 2"), parse_poly("x2 + 1")}, MonomialOrder::lex(2));
    CHECK(enumerate_variety(gb) == std::vector<std::vector<std::uint8_t>>{{1, 2}});
    CHECK(enumerate_variety(gb, {2, 1}) == std::vector<std::vector<std::uint8_t>>{{2, 1}});
}
