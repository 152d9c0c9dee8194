#include "puzzle/golden.hpp"

#include <algorithm>

namespace puzzle::golden {

using K = FigurePiece::Kind;

Boundary n6_boundary() { return {"010101", "010101", "101010"}; }

std::vector<Assignment> n6_points() {
    return {
        {1, 0, 2, 0, 0, 1, 1, 0, 1, 1, 0, 0, 2, 0, 0, 2, 1, 0, 0, 0, 1, 1, 1, 1, 2, 1, 0, 1, 1, 0, 1, 1,
         2, 1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 2, 0, 0, 2, 0, 0, 0, 2, 0, 0, 1, 1, 2, 1, 1, 0, 1, 0, 1, 0},
        {1, 0, 2, 0, 0, 1, 1, 0, 1, 1, 1, 2, 1, 1, 0, 1, 0, 2, 0, 2, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1,
         1, 0, 0, 0, 0, 2, 0, 0, 1, 2, 0, 1, 0, 0, 2, 0, 0, 1, 1, 2, 1, 1, 1, 2, 1, 1, 0, 1, 0, 1, 0},
    };
}

namespace {

FigurePiece up(int x2, int h, int v) { return {K::up, x2, h, v, false}; }
FigurePiece dn(int x2, int h, int v) { return {K::down, x2, h, v, false}; }
FigurePiece ne(int x2, int h) { return {K::left_rhombus, x2, h, -1, false}; }
FigurePiece sw(int x2, int h) { return {K::right_rhombus, x2, h, -1, false}; }
FigurePiece bot(int x2, int h, bool eq = false) { return {K::bottom_rhombus, x2, h, -1, eq}; }

std::vector<FigurePiece> sorted(std::vector<FigurePiece> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<std::vector<FigurePiece>> n6_stitched_panels() {
    return {
        sorted({sw(0, 0), up(2, 0, 0), dn(4, 0, 0), sw(4, 0), up(6, 0, 0), bot(8, 0), up(8, 0, 1), ne(10, 0),
                up(1, 1, 1), ne(3, 1), dn(5, 1, 1), up(5, 1, 1), dn(7, 1, 1), dn(9, 1, 0), up(9, 1, 0),
                up(2, 2, 0), bot(4, 2), up(4, 2, 1), dn(6, 2, 1), up(6, 2, 1), ne(8, 2),
                dn(5, 3, 0), sw(5, 3), up(7, 3, 0),
                up(4, 4, 0), bot(6, 4), up(6, 4, 1)}),
        sorted({sw(0, 0), up(2, 0, 0), bot(4, 0), up(4, 0, 1), ne(6, 0), dn(8, 0, 1), up(8, 0, 1), ne(10, 0),
                up(1, 1, 1), dn(3, 1, 1), dn(5, 1, 0), up(5, 1, 0), dn(7, 1, 0), sw(7, 1), up(9, 1, 0),
                sw(2, 2), up(4, 2, 0), dn(6, 2, 0), up(6, 2, 0), bot(8, 2), up(8, 2, 1),
                up(3, 3, 1), ne(5, 3), dn(7, 3, 1),
                up(4, 4, 0), bot(6, 4), up(6, 4, 1)}),
    };
}

Boundary equivariant_boundary() { return {"100101", "101010", "110100"}; }

std::vector<FigurePiece> equivariant_panel() {
    return sorted({up(0, 0, 1), up(2, 0, 1), ne(4, 0), up(6, 0, 1), ne(8, 0), bot(10, 0, true), up(10, 0, 0),
                   dn(2, 0, 1), dn(6, 0, 1),
                   sw(1, 1), up(3, 1, 0), sw(5, 1), up(7, 1, 0), dn(5, 1, 0), dn(9, 1, 0),
                   sw(2, 2), up(4, 2, 0), sw(6, 2), up(8, 2, 0), dn(6, 2, 0),
                   up(3, 3, 1), bot(5, 3, true), up(5, 3, 0), bot(7, 3), up(7, 3, 1),
                   dn(6, 4, 1),
                   up(5, 5, 1)});
}

std::vector<FigurePiece> figure_pieces(const Tiling& t) {
    const int n = t.grid->n();
    const auto& tris = t.grid->triangles();
    auto x2_of = [&](const TriRef& r) { return (n - r.r) + 2 * (r.y - 1) + (r.up ? 0 : 2); };
    std::vector<FigurePiece> out;
    for (const auto& rp : t.recovered) {
        if (rp.kind == RecoveredPiece::Kind::polygon) {
            // Drawn as its triangles.
            for (int k : rp.tris) {
                const TriRef& r = tris[k].tri;
                out.push_back({r.up ? K::up : K::down, x2_of(r), n - r.r, -1, false});
            }
            continue;
        }
        if (rp.kind == RecoveredPiece::Kind::triangle) {
            const TriRef& r = tris[rp.tris[0]].tri;
            const auto& v = rp.atom.v;
            int value = (v[0] == v[1] && v[1] == v[2]) ? v[0] : -1;
            out.push_back({r.up ? K::up : K::down, x2_of(r), n - r.r, value, false});
            continue;
        }
        const TriRef& u = tris[rp.tris[0]].tri;
        const TriRef& d = tris[rp.tris[1]].tri;
        switch (rp.dir) {
            case RhombusDir::right: out.push_back({K::right_rhombus, x2_of(u), n - u.r, -1, rp.equivariant}); break;
            case RhombusDir::left: out.push_back({K::left_rhombus, x2_of(u), n - u.r, -1, rp.equivariant}); break;
            case RhombusDir::bottom: out.push_back({K::bottom_rhombus, x2_of(d), n - d.r, -1, rp.equivariant}); break;
        }
    }
    return sorted(std::move(out));
}

Partition n16_lambda() { return {8, 7, 6, 5, 4, 3, 2, 1}; }
Partition n16_mu() { return {6, 5, 4, 3, 2, 1, 1}; }

std::vector<std::string> n16_words() {
    return {"1111110100001000", "1101111110000000", "1110111101000000", "1111101100010000",
            "1111111000000100", "1111110010010000", "1111011100100000", "1111101010100000",
            "1111110001100000", "1111011011000000", "1111100111000000"};
}

std::string n16_five_word() { return "1111110100001000"; }

// Up triangles take (left, right, bottom), down triangles (left, top, right).
PrintedPoly omega0_distinguishing() {
    return {"omega0 distinguishing", "x1 + x1^2 + 2*x2 + x2^2 + x3^2 + x1*x2*x3 + 2*x1^2*x2*x3"};
}
PrintedPoly t_up() { return {"T up distinguishing", "x1^2*x2 + 2*x1*x2^2 + 2*x1^2 + x1"}; }
PrintedPoly t_down() { return {"T down distinguishing", "x1*x2^2 + 2*x1^2 + x1*x2 + 2*x2^2 + x1 + 2*x2"}; }
// (up left, up right, up bottom, down left, down right) of a right rhombus.
PrintedPoly t_rhombus() {
    return {"T forbidding", "x1^2*x4 + x2^2*x4 + 2*x1^2 + 2*x1*x2 + 2*x2^2 + x2*x4 + x1 + 2*x2"};
}
PrintedPoly c_up() { return {"C up distinguishing", "x2^2*x3 + 2*x2*x3^2 + 2*x2^2 + x2"}; }
PrintedPoly c_down() { return {"C down distinguishing", "x2*x3^2 + 2*x2^2 + x2*x3 + 2*x3^2 + x2 + 2*x3"}; }
PrintedPoly c_rhombus() {
    return {"C forbidding", "x1^2*x4 + x2^2*x4 + 2*x1^2 + 2*x1*x2 + 2*x2^2 + x2*x4 + x1 + 2*x2"};
}
// Hexagon variables NE, NW, W, SW.
PrintedPoly c_hexagon() {
    return {"C implying",
            "2*x1^2*x2^2*x3^2*x4^2 + x1^2*x2^2*x3^2*x4 + 2*x1^2*x2^2*x3*x4^2 + 2*x1^2*x2*x3^2*x4^2 + "
            "x1*x2^2*x3^2*x4^2 + x1^2*x2^2*x3*x4 + x1^2*x2*x3^2*x4 + 2*x1^2*x2*x3*x4^2 + 2*x1*x2^2*x3^2*x4 + "
            "x1*x2^2*x3*x4^2 + x1*x2*x3^2*x4^2 + x1^2*x2*x3*x4 + 2*x1^2*x2^2*x3*x4 + 2*x1*x2*x3^2*x4 + "
            "x1*x2*x3*x4^2 + 2*x1*x2*x3*x4 + x3^2*x4^2 + 2*x3^2*x4 + x3*x4^2 + 2*x3*x4"};
}

std::vector<std::pair<std::vector<Val>, Val>> t_rhombus_table() {
    return {{{0, 0, 0, 0, 0}, 0}, {{0, 0, 0, 1, 2}, 0}, {{1, 1, 1, 2, 0}, 0}, {{1, 0, 2, 0, 1}, 0},
            {{1, 1, 1, 1, 1}, 0}, {{2, 1, 0, 0, 0}, 0}, {{2, 1, 0, 1, 2}, 0}, {{0, 2, 1, 1, 1}, 0},
            {{0, 2, 1, 2, 0}, 0}, {{0, 1, 2, 1, 0}, 0}, {{1, 0, 2, 1, 0}, 1}, {{0, 1, 2, 0, 1}, 1}};
}

std::vector<std::pair<std::vector<Val>, bool>> c_hexagon_table() {
    std::vector<std::pair<std::vector<Val>, bool>> rows;
    for (Val a = 0; a < 3; ++a)
        for (Val b = 0; b < 3; ++b) rows.push_back({{a, b, 1, 2}, a == 2 && b == 1});
    return rows;
}

}  // namespace puzzle::golden
