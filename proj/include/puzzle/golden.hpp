#pragma once

#include <string>
#include <vector>

#include "puzzle/ideal.hpp"
#include "puzzle/oracle.hpp"
#include "puzzle/structure.hpp"

namespace puzzle::golden {

// n=6, lambda=mu=010101, nu=101010.
Boundary n6_boundary();
std::vector<Assignment> n6_points();

// Piece positions as drawn: x2 is twice the horizontal offset of the piece's anchor triangle,
// h the row counted from the bottom (rhombi standing on two rows use the lower row).
struct FigurePiece {
    enum class Kind { up, down, left_rhombus, right_rhombus, bottom_rhombus };
    Kind kind;
    int x2;
    int h;
    int value = -1;  // F2 triangles
    bool equivariant = false;
    friend bool operator==(const FigurePiece&, const FigurePiece&) = default;
    friend auto operator<=>(const FigurePiece&, const FigurePiece&) = default;
};

std::vector<std::vector<FigurePiece>> n6_stitched_panels();
std::vector<FigurePiece> figure_pieces(const Tiling& t);

// The equivariant tiling with weight (y5-y1)(y6-y5).
Boundary equivariant_boundary();
std::vector<FigurePiece> equivariant_panel();

// n=16 sweep, bottom side free.
Partition n16_lambda();
Partition n16_mu();
std::vector<std::string> n16_words();
std::string n16_five_word();

struct PrintedPoly {
    std::string name;
    std::string text;
};
PrintedPoly omega0_distinguishing();
PrintedPoly t_up();
PrintedPoly t_down();
PrintedPoly t_rhombus();
PrintedPoly c_up();
PrintedPoly c_down();
PrintedPoly c_rhombus();
PrintedPoly c_hexagon();

// Rows (x1..x5) -> required value of the five-variable T forbidding polynomial.
std::vector<std::pair<std::vector<Val>, Val>> t_rhombus_table();
// Points (a, b, 1, 2): the hexagon polynomial vanishes at (2, 1, 1, 2) only.
std::vector<std::pair<std::vector<Val>, bool>> c_hexagon_table();

}  // namespace puzzle::golden
