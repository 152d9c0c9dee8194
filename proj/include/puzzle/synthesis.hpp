#pragma once

#include <array>
#include <vector>

#include "puzzle/gf3.hpp"
#include "puzzle/pieces.hpp"

namespace puzzle {

// Template polynomials in local variables x1..xk.
//   distinguishing: the triangle's sides in canonical order
//   forbidding:     the rhombus's four outer sides in canonical order
//   implying:       the polygon layout's intervals in canonical order
struct TemplateBundle {
    PolyF3 f_up, f_down;
    std::array<PolyF3, 3> f_rhombus;     // indexed by RhombusDir
    std::vector<PolyF3> f_implying;      // parallel to PieceSet::implicit
    std::vector<PolyF3> f_edge;          // parallel to PieceSet::implicit
};

PolyF3 synth_distinguishing(const std::vector<AtomicPiece>& refined, bool up);
PolyF3 synth_forbidding(const PieceSet& s, RhombusDir d);
PolyF3 synth_implying(const PieceSet& s, const ImplicitPiece& p);
// Nonzero exactly where the implicit piece itself appears (its own sides, canonical order); used
// at sites that no polygon placement covers.
PolyF3 synth_edge(const PieceSet& s, const ImplicitPiece& p);
TemplateBundle synthesize(const PieceSet& s);

// Solves a fixed-support system: rows are points of F3^k with required values; the unknowns are
// the 3^k monomial coefficients ordered by degree.  Free coefficients are zero.
PolyF3 synth_from_table(int k, const std::vector<std::pair<std::vector<Val>, Val>>& rows);

// Unique polynomial with the given values on all of F3^k (index: x1 most significant digit).
PolyF3 interpolate(int k, const std::vector<Val>& values);

}  // namespace puzzle
