#pragma once

#include <string>
#include <vector>

#include "puzzle/gf3.hpp"
#include "puzzle/pieces.hpp"

namespace puzzle {

// Values of p on all of F3^k (index: x1 most significant digit).  Variables above k must not occur.
std::vector<Val> evaluate_table(const PolyF3& p, int k);

struct TableCheck {
    std::size_t rows = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
    void fail(const std::string& what) {
        if (!failures++) first_failure = what;
    }
};

// `exact`: nonzero rows must equal 1 (synthesized templates); otherwise any nonzero value passes.
TableCheck check_distinguishing(const PolyF3& f, const PieceSet& s, bool up, bool exact = true);
TableCheck check_forbidding(const PolyF3& f, const PieceSet& s, RhombusDir d, bool exact = true);
TableCheck check_implying(const PolyF3& f, const PieceSet& s, const ImplicitPiece& p);
TableCheck check_edge(const PolyF3& f, const PieceSet& s, const ImplicitPiece& p);

// Five-variable forbidding form over every pair of allowed atomic pieces forming a rhombus of
// direction d; `roles` picks, for x1..x5, a side: 0..2 up side, 3..5 down side (canonical orders).
TableCheck check_forbidding5(const PolyF3& f, const PieceSet& s, RhombusDir d, const std::vector<int>& roles);

}  // namespace puzzle
