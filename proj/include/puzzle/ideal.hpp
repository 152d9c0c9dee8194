#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "puzzle/gf3.hpp"
#include "puzzle/grid.hpp"
#include "puzzle/pieces.hpp"
#include "puzzle/synthesis.hpp"

namespace puzzle {

enum class IdealKind { atomic, forbidding, full, side_free };

class BadBoundary : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Boundary words; an empty optional marks a free side.
struct Boundary {
    std::optional<std::string> lambda, mu, nu;
    std::optional<Side> free_side() const;
};

// x_var^degree - x_var, degree 3 (F1) or 2 (free side).
struct FieldEquation {
    int var;
    int degree;
};

struct PuzzleIdeal {
    std::shared_ptr<const TriangleGrid> grid;
    std::shared_ptr<const PieceSet> pieces;
    Boundary boundary;
    IdealKind kind;
    std::vector<FieldEquation> f1;
    std::array<std::vector<PolyF3>, 5> families;  // F2..F6
    // Implicit pieces at sites outside every polygon placement may not appear at all.
    std::vector<PolyF3> edge;

    int nvars() const { return grid->N(); }
    const std::vector<PolyF3>& family(int k) const { return families.at(k - 2); }

    // Deduplicated nonzero generators with the degree-2 field polynomials; cubic field equations
    // stay implicit (canonical polynomials are already reduced by them).
    std::vector<PolyF3> generators() const;
};

struct IdealStats {
    std::array<std::size_t, 6> count;  // |F1|..|F6|
    std::size_t quadratic_field;       // F1 members of degree 2
    std::size_t edge;
};

// An implicit piece position (its own sides, canonical order) covered by no polygon placement.
struct EdgeSite {
    int implicit;
    std::vector<int> intervals;
};
std::vector<EdgeSite> uncovered_implicit_sites(const TriangleGrid& g, const PieceSet& s);

PuzzleIdeal build_ideal(const Boundary& b, std::shared_ptr<const PieceSet> pieces, IdealKind kind,
                        const TemplateBundle* templates = nullptr);
PuzzleIdeal build_ideal(const Boundary& b, const PieceSet& pieces, IdealKind kind);
IdealStats ideal_stats(const PuzzleIdeal& I);
std::string dump_ideal(const PuzzleIdeal& I);

// Validates boundary words; returns (n, k).
std::pair<int, int> check_boundary(const Boundary& b);

// The cached template bundle of a piece set.
const TemplateBundle& templates_for(const PieceSet& s);

}  // namespace puzzle
