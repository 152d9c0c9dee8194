#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "puzzle/grid.hpp"
#include "puzzle/ideal.hpp"
#include "puzzle/pieces.hpp"

namespace puzzle {

// Interval assignment of a grid: a[i-1] is the value of interval i.
using Assignment = std::vector<Val>;

// Free-side word -> number of tilings.  With no free side the single key is "".
using WordCounts = std::map<std::string, std::uint64_t>;

// Search plan: triangles visited row by row, left to right.  Each step assigns the triangle's
// unassigned intervals and runs every check whose last interval was just assigned.
class OraclePlan {
public:
    OraclePlan(const Boundary& b, std::shared_ptr<const PieceSet> pieces);

    const TriangleGrid& grid() const { return *grid_; }
    const PieceSet& pieces() const { return *pieces_; }
    const Boundary& boundary() const { return boundary_; }
    std::size_t steps() const { return steps_.size(); }

    // Whole-assignment membership test (every check at once).
    bool accepts(const Assignment& a) const;

    std::vector<Assignment> enumerate(std::size_t limit) const;
    WordCounts count_serial() const;
    WordCounts count_parallel() const;

    // Intervals carried between steps.
    std::size_t frontier_width(std::size_t step) const { return frontier_[step].size(); }

private:
    struct Check {
        enum class Kind { triangle, rhombus, polygon };
        Kind kind = Kind::triangle;
        bool up = false;
        RhombusDir dir = RhombusDir::left;
        std::vector<int> ivs;          // intervals read
        int implicit = -1;             // polygon rule: implicit piece index
        std::vector<char> uncovered;   // per implicit piece: this site lies in no polygon placement
    };
    struct Step {
        std::vector<int> fresh;        // intervals assigned here
        std::vector<int> checks;
    };

    bool run_check(const Check& c, const std::vector<Val>& v) const;
    std::string free_word(const std::vector<Val>& v) const;

    std::shared_ptr<const TriangleGrid> grid_;
    std::shared_ptr<const PieceSet> pieces_;
    Boundary boundary_;
    std::vector<std::vector<Val>> domain_;      // per interval (1-based)
    std::vector<Check> checks_;
    std::vector<Step> steps_;
    std::vector<std::vector<int>> frontier_;    // intervals live after each step
    std::vector<int> free_ivs_;                 // free side, in word order
};

// Every tiling (as an interval assignment) with the original pieces, at most `limit`.
std::vector<Assignment> brute_force_tilings(const Boundary& b, const PieceSet& pieces,
                                            std::size_t limit = std::numeric_limits<std::size_t>::max());
WordCounts count_by_free_word(const Boundary& b, const PieceSet& pieces);
WordCounts count_by_free_word_serial(const Boundary& b, const PieceSet& pieces);
std::uint64_t count_tilings(const Boundary& b, const PieceSet& pieces);

std::uint64_t lr_coefficient_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);

// Polynomial in x1..xm: exponent vector -> coefficient.
using IntPoly = std::map<std::vector<int>, long long>;
IntPoly schur_polynomial(const Partition& lambda, int nvars);
std::map<Partition, long long> schur_multiply(const Partition& lambda, const Partition& mu, int nvars);

}  // namespace puzzle
