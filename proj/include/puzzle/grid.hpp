#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace puzzle {

enum class Side { left, right, bottom };
enum class RhombusDir { left, right, bottom };
enum class PolygonShape { up2, down2, hexagon };

const char* name(Side s);
const char* name(RhombusDir d);
const char* name(PolygonShape s);

struct TriRef {
    bool up;
    int r, y;
    friend bool operator==(const TriRef&, const TriRef&) = default;
    friend auto operator<=>(const TriRef&, const TriRef&) = default;
};

// Intervals of a unit triangle: up (left, right, bottom), down (left, top, right).
struct TrianglePlacement {
    TriRef tri;
    std::array<int, 3> sides;
};

// Outer sides: left/right rhombus (top, right, bottom, left); bottom rhombus (NW, NE, SE, SW).
struct RhombusPlacement {
    RhombusDir dir;
    TriRef up, down;
    std::array<int, 4> outer;
    int middle;
};

struct LocalRhombus {
    RhombusDir dir;
    int up_tri, down_tri;             // indices into the placement's triangle list
    std::array<int, 4> outer;         // local interval positions
    int middle;                       // local interval position
};

// Interval order: boundary clockwise starting at the leftmost vertex going up, then
// internal intervals row by row, left to right.
struct PolygonPlacement {
    PolygonShape shape;
    int r, y;                          // anchor (see polygon_local_layout)
    std::vector<int> intervals;
    int boundary_count;
    std::vector<TriRef> triangles;
    std::vector<std::array<int, 3>> triangle_sides;  // local positions, canonical side order
    std::vector<LocalRhombus> rhombi;
};

class DoesNotFit : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TriangleGrid {
public:
    explicit TriangleGrid(int n);

    int n() const { return n_; }
    int N() const { return N_; }

    std::array<int, 3> up(int r, int y) const;
    std::array<int, 3> down(int r, int y) const;
    std::array<int, 3> sides(const TriRef& t) const { return t.up ? up(t.r, t.y) : down(t.r, t.y); }

    const std::vector<TrianglePlacement>& triangles() const { return triangles_; }
    const std::vector<RhombusPlacement>& rhombi(RhombusDir d) const { return rhombi_[static_cast<int>(d)]; }
    const std::vector<PolygonPlacement>& polygons(PolygonShape s) const { return polygons_[static_cast<int>(s)]; }
    const std::vector<int>& boundary(Side s) const { return boundary_[static_cast<int>(s)]; }

    // Rhombus placement made of the given pair, or nullptr.
    const RhombusPlacement* find_rhombus(RhombusDir d, const TriRef& up, const TriRef& down) const;

private:
    int n_, N_;
    std::vector<TrianglePlacement> triangles_;
    std::array<std::vector<RhombusPlacement>, 3> rhombi_;
    std::array<std::vector<PolygonPlacement>, 3> polygons_;
    std::array<std::vector<int>, 3> boundary_;
};

TriangleGrid build_grid(int n);
const std::vector<int>& boundary_intervals(const TriangleGrid& g, Side s);
const std::vector<PolygonPlacement>& polygon_placements(const TriangleGrid& g, PolygonShape s);

// Rhombus of direction d on up/down triangles given their side values (canonical orders).
std::array<int, 4> rhombus_outer(RhombusDir d, const std::array<int, 3>& up, const std::array<int, 3>& down);
int rhombus_middle(RhombusDir d, const std::array<int, 3>& up, const std::array<int, 3>& down);
// Shared-side positions: index into up sides, index into down sides.
std::pair<int, int> rhombus_shared(RhombusDir d);

// Binary words over {0,1}; a partition is a weakly decreasing list of positive parts.
using Partition = std::vector<int>;
std::string partition_to_binary(const Partition& p, int n, int k);
Partition binary_to_partition(const std::string& word);
int partition_size(const Partition& p);
int word_weight(const std::string& word);  // |lambda| of the word's partition
bool is_binary_word(const std::string& w);

}  // namespace puzzle
