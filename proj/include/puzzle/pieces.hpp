#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "puzzle/grid.hpp"

namespace puzzle {

using Val = std::uint8_t;

struct AtomicPiece {
    bool up;
    std::array<Val, 3> v;  // up (left, right, bottom); down (left, top, right)

    bool atomic() const { return (v[0] + v[1] + v[2]) % 3 == 0; }
    bool all_twos() const { return v[0] == 2 && v[1] == 2 && v[2] == 2; }
    // Exactly one side carries 2.
    bool regular() const;
    int code() const { return v[0] * 9 + v[1] * 3 + v[2]; }
    friend bool operator==(const AtomicPiece&, const AtomicPiece&) = default;
    friend auto operator<=>(const AtomicPiece&, const AtomicPiece&) = default;
};

std::string to_string(const AtomicPiece& p);

// The 18 atomic pieces: 9 up then 9 down, values in lexicographic order.
std::vector<AtomicPiece> atomic_universe();

struct TrianglePiece {
    bool up;
    std::array<Val, 3> v;
    friend bool operator==(const TrianglePiece&, const TrianglePiece&) = default;
};

struct RhombusPiece {
    RhombusDir dir;
    std::array<Val, 4> outer;
    bool equivariant = false;
    friend bool operator==(const RhombusPiece& a, const RhombusPiece& b) {
        return a.dir == b.dir && a.outer == b.outer;
    }
};

std::string to_string(const RhombusPiece& p);

// A piece of a stitched tiling, in terms of some triangle list.
struct StitchedPiece {
    enum class Kind { triangle, rhombus };
    Kind kind;
    int tri_a;          // triangle index (up triangle for rhombi)
    int tri_b = -1;     // down triangle for rhombi
    RhombusDir dir = RhombusDir::left;
    AtomicPiece atom{};     // triangle pieces
    std::array<Val, 4> outer{};  // rhombus pieces
};

struct RhombusLink {
    RhombusDir dir;
    int up_tri, down_tri;
};

// Merges every pair of regular atomic pieces sharing a 2-side.
std::vector<StitchedPiece> stitch(const std::vector<AtomicPiece>& tris, const std::vector<RhombusLink>& links);

struct ImplicitPiece {
    enum class Kind { rhombus, all_twos };
    Kind kind;
    RhombusDir dir = RhombusDir::left;   // rhombus
    std::array<Val, 4> outer{};          // rhombus
    bool up = false;                     // all_twos
    int polygon = 0;                     // index into PieceSet::polygons
    std::vector<int> positions;          // local interval positions of the piece's own sides
    std::vector<Val> values;
    int local_rhombus = -1;              // index into the layout's rhombi (rhombus kind)
    int local_triangle = -1;             // index into the layout's triangles (all_twos kind)
};

std::string to_string(const ImplicitPiece& p);

struct PolygonPiece {
    PolygonShape shape;
    std::vector<Val> boundary;
    std::vector<std::vector<Val>> tilings;    // every atomic refinement, full local assignment
    int chosen = 0;
    std::vector<Val> refinement;              // tilings[chosen]
    std::vector<StitchedPiece> stitched;      // stitching of the refinement (layout triangle indices)
    std::string label;
};

// Local layout of a polygon shape (a placement in a grid just large enough).
const PolygonPlacement& polygon_layout(PolygonShape s);

class NotRefinable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedPieceSet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<AtomicPiece> atomic_refinement(const TrianglePiece& p);
std::vector<std::pair<AtomicPiece, AtomicPiece>> atomic_refinement(const RhombusPiece& p);
std::vector<std::vector<Val>> atomic_refinement(PolygonShape shape, const std::vector<Val>& boundary);

// Unique middle value making both halves atomic, or nullopt.
std::optional<Val> rhombus_middle_value(RhombusDir d, const std::array<Val, 4>& outer);
std::pair<AtomicPiece, AtomicPiece> rhombus_halves(RhombusDir d, const std::array<Val, 4>& outer, Val middle);

enum class BuiltinId { omega0, omegaT, omegaA, omegaB, omegaC, omegaD };

class PieceSet {
public:
    std::string name;
    std::vector<TrianglePiece> triangles;
    std::vector<RhombusPiece> rhombi;
    std::vector<PolygonPiece> polygons;

    // Derived.
    std::vector<AtomicPiece> refined;          // sorted, unique
    std::vector<ImplicitPiece> implicit;
    std::vector<RhombusPiece> forbidden;
    bool separable = false;
    std::string separability_note;

    bool in_refined(const AtomicPiece& p) const { return refined_table_[p.up ? 0 : 1][p.code()]; }
    bool in_refined(bool up, Val a, Val b, Val c) const { return refined_table_[up ? 0 : 1][a * 9 + b * 3 + c]; }
    bool is_forbidden(RhombusDir d, const std::array<Val, 4>& o) const {
        return forbidden_table_[static_cast<int>(d)][o[0] * 27 + o[1] * 9 + o[2] * 3 + o[3]];
    }
    // Index into implicit, or -1.
    int implicit_rhombus(RhombusDir d, const std::array<Val, 4>& o) const {
        return implicit_table_[static_cast<int>(d)][o[0] * 27 + o[1] * 9 + o[2] * 3 + o[3]];
    }
    int implicit_all_twos(bool up) const { return implicit_222_[up ? 0 : 1]; }
    bool in_omega(const RhombusPiece& r) const;
    bool in_omega(const TrianglePiece& t) const;
    std::optional<PolygonShape> polygon_shape() const;
    std::vector<RhombusPiece> equivariant_pieces() const;

    // Outer 4-tuples of rhombi of direction d tileable by an up/down pair of `allowed`.
    static std::vector<std::array<Val, 4>> psi(RhombusDir d, const std::vector<AtomicPiece>& allowed);
    std::vector<std::array<Val, 4>> psi(RhombusDir d) const { return psi(d, refined); }

    // Recomputes all derived fields.  Polygon refinement indices must be set.
    void derive();

private:
    std::array<std::array<bool, 27>, 2> refined_table_{};
    std::array<std::array<bool, 81>, 3> forbidden_table_{};
    std::array<std::array<int, 81>, 3> implicit_table_{};
    std::array<int, 2> implicit_222_{-1, -1};
};

struct DerivedSets {
    std::vector<ImplicitPiece> implicit;
    std::vector<RhombusPiece> forbidden;
    bool separable;
};
DerivedSets derive_implicit_forbidden(const PieceSet& s);

PieceSet builtin_piece_set(BuiltinId id, std::optional<int> refinement_override = std::nullopt);
const char* builtin_name(BuiltinId id);
std::optional<BuiltinId> parse_builtin_id(const std::string& s);
std::vector<BuiltinId> all_builtins();
std::string builtin_piece_text(BuiltinId id);

// Line-oriented piece-set format; see README.
PieceSet parse_piece_set(const std::string& text);
std::string format_piece_set(const PieceSet& s);

}  // namespace puzzle
