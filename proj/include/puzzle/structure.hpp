#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "puzzle/grid.hpp"
#include "puzzle/groebner.hpp"
#include "puzzle/ideal.hpp"
#include "puzzle/oracle.hpp"
#include "puzzle/pieces.hpp"

namespace puzzle {

class BackendInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Backend { groebner, oracle };
const char* name(Backend b);

// Largest n the Groebner backend accepts: PUZZLE_MAX_GB_N, default 8.
int groebner_size_limit();

struct RecoveredPiece {
    enum class Kind { triangle, rhombus, polygon };
    Kind kind = Kind::triangle;
    std::vector<int> tris;  // indices into grid->triangles()
    AtomicPiece atom{};
    RhombusDir dir = RhombusDir::left;
    std::array<Val, 4> outer{};
    bool equivariant = false;
    int polygon = -1;    // index into PieceSet::polygons
    int placement = -1;  // index into grid->polygons(shape)
};

struct Tiling {
    std::shared_ptr<const TriangleGrid> grid;
    std::shared_ptr<const PieceSet> pieces;
    Assignment values;
    std::vector<AtomicPiece> atomic;        // parallel to grid->triangles()
    std::vector<StitchedPiece> stitched;
    std::vector<RecoveredPiece> recovered;
};

int triangle_index(const TriangleGrid& g, const TriRef& t);
Tiling point_to_tiling(const Assignment& point, std::shared_ptr<const TriangleGrid> grid,
                       std::shared_ptr<const PieceSet> pieces);

// (-1)^(|nu| - |lambda| - |mu|) for the K-theory sets, +1 otherwise.
int k_sign(BuiltinId id, const std::string& lambda, const std::string& mu, const std::string& nu);
int k_sign(const PieceSet& s, const std::string& lambda, const std::string& mu, const std::string& nu);

struct ConstantResult {
    std::uint64_t count = 0;
    long long signed_count = 0;
    std::vector<Tiling> tilings;
};

ConstantResult constant(const Boundary& b, std::shared_ptr<const PieceSet> pieces, Backend backend,
                        bool want_tilings = false);

// y_i - y_j
struct WeightFactor {
    int i, j;
    friend bool operator==(const WeightFactor&, const WeightFactor&) = default;
};

// Integer polynomial in y1..yn.
class WeightPoly {
public:
    WeightPoly() = default;
    explicit WeightPoly(long long c);
    static WeightPoly from_factors(const std::vector<WeightFactor>& f);

    WeightPoly operator+(const WeightPoly& o) const;
    WeightPoly operator*(const WeightPoly& o) const;
    WeightPoly& operator+=(const WeightPoly& o) { return *this = *this + o; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    long long constant_term() const;
    friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

    // Monomial: sorted variable indices with repetition.
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }

private:
    std::map<std::vector<int>, long long> terms_;
};

std::string to_string(const WeightPoly& w);
std::string to_string(const std::vector<WeightFactor>& f);

// (i, j) of an equivariant rhombus: drag its up triangle SE (resp. SW) row by row until it
// reaches the bottom row; i (resp. j) is the bottom interval it then sits on.
WeightFactor drag(const TriangleGrid& g, const TriRef& up);
std::vector<WeightFactor> tiling_weight(const Tiling& t);
WeightPoly equivariant_constant(const Boundary& b, Backend backend = Backend::oracle);

WordCounts side_free_sweep(const Boundary& b, std::shared_ptr<const PieceSet> pieces, Backend backend);

// `nu=<word> count=<int> signed=<int>` per line, sorted by word.
std::string format_table(const WordCounts& counts, const PieceSet& s, const Boundary& b);

}  // namespace puzzle
