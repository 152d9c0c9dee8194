#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "puzzle/gf3.hpp"
#include "puzzle/ideal.hpp"

namespace puzzle {

// Reduced Groebner basis of I + <x^3 - x : all ranked x>.  The cubic field polynomials are not
// listed: canonical polynomials are already reduced by them.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<PolyF3> elements;  // monic, sorted by leading monomial ascending

    bool is_unit() const;
    std::vector<int> variables() const { return order.ranking; }
};

struct BuchbergerStats {
    std::size_t pairs_reduced = 0;
    std::size_t field_pairs = 0;
    std::size_t zero_reductions = 0;
    std::size_t criterion1 = 0;
    std::size_t criterion2 = 0;
    std::size_t max_basis = 0;
};

class WrongOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

GroebnerBasis buchberger(const std::vector<PolyF3>& generators, const MonomialOrder& order,
                         BuchbergerStats* stats = nullptr);
GroebnerBasis buchberger(const PuzzleIdeal& I, const MonomialOrder& order, BuchbergerStats* stats = nullptr);

PolyF3 normal_form(const PolyF3& p, const GroebnerBasis& gb);
PolyF3 leading_term(const PolyF3& p, const MonomialOrder& order);

struct Certificate {
    bool ok = true;
    std::size_t pairs = 0;
    std::size_t field_pairs = 0;
    std::size_t inputs = 0;
    std::size_t failures = 0;
    std::string detail;
};

// Reduces every S-polynomial (including those against x^3 - x) and every given input to 0,
// and checks that the basis is reduced and monic.
Certificate certify(const GroebnerBasis& gb, const std::vector<PolyF3>& inputs = {});

// Elements supported on keep; gb must use a block order whose retained block is keep.
GroebnerBasis eliminate(const GroebnerBasis& gb, const std::vector<int>& keep);

// All F3 points over `vars` (default: the order's variables, sorted ascending), coordinates
// listed in ascending variable order; sorted lexicographically.
std::vector<std::vector<std::uint8_t>> enumerate_variety(const GroebnerBasis& gb, std::vector<int> vars = {});

struct PrimePoint {
    std::vector<int> vars;
    std::vector<std::uint8_t> point;
    std::vector<PolyF3> prime;  // x_v - value
};
std::vector<PrimePoint> point_decomposition(const GroebnerBasis& elim);

// Groebner basis (under `order`, lex on its ranking) of the intersection of two ideals given by
// bases over the same variables, via an auxiliary variable.
GroebnerBasis intersect(const std::vector<PolyF3>& a, const std::vector<PolyF3>& b, const MonomialOrder& order);

bool all_reduce_to_zero(const std::vector<PolyF3>& polys, const GroebnerBasis& gb);

}  // namespace puzzle
