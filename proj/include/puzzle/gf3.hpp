#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace puzzle {

class F3 {
public:
    constexpr F3() = default;
    constexpr F3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    constexpr std::uint8_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr F3 operator+(F3 a, F3 b) { return F3(a.v_ + b.v_); }
    friend constexpr F3 operator-(F3 a, F3 b) { return F3(a.v_ + 3 - b.v_); }
    friend constexpr F3 operator*(F3 a, F3 b) { return F3(a.v_ * b.v_); }
    constexpr F3 operator-() const { return F3(3 - v_); }
    F3& operator+=(F3 o) { return *this = *this + o; }
    F3& operator-=(F3 o) { return *this = *this - o; }
    F3& operator*=(F3 o) { return *this = *this * o; }
    friend constexpr bool operator==(F3 a, F3 b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(F3 a, F3 b) { return a.v_ <=> b.v_; }

    // 1 and 2 are their own inverses.
    constexpr F3 inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of 0 in F3");
        return *this;
    }

private:
    std::uint8_t v_ = 0;
};

class MissingVariable : public std::runtime_error {
public:
    explicit MissingVariable(int var)
        : std::runtime_error("point does not bind x" + std::to_string(var)), var_(var) {}
    int var() const { return var_; }

private:
    int var_;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Variables are 1-based (x1..xN).  Exponents are stored already reduced to 1 or 2.
class Monomial {
public:
    struct Factor {
        int var;
        int exp;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    Monomial() = default;
    static Monomial var(int v, int e = 1);
    // Builds from arbitrary (var, exp) pairs, reducing exponents with x^3 = x.
    static Monomial from_factors(std::vector<Factor> f);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int degree() const;
    int exponent(int v) const;
    int max_var() const { return f_.empty() ? 0 : f_.back().var; }

    Monomial operator*(const Monomial& o) const;
    Monomial renamed(const std::vector<int>& map) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> f_;  // sorted by var, exps in {1,2}
};

// Default lex order with x1 > x2 > ... ; returns <0, 0, >0.
int lex_compare(const Monomial& a, const Monomial& b);

class PolyF3 {
public:
    struct Term {
        Monomial mono;
        F3 coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    PolyF3() = default;
    PolyF3(F3 c);
    static PolyF3 variable(int v);
    static PolyF3 from_terms(std::vector<Term> terms);

    // Terms sorted descending in the default lex order, no zero coefficients.
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
    std::size_t size() const { return t_.size(); }
    int degree() const;
    int max_var() const;
    std::vector<int> variables() const;

    PolyF3 operator+(const PolyF3& o) const;
    PolyF3 operator-(const PolyF3& o) const;
    PolyF3 operator-() const;
    PolyF3 operator*(const PolyF3& o) const;
    PolyF3 operator*(F3 c) const;
    PolyF3& operator+=(const PolyF3& o) { return *this = *this + o; }
    PolyF3& operator-=(const PolyF3& o) { return *this = *this - o; }
    PolyF3& operator*=(const PolyF3& o) { return *this = *this * o; }

    // map[v] is the new index of variable v (map[0] unused).
    PolyF3 renamed(const std::vector<int>& map) const;

    friend bool operator==(const PolyF3&, const PolyF3&) = default;

private:
    std::vector<Term> t_;
};

// point[i-1] is the value of x_i.
F3 poly_eval(const PolyF3& p, const std::vector<F3>& point);
F3 poly_eval(const PolyF3& p, const std::vector<std::uint8_t>& point);

// Accepts any non-negative exponents and coefficients; the result is canonical.
struct RawTerm {
    long coeff;
    std::vector<std::pair<int, int>> factors;
};
PolyF3 poly_normalize(const std::vector<RawTerm>& raw);
PolyF3 poly_normalize(const PolyF3& p);

PolyF3 parse_poly(std::string_view text);
std::string to_string(const PolyF3& p);
std::string to_string(const Monomial& m);

std::optional<std::vector<F3>> f3_linear_solve(std::vector<std::vector<F3>> A, std::vector<F3> b);

struct MonomialOrder {
    enum class Kind { lex, block_lex };
    Kind kind = Kind::lex;
    // Variables from most to least significant.
    std::vector<int> ranking;
    // rank[v] = position of x_v in ranking.
    std::vector<int> rank;
    // Number of leading entries of ranking forming the eliminated block (block_lex only).
    int eliminated = 0;

    static MonomialOrder lex(int nvars);
    static MonomialOrder block_lex(const std::vector<int>& eliminate, const std::vector<int>& keep);

    int nvars() const { return static_cast<int>(ranking.size()); }
    std::vector<int> keep_block() const;
    int compare(const Monomial& a, const Monomial& b) const;
};

}  // namespace puzzle
