#include "puzzle/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "puzzle/grid.hpp"

namespace puzzle {

namespace {

std::string show(const std::vector<Val>& pt) {
    std::string s = "(";
    for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? "," : "") + std::to_string(int(pt[i]));
    return s + ")";
}

std::size_t code_of(const std::vector<Val>& pt) {
    std::size_t c = 0;
    for (Val v : pt) c = c * 3 + v;
    return c;
}

void expect(TableCheck& t, const std::vector<Val>& pt, Val got, bool want_zero, bool exact) {
    ++t.rows;
    bool good = want_zero ? got == 0 : (exact ? got == 1 : got != 0);
    if (!good) t.fail("at " + show(pt) + " value " + std::to_string(int(got)) + ", want " + (want_zero ? "0" : exact ? "1" : "nonzero"));
}

}  // namespace

std::vector<Val> evaluate_table(const PolyF3& p, int k) {
    if (p.max_var() > k) throw std::invalid_argument("evaluate_table: polynomial uses x" + std::to_string(p.max_var()));
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    std::vector<Val> c(total, 0);
    for (const auto& t : p.terms()) {
        std::size_t code = 0;
        for (int i = 1; i <= k; ++i) code = code * 3 + t.mono.exponent(i);
        c[code] = t.coeff.value();
    }
    // Along each axis, coefficients (1, x, x^2) -> values at 0, 1, 2.
    std::size_t stride = 1;
    for (int axis = k - 1; axis >= 0; --axis) {
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % 3 != 0) continue;
            F3 a(c[base]), b(c[base + stride]), d(c[base + 2 * stride]);
            c[base] = a.value();
            c[base + stride] = (a + b + d).value();
            c[base + 2 * stride] = (a + F3(2) * b + d).value();
        }
        stride *= 3;
    }
    return c;
}

TableCheck check_distinguishing(const PolyF3& f, const PieceSet& s, bool up, bool exact) {
    TableCheck t;
    auto vals = evaluate_table(f, 3);
    for (const auto& a : atomic_universe()) {
        if (a.up != up) continue;
        std::vector<Val> pt{a.v[0], a.v[1], a.v[2]};
        expect(t, pt, vals[code_of(pt)], s.in_refined(a), exact);
    }
    return t;
}

TableCheck check_forbidding(const PolyF3& f, const PieceSet& s, RhombusDir d, bool exact) {
    TableCheck t;
    auto vals = evaluate_table(f, 4);
    for (const auto& o : s.psi(d)) {
        std::vector<Val> pt{o[0], o[1], o[2], o[3]};
        expect(t, pt, vals[code_of(pt)], !s.is_forbidden(d, o), exact);
    }
    return t;
}

TableCheck check_implying(const PolyF3& f, const PieceSet& s, const ImplicitPiece& p) {
    TableCheck t;
    const auto& poly = s.polygons.at(p.polygon);
    const int m = static_cast<int>(polygon_layout(poly.shape).intervals.size());
    auto vals = evaluate_table(f, m);
    std::vector<Val> pt(m);
    for (std::size_t code = 0; code < vals.size(); ++code) {
        std::size_t x = code;
        for (int i = m - 1; i >= 0; --i) {
            pt[i] = static_cast<Val>(x % 3);
            x /= 3;
        }
        bool matched = true;
        for (std::size_t q = 0; q < p.positions.size(); ++q) matched = matched && pt[p.positions[q]] == p.values[q];
        // With the piece's own values present the rest must be the polygon's refinement; the
        // designated positions already agree with it.
        bool want_zero = !matched || pt == poly.refinement;
        expect(t, pt, vals[code], want_zero, true);
    }
    return t;
}

TableCheck check_edge(const PolyF3& f, const PieceSet& s, const ImplicitPiece& p) {
    TableCheck t;
    if (p.kind == ImplicitPiece::Kind::rhombus) {
        auto vals = evaluate_table(f, 4);
        for (const auto& o : s.psi(p.dir)) {
            std::vector<Val> pt{o[0], o[1], o[2], o[3]};
            expect(t, pt, vals[code_of(pt)], o != p.outer, true);
        }
        return t;
    }
    auto vals = evaluate_table(f, 3);
    for (const auto& a : s.refined) {
        if (a.up != p.up) continue;
        std::vector<Val> pt{a.v[0], a.v[1], a.v[2]};
        expect(t, pt, vals[code_of(pt)], !a.all_twos(), true);
    }
    return t;
}

TableCheck check_forbidding5(const PolyF3& f, const PieceSet& s, RhombusDir d, const std::vector<int>& roles) {
    TableCheck t;
    if (roles.size() != 5) throw std::invalid_argument("check_forbidding5: five roles");
    auto vals = evaluate_table(f, 5);
    auto [su, sd] = rhombus_shared(d);
    for (const auto& u : s.refined) {
        if (!u.up) continue;
        for (const auto& w : s.refined) {
            if (w.up || u.v[su] != w.v[sd]) continue;
            auto o4 = rhombus_outer(d, {u.v[0], u.v[1], u.v[2]}, {w.v[0], w.v[1], w.v[2]});
            std::array<Val, 4> o{Val(o4[0]), Val(o4[1]), Val(o4[2]), Val(o4[3])};
            std::vector<Val> pt(5);
            for (int i = 0; i < 5; ++i) pt[i] = roles[i] < 3 ? u.v[roles[i]] : w.v[roles[i] - 3];
            expect(t, pt, vals[code_of(pt)], !s.is_forbidden(d, o), false);
        }
    }
    return t;
}

}  // namespace puzzle
