#include "puzzle/synthesis.hpp"

#include <algorithm>
#include <stdexcept>

namespace puzzle {

namespace {

std::vector<std::vector<int>> exponent_columns(int k) {
    std::vector<std::vector<int>> cols;
    int total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        std::vector<int> e(k);
        int c = code;
        for (int i = k - 1; i >= 0; --i) {
            e[i] = c % 3;
            c /= 3;
        }
        cols.push_back(e);
    }
    std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        return da < db;
    });
    return cols;
}

F3 power(Val v, int e) {
    if (e == 0) return F3(1);
    return e == 1 ? F3(v) : F3(v * v);
}

}  // namespace

PolyF3 synth_from_table(int k, const std::vector<std::pair<std::vector<Val>, Val>>& rows) {
    auto cols = exponent_columns(k);
    std::vector<std::vector<F3>> A;
    std::vector<F3> b;
    for (const auto& [pt, val] : rows) {
        std::vector<F3> row;
        row.reserve(cols.size());
        for (const auto& e : cols) {
            F3 x(1);
            for (int i = 0; i < k; ++i) x *= power(pt[i], e[i]);
            row.push_back(x);
        }
        A.push_back(std::move(row));
        b.push_back(F3(val));
    }
    auto sol = f3_linear_solve(A, b);
    if (!sol) throw std::logic_error("template constraint table is inconsistent");
    std::vector<PolyF3::Term> terms;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if ((*sol)[c].is_zero()) continue;
        std::vector<Monomial::Factor> f;
        for (int i = 0; i < k; ++i)
            if (cols[c][i]) f.push_back({i + 1, cols[c][i]});
        terms.push_back({Monomial::from_factors(f), (*sol)[c]});
    }
    return PolyF3::from_terms(std::move(terms));
}

PolyF3 interpolate(int k, const std::vector<Val>& values) {
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    if (values.size() != total) throw std::invalid_argument("interpolate: table size");
    // Inverse of the 3x3 Vandermonde matrix on {0,1,2}, column by column.
    std::vector<std::vector<F3>> V = {{1, 0, 0}, {1, 1, 1}, {1, 2, 1}};
    F3 inv[3][3];
    for (int j = 0; j < 3; ++j) {
        std::vector<F3> e(3);
        e[j] = F3(1);
        auto col = f3_linear_solve(V, e);
        for (int i = 0; i < 3; ++i) inv[i][j] = (*col)[i];
    }
    std::vector<Val> c(values);
    std::size_t stride = 1;
    for (int axis = k - 1; axis >= 0; --axis) {
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % 3 != 0) continue;
            F3 g[3] = {F3(c[base]), F3(c[base + stride]), F3(c[base + 2 * stride])};
            for (int i = 0; i < 3; ++i) {
                F3 s = inv[i][0] * g[0] + inv[i][1] * g[1] + inv[i][2] * g[2];
                c[base + i * stride] = s.value();
            }
        }
        stride *= 3;
    }
    std::vector<PolyF3::Term> terms;
    for (std::size_t code = 0; code < total; ++code) {
        if (!c[code]) continue;
        std::vector<Monomial::Factor> f;
        std::size_t x = code;
        for (int i = k - 1; i >= 0; --i) {
            int e = static_cast<int>(x % 3);
            x /= 3;
            if (e) f.push_back({i + 1, e});
        }
        terms.push_back({Monomial::from_factors(f), F3(c[code])});
    }
    return PolyF3::from_terms(std::move(terms));
}

PolyF3 synth_distinguishing(const std::vector<AtomicPiece>& refined, bool up) {
    std::vector<std::pair<std::vector<Val>, Val>> rows;
    for (const auto& a : atomic_universe()) {
        if (a.up != up) continue;
        bool in = std::find(refined.begin(), refined.end(), a) != refined.end();
        rows.push_back({{a.v[0], a.v[1], a.v[2]}, static_cast<Val>(in ? 0 : 1)});
    }
    return synth_from_table(3, rows);
}

PolyF3 synth_forbidding(const PieceSet& s, RhombusDir d) {
    std::vector<std::pair<std::vector<Val>, Val>> rows;
    for (const auto& o : s.psi(d)) rows.push_back({{o[0], o[1], o[2], o[3]}, static_cast<Val>(s.is_forbidden(d, o))});
    return synth_from_table(4, rows);
}

PolyF3 synth_implying(const PieceSet& s, const ImplicitPiece& p) {
    const auto& poly = s.polygons.at(p.polygon);
    const auto& L = polygon_layout(poly.shape);
    const int m = static_cast<int>(L.intervals.size());
    std::vector<char> designated(m, 0);
    for (int pos : p.positions) designated[pos] = 1;
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    std::vector<Val> values(total, 0);
    std::vector<Val> pt(m);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        for (int i = m - 1; i >= 0; --i) {
            pt[i] = static_cast<Val>(x % 3);
            x /= 3;
        }
        bool matched = true;
        for (std::size_t q = 0; q < p.positions.size(); ++q) matched = matched && pt[p.positions[q]] == p.values[q];
        if (!matched) continue;
        bool target = true;
        for (int i = 0; i < m; ++i)
            if (!designated[i]) target = target && pt[i] == poly.refinement[i];
        values[code] = target ? 0 : 1;
    }
    return interpolate(m, values);
}

PolyF3 synth_edge(const PieceSet& s, const ImplicitPiece& p) {
    std::vector<std::pair<std::vector<Val>, Val>> rows;
    if (p.kind == ImplicitPiece::Kind::rhombus) {
        for (const auto& o : s.psi(p.dir))
            rows.push_back({{o[0], o[1], o[2], o[3]}, static_cast<Val>(o == p.outer)});
        return synth_from_table(4, rows);
    }
    for (const auto& a : s.refined) {
        if (a.up != p.up) continue;
        rows.push_back({{a.v[0], a.v[1], a.v[2]}, static_cast<Val>(a.all_twos())});
    }
    return synth_from_table(3, rows);
}

TemplateBundle synthesize(const PieceSet& s) {
    TemplateBundle t;
    t.f_up = synth_distinguishing(s.refined, true);
    t.f_down = synth_distinguishing(s.refined, false);
    for (int d = 0; d < 3; ++d) t.f_rhombus[d] = synth_forbidding(s, static_cast<RhombusDir>(d));
    for (const auto& ip : s.implicit) {
        t.f_implying.push_back(synth_implying(s, ip));
        t.f_edge.push_back(synth_edge(s, ip));
    }
    return t;
}

}  // namespace puzzle
