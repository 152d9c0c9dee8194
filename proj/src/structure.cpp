#include "puzzle/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace puzzle {

const char* name(Backend b) { return b == Backend::groebner ? "groebner" : "oracle"; }

int groebner_size_limit() {
    if (const char* e = std::getenv("PUZZLE_MAX_GB_N")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 8;
}

int triangle_index(const TriangleGrid& g, const TriRef& t) {
    if (t.r < 1 || t.r > g.n() || t.y < 1 || t.y > (t.up ? t.r : t.r - 1))
        throw std::out_of_range("triangle outside the grid");
    return (t.r - 1) * (t.r - 1) + 2 * (t.y - 1) + (t.up ? 0 : 1);
}

Tiling point_to_tiling(const Assignment& point, std::shared_ptr<const TriangleGrid> grid,
                       std::shared_ptr<const PieceSet> pieces) {
    const TriangleGrid& g = *grid;
    const PieceSet& s = *pieces;
    if (static_cast<int>(point.size()) != g.N()) throw InvalidPoint("point has the wrong number of coordinates");
    Tiling t;
    t.grid = grid;
    t.pieces = pieces;
    t.values = point;
    auto val = [&](int iv) { return point[iv - 1]; };
    for (const auto& tp : g.triangles()) {
        AtomicPiece a{tp.tri.up, {val(tp.sides[0]), val(tp.sides[1]), val(tp.sides[2])}};
        if (a.v[0] > 2 || a.v[1] > 2 || a.v[2] > 2 || !s.in_refined(a))
            throw InvalidPoint("triangle " + to_string(a) + " is not an allowed atomic piece");
        t.atomic.push_back(a);
    }
    std::vector<RhombusLink> links;
    for (int d = 0; d < 3; ++d)
        for (const auto& r : g.rhombi(static_cast<RhombusDir>(d)))
            links.push_back({r.dir, triangle_index(g, r.up), triangle_index(g, r.down)});
    t.stitched = stitch(t.atomic, links);

    std::vector<int> owner(t.atomic.size(), -1);  // polygon recovered piece covering a triangle
    if (auto shape = s.polygon_shape()) {
        const auto& placements = g.polygons(*shape);
        for (int pi = 0; pi < static_cast<int>(placements.size()); ++pi) {
            const auto& pl = placements[pi];
            for (const auto& ip : s.implicit) {
                bool match = true;
                for (std::size_t q = 0; q < ip.positions.size(); ++q)
                    match = match && val(pl.intervals[ip.positions[q]]) == ip.values[q];
                if (!match) continue;
                const auto& ref = s.polygons[ip.polygon].refinement;
                for (std::size_t i = 0; i < pl.intervals.size(); ++i)
                    if (val(pl.intervals[i]) != ref[i])
                        throw InvalidPoint("implicit piece without its polygon piece");
                RecoveredPiece rp;
                rp.kind = RecoveredPiece::Kind::polygon;
                rp.polygon = ip.polygon;
                rp.placement = pi;
                for (const auto& tr : pl.triangles) {
                    int k = triangle_index(g, tr);
                    if (owner[k] >= 0) throw InvalidPoint("overlapping polygon pieces");
                    owner[k] = static_cast<int>(t.recovered.size());
                    rp.tris.push_back(k);
                }
                t.recovered.push_back(std::move(rp));
                break;
            }
        }
    }
    for (const auto& sp : t.stitched) {
        bool inside_a = owner[sp.tri_a] >= 0;
        bool inside_b = sp.tri_b >= 0 && owner[sp.tri_b] >= 0;
        if (sp.kind == StitchedPiece::Kind::rhombus && inside_a != inside_b)
            throw InvalidPoint("rhombus crosses a polygon piece boundary");
        if (inside_a) continue;
        RecoveredPiece rp;
        if (sp.kind == StitchedPiece::Kind::triangle) {
            rp.kind = RecoveredPiece::Kind::triangle;
            rp.atom = sp.atom;
            rp.tris = {sp.tri_a};
            if (!s.in_omega(TrianglePiece{sp.atom.up, sp.atom.v}))
                throw InvalidPoint("stitched triangle " + to_string(sp.atom) + " is not a piece");
        } else {
            rp.kind = RecoveredPiece::Kind::rhombus;
            rp.dir = sp.dir;
            rp.outer = sp.outer;
            rp.tris = {sp.tri_a, sp.tri_b};
            auto it = std::find(s.rhombi.begin(), s.rhombi.end(), RhombusPiece{sp.dir, sp.outer});
            if (it == s.rhombi.end())
                throw InvalidPoint("stitched rhombus " + to_string(RhombusPiece{sp.dir, sp.outer}) + " is not a piece");
            rp.equivariant = it->equivariant;
        }
        t.recovered.push_back(std::move(rp));
    }
    return t;
}

int k_sign(const PieceSet& s, const std::string& lambda, const std::string& mu, const std::string& nu) {
    // The K-theory sets are the ones with polygon pieces.
    if (s.polygons.empty()) return 1;
    int d = word_weight(nu) - word_weight(lambda) - word_weight(mu);
    return (d % 2 == 0) ? 1 : -1;
}

int k_sign(BuiltinId id, const std::string& lambda, const std::string& mu, const std::string& nu) {
    return k_sign(builtin_piece_set(id), lambda, mu, nu);
}

ConstantResult constant(const Boundary& b, std::shared_ptr<const PieceSet> pieces, Backend backend, bool want_tilings) {
    if (b.free_side()) throw BadBoundary("constant needs all three boundary words");
    auto [n, k] = check_boundary(b);
    (void)k;
    ConstantResult res;
    std::vector<Assignment> points;
    std::shared_ptr<const TriangleGrid> grid;
    if (backend == Backend::groebner) {
        if (n > groebner_size_limit())
            throw BackendInfeasible("Groebner backend refuses n=" + std::to_string(n) + " (limit " +
                                    std::to_string(groebner_size_limit()) + ", see PUZZLE_MAX_GB_N)");
        PuzzleIdeal I = build_ideal(b, pieces, IdealKind::full);
        GroebnerBasis gb = buchberger(I, MonomialOrder::lex(I.nvars()));
        points = enumerate_variety(gb);
        grid = I.grid;
        res.count = points.size();
    } else {
        OraclePlan plan(b, pieces);
        if (want_tilings) {
            points = plan.enumerate(std::numeric_limits<std::size_t>::max());
            res.count = points.size();
        } else {
            for (const auto& [w, c] : plan.count_parallel()) res.count += c;
        }
        grid = std::make_shared<TriangleGrid>(plan.grid());
    }
    res.signed_count = k_sign(*pieces, *b.lambda, *b.mu, *b.nu) * static_cast<long long>(res.count);
    if (want_tilings)
        for (const auto& p : points) res.tilings.push_back(point_to_tiling(p, grid, pieces));
    return res;
}

WeightPoly::WeightPoly(long long c) {
    if (c) terms_[{}] = c;
}

WeightPoly WeightPoly::from_factors(const std::vector<WeightFactor>& f) {
    WeightPoly w(1);
    for (const auto& x : f) {
        WeightPoly l;
        if (x.i != x.j) {
            l.terms_[{x.i}] += 1;
            l.terms_[{x.j}] -= 1;
        }
        w = w * l;
    }
    return w;
}

WeightPoly WeightPoly::operator+(const WeightPoly& o) const {
    WeightPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        long long v = (r.terms_[m] += c);
        if (!v) r.terms_.erase(m);
    }
    return r;
}

WeightPoly WeightPoly::operator*(const WeightPoly& o) const {
    WeightPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<int> m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            long long v = (r.terms_[m] += ca * cb);
            if (!v) r.terms_.erase(m);
        }
    return r;
}

bool WeightPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

long long WeightPoly::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? 0 : it->second;
}

std::string to_string(const WeightPoly& w) {
    if (w.is_zero()) return "0";
    std::vector<std::pair<std::vector<int>, long long>> t(w.terms().begin(), w.terms().end());
    std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::ostringstream o;
    bool first = true;
    for (const auto& [m, c] : t) {
        if (!first) o << ' ';
        first = false;
        o << (c < 0 ? '-' : '+') << (c < 0 ? -c : c);
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            o << "*y" << m[i];
            if (j - i > 1) o << '^' << (j - i);
            i = j;
        }
    }
    return o.str();
}

std::string to_string(const std::vector<WeightFactor>& f) {
    if (f.empty()) return "1";
    std::string s;
    for (const auto& x : f) s += "(y" + std::to_string(x.i) + "-y" + std::to_string(x.j) + ")";
    return s;
}

WeightFactor drag(const TriangleGrid& g, const TriRef& up) {
    if (!up.up) throw std::invalid_argument("drag starts from the up triangle of a piece");
    TriRef se = up, sw = up;
    while (se.r < g.n()) {
        ++se.r;
        ++se.y;
    }
    while (sw.r < g.n()) ++sw.r;
    return {se.y, sw.y};
}

std::vector<WeightFactor> tiling_weight(const Tiling& t) {
    std::vector<WeightFactor> out;
    const auto& tris = t.grid->triangles();
    for (const auto& rp : t.recovered) {
        if (rp.kind != RecoveredPiece::Kind::rhombus || !rp.equivariant) continue;
        out.push_back(drag(*t.grid, tris[rp.tris[0]].tri));
    }
    return out;
}

WeightPoly equivariant_constant(const Boundary& b, Backend backend) {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaT));
    ConstantResult r = constant(b, S, backend, true);
    WeightPoly sum;
    for (const auto& t : r.tilings) sum += WeightPoly::from_factors(tiling_weight(t));
    return sum;
}

WordCounts side_free_sweep(const Boundary& b, std::shared_ptr<const PieceSet> pieces, Backend backend) {
    auto side = b.free_side();
    if (!side) throw BadBoundary("sweep needs exactly one free side");
    auto [n, k] = check_boundary(b);
    (void)k;
    if (backend == Backend::oracle) {
        WordCounts out;
        for (const auto& [w, c] : count_by_free_word(b, *pieces))
            if (c) out[w] = c;
        return out;
    }
    if (n > groebner_size_limit())
        throw BackendInfeasible("Groebner backend refuses n=" + std::to_string(n) + " (limit " +
                                std::to_string(groebner_size_limit()) + ", see PUZZLE_MAX_GB_N)");
    PuzzleIdeal I = build_ideal(b, pieces, IdealKind::side_free);
    const auto& keep = I.grid->boundary(*side);
    std::set<int> kept(keep.begin(), keep.end());
    std::vector<int> elim;
    for (int v = 1; v <= I.nvars(); ++v)
        if (!kept.count(v)) elim.push_back(v);
    MonomialOrder order = MonomialOrder::block_lex(elim, keep);
    GroebnerBasis gb = buchberger(I, order);
    GroebnerBasis el = eliminate(gb, keep);
    WordCounts out;
    for (const auto& pp : point_decomposition(el)) {
        std::vector<PolyF3> gens = gb.elements;
        gens.insert(gens.end(), pp.prime.begin(), pp.prime.end());
        GroebnerBasis sum = buchberger(gens, order);
        std::string w;
        for (Val v : pp.point) w.push_back(static_cast<char>('0' + v));
        std::uint64_t c = enumerate_variety(sum).size();
        if (c) out[w] = c;
    }
    return out;
}

std::string format_table(const WordCounts& counts, const PieceSet& s, const Boundary& b) {
    std::ostringstream o;
    auto side = b.free_side();
    const char* key = !side || *side == Side::bottom ? "nu" : *side == Side::left ? "lambda" : "mu";
    for (const auto& [w, c] : counts) {
        std::string l = b.lambda.value_or(w), m = b.mu.value_or(w), nu = b.nu.value_or(w);
        long long sc = k_sign(s, l, m, nu) * static_cast<long long>(c);
        o << key << '=' << (side ? w : nu) << " count=" << c << " signed=" << sc << "\n";
    }
    return o.str();
}

}  // namespace puzzle
