#include "puzzle/pieces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace puzzle {

bool AtomicPiece::regular() const {
    int twos = (v[0] == 2) + (v[1] == 2) + (v[2] == 2);
    return atomic() && twos == 1;
}

std::string to_string(const AtomicPiece& p) {
    std::string s = p.up ? "up(" : "down(";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ',';
        s += char('0' + p.v[i]);
    }
    return s + ")";
}

std::string to_string(const RhombusPiece& p) {
    std::string s = std::string(name(p.dir)) + "-rhombus(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ',';
        s += char('0' + p.outer[i]);
    }
    return s + ")";
}

std::string to_string(const ImplicitPiece& p) {
    if (p.kind == ImplicitPiece::Kind::all_twos) return p.up ? "up(2,2,2)" : "down(2,2,2)";
    return to_string(RhombusPiece{p.dir, p.outer});
}

std::vector<AtomicPiece> atomic_universe() {
    std::vector<AtomicPiece> out;
    for (bool up : {true, false})
        for (Val a = 0; a < 3; ++a)
            for (Val b = 0; b < 3; ++b) {
                Val c = static_cast<Val>((6 - a - b) % 3);
                out.push_back({up, {a, b, c}});
            }
    return out;
}

std::vector<StitchedPiece> stitch(const std::vector<AtomicPiece>& tris, const std::vector<RhombusLink>& links) {
    std::vector<int> partner(tris.size(), -1);
    std::vector<const RhombusLink*> link_of(tris.size(), nullptr);
    for (const auto& l : links) {
        const auto& u = tris[l.up_tri];
        const auto& d = tris[l.down_tri];
        auto [iu, id] = rhombus_shared(l.dir);
        if (u.v[iu] != 2 || d.v[id] != 2) continue;
        if (!u.regular() || !d.regular()) continue;
        partner[l.up_tri] = l.down_tri;
        partner[l.down_tri] = l.up_tri;
        link_of[l.up_tri] = &l;
        link_of[l.down_tri] = &l;
    }
    std::vector<StitchedPiece> out;
    for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
        if (partner[i] < 0) {
            StitchedPiece p{StitchedPiece::Kind::triangle, i};
            p.atom = tris[i];
            out.push_back(p);
        } else if (partner[i] > i) {
            const RhombusLink& l = *link_of[i];
            StitchedPiece p{StitchedPiece::Kind::rhombus, l.up_tri, l.down_tri, l.dir};
            std::array<int, 3> u{}, d{};
            for (int k = 0; k < 3; ++k) {
                u[k] = tris[l.up_tri].v[k];
                d[k] = tris[l.down_tri].v[k];
            }
            auto o = rhombus_outer(l.dir, u, d);
            for (int k = 0; k < 4; ++k) p.outer[k] = static_cast<Val>(o[k]);
            out.push_back(p);
        }
    }
    return out;
}

const PolygonPlacement& polygon_layout(PolygonShape s) {
    static const TriangleGrid g2(2), g3(3), g4(4);
    switch (s) {
        case PolygonShape::up2: return g2.polygons(s).at(0);
        case PolygonShape::hexagon: return g3.polygons(s).at(0);
        case PolygonShape::down2: return g4.polygons(s).at(0);
    }
    throw std::logic_error("unknown polygon shape");
}

std::vector<AtomicPiece> atomic_refinement(const TrianglePiece& p) {
    AtomicPiece a{p.up, p.v};
    if (!a.atomic()) throw NotRefinable("triangle " + to_string(a) + " is not atomic");
    return {a};
}

std::pair<AtomicPiece, AtomicPiece> rhombus_halves(RhombusDir d, const std::array<Val, 4>& o, Val m) {
    AtomicPiece u{true, {}}, w{false, {}};
    switch (d) {
        case RhombusDir::left:  // (top, right, bottom, left); up.left = down.right = m
            u.v = {m, o[1], o[2]};
            w.v = {o[3], o[0], m};
            break;
        case RhombusDir::right:  // up.right = down.left = m
            u.v = {o[3], m, o[2]};
            w.v = {m, o[0], o[1]};
            break;
        case RhombusDir::bottom:  // (NW, NE, SE, SW); up.bottom = down.top = m
            u.v = {o[0], o[1], m};
            w.v = {o[3], m, o[2]};
            break;
    }
    return {u, w};
}

std::optional<Val> rhombus_middle_value(RhombusDir d, const std::array<Val, 4>& o) {
    for (Val m = 0; m < 3; ++m) {
        auto [u, w] = rhombus_halves(d, o, m);
        if (u.atomic() && w.atomic()) return m;
    }
    return std::nullopt;
}

std::vector<std::pair<AtomicPiece, AtomicPiece>> atomic_refinement(const RhombusPiece& p) {
    std::vector<std::pair<AtomicPiece, AtomicPiece>> out;
    for (Val m = 0; m < 3; ++m) {
        auto h = rhombus_halves(p.dir, p.outer, m);
        if (h.first.atomic() && h.second.atomic()) out.push_back(h);
    }
    if (out.empty()) throw NotRefinable(to_string(p) + " admits no atomic tiling");
    return out;
}

std::vector<std::vector<Val>> atomic_refinement(PolygonShape shape, const std::vector<Val>& boundary) {
    const auto& L = polygon_layout(shape);
    if (static_cast<int>(boundary.size()) != L.boundary_count)
        throw std::invalid_argument(std::string("polygon ") + name(shape) + " needs " +
                                    std::to_string(L.boundary_count) + " boundary values");
    const int m = static_cast<int>(L.intervals.size());
    const int free = m - L.boundary_count;
    std::vector<std::vector<Val>> out;
    std::vector<Val> a(m);
    std::copy(boundary.begin(), boundary.end(), a.begin());
    int total = 1;
    for (int i = 0; i < free; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        int c = code;
        for (int i = free - 1; i >= 0; --i) {
            a[L.boundary_count + i] = static_cast<Val>(c % 3);
            c /= 3;
        }
        bool ok = true;
        for (const auto& ts : L.triangle_sides) {
            if ((a[ts[0]] + a[ts[1]] + a[ts[2]]) % 3 != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(a);
    }
    if (out.empty()) throw NotRefinable(std::string("polygon ") + name(shape) + " admits no atomic tiling");
    return out;
}

namespace {

std::vector<AtomicPiece> layout_atoms(const PolygonPlacement& L, const std::vector<Val>& a) {
    std::vector<AtomicPiece> atoms;
    for (std::size_t t = 0; t < L.triangles.size(); ++t) {
        const auto& ts = L.triangle_sides[t];
        atoms.push_back({L.triangles[t].up, {a[ts[0]], a[ts[1]], a[ts[2]]}});
    }
    return atoms;
}

std::vector<RhombusLink> layout_links(const PolygonPlacement& L) {
    std::vector<RhombusLink> links;
    for (const auto& r : L.rhombi) links.push_back({r.dir, r.up_tri, r.down_tri});
    return links;
}

int code4(const std::array<Val, 4>& o) { return o[0] * 27 + o[1] * 9 + o[2] * 3 + o[3]; }

bool is_f2(const std::array<Val, 4>& o) {
    return std::all_of(o.begin(), o.end(), [](Val v) { return v < 2; });
}

}  // namespace

bool PieceSet::in_omega(const RhombusPiece& r) const {
    return std::find(rhombi.begin(), rhombi.end(), r) != rhombi.end();
}

bool PieceSet::in_omega(const TrianglePiece& t) const {
    return std::find(triangles.begin(), triangles.end(), t) != triangles.end();
}

std::optional<PolygonShape> PieceSet::polygon_shape() const {
    if (polygons.empty()) return std::nullopt;
    return polygons.front().shape;
}

std::vector<RhombusPiece> PieceSet::equivariant_pieces() const {
    std::vector<RhombusPiece> out;
    for (const auto& r : rhombi)
        if (r.equivariant) out.push_back(r);
    return out;
}

std::vector<std::array<Val, 4>> PieceSet::psi(RhombusDir d, const std::vector<AtomicPiece>& allowed) {
    std::set<std::array<Val, 4>> out;
    for (const auto& u : allowed) {
        if (!u.up) continue;
        for (const auto& w : allowed) {
            if (w.up) continue;
            auto [iu, iw] = rhombus_shared(d);
            if (u.v[iu] != w.v[iw]) continue;
            std::array<int, 3> ui{u.v[0], u.v[1], u.v[2]}, wi{w.v[0], w.v[1], w.v[2]};
            auto o = rhombus_outer(d, ui, wi);
            out.insert({static_cast<Val>(o[0]), static_cast<Val>(o[1]), static_cast<Val>(o[2]),
                        static_cast<Val>(o[3])});
        }
    }
    return {out.begin(), out.end()};
}

DerivedSets derive_implicit_forbidden(const PieceSet& s) {
    DerivedSets out{{}, {}, true};
    std::vector<std::string> notes;
    for (int pi = 0; pi < static_cast<int>(s.polygons.size()); ++pi) {
        const auto& p = s.polygons[pi];
        const auto& L = polygon_layout(p.shape);
        std::vector<ImplicitPiece> mine;
        for (const auto& sp : p.stitched) {
            ImplicitPiece ip{};
            ip.polygon = pi;
            if (sp.kind == StitchedPiece::Kind::rhombus) {
                RhombusPiece rp{sp.dir, sp.outer};
                if (s.in_omega(rp)) continue;
                ip.kind = ImplicitPiece::Kind::rhombus;
                ip.dir = sp.dir;
                ip.outer = sp.outer;
                for (int k = 0; k < static_cast<int>(L.rhombi.size()); ++k) {
                    const auto& lr = L.rhombi[k];
                    if (lr.dir == sp.dir && lr.up_tri == sp.tri_a && lr.down_tri == sp.tri_b) {
                        ip.local_rhombus = k;
                        for (int q = 0; q < 4; ++q) {
                            ip.positions.push_back(lr.outer[q]);
                            ip.values.push_back(sp.outer[q]);
                        }
                    }
                }
            } else {
                if (!sp.atom.all_twos()) continue;
                ip.kind = ImplicitPiece::Kind::all_twos;
                ip.up = sp.atom.up;
                ip.local_triangle = sp.tri_a;
                for (int q = 0; q < 3; ++q) {
                    ip.positions.push_back(L.triangle_sides[sp.tri_a][q]);
                    ip.values.push_back(2);
                }
            }
            mine.push_back(ip);
        }
        auto same = [](const ImplicitPiece& a, const ImplicitPiece& b) {
            if (a.kind != b.kind) return false;
            if (a.kind == ImplicitPiece::Kind::all_twos) return a.up == b.up;
            return a.dir == b.dir && a.outer == b.outer;
        };
        for (std::size_t i = 0; i < mine.size(); ++i) {
            for (std::size_t j = i + 1; j < mine.size(); ++j) {
                if (same(mine[i], mine[j])) {
                    out.separable = false;
                    notes.push_back(to_string(mine[i]) + " occurs twice in one stitching");
                }
            }
            for (const auto& prev : out.implicit) {
                if (same(prev, mine[i])) {
                    out.separable = false;
                    notes.push_back(to_string(mine[i]) + " is implicit for two polygon pieces");
                }
            }
        }
        // Keep one entry per distinct implicit piece.
        for (const auto& ip : mine) {
            bool dup = false;
            for (const auto& prev : out.implicit) dup = dup || same(prev, ip);
            if (!dup) out.implicit.push_back(ip);
        }
    }

    for (int d = 0; d < 3; ++d) {
        auto dir = static_cast<RhombusDir>(d);
        std::set<std::array<Val, 4>> stitchable;
        for (const auto& u : s.refined) {
            if (!u.up || !u.regular()) continue;
            for (const auto& w : s.refined) {
                if (w.up || !w.regular()) continue;
                auto [iu, iw] = rhombus_shared(dir);
                if (u.v[iu] != 2 || w.v[iw] != 2) continue;
                std::array<int, 3> ui{u.v[0], u.v[1], u.v[2]}, wi{w.v[0], w.v[1], w.v[2]};
                auto o = rhombus_outer(dir, ui, wi);
                std::array<Val, 4> ov{static_cast<Val>(o[0]), static_cast<Val>(o[1]), static_cast<Val>(o[2]),
                                      static_cast<Val>(o[3])};
                if (is_f2(ov)) stitchable.insert(ov);
            }
        }
        for (const auto& o : stitchable) {
            RhombusPiece rp{dir, o};
            if (s.in_omega(rp)) continue;
            bool implicit = false;
            for (const auto& ip : out.implicit)
                implicit = implicit || (ip.kind == ImplicitPiece::Kind::rhombus && ip.dir == dir && ip.outer == o);
            if (!implicit) out.forbidden.push_back(rp);
        }
    }
    return out;
}

void PieceSet::derive() {
    std::set<AtomicPiece> ref;
    for (const auto& t : triangles) {
        for (Val v : t.v)
            if (v > 1) throw std::invalid_argument("triangle pieces must be F2-valued");
        for (const auto& a : atomic_refinement(t)) ref.insert(a);
    }
    for (const auto& r : rhombi) {
        for (Val v : r.outer)
            if (v > 1) throw std::invalid_argument("rhombus pieces must be F2-valued");
        for (const auto& [u, w] : atomic_refinement(r)) {
            ref.insert(u);
            ref.insert(w);
        }
    }
    std::set<PolygonShape> shapes;
    for (auto& p : polygons) {
        for (Val v : p.boundary)
            if (v > 1) throw std::invalid_argument("polygon pieces must be F2-valued");
        shapes.insert(p.shape);
        p.tilings = atomic_refinement(p.shape, p.boundary);
        if (p.chosen < 0 || p.chosen >= static_cast<int>(p.tilings.size()))
            throw std::invalid_argument("refinement index out of range");
        p.refinement = p.tilings[p.chosen];
        const auto& L = polygon_layout(p.shape);
        auto atoms = layout_atoms(L, p.refinement);
        for (const auto& a : atoms) ref.insert(a);
        p.stitched = stitch(atoms, layout_links(L));
    }
    if (shapes.size() > 1) throw UnsupportedPieceSet("piece sets may use only one polygon shape");
    refined.assign(ref.begin(), ref.end());
    refined_table_ = {};
    for (const auto& a : refined) refined_table_[a.up ? 0 : 1][a.code()] = true;

    DerivedSets d = derive_implicit_forbidden(*this);
    implicit = d.implicit;
    forbidden = d.forbidden;
    separable = d.separable;
    forbidden_table_ = {};
    for (auto& t : implicit_table_) t.fill(-1);
    implicit_222_ = {-1, -1};
    for (const auto& f : forbidden) forbidden_table_[static_cast<int>(f.dir)][code4(f.outer)] = true;
    for (int i = 0; i < static_cast<int>(implicit.size()); ++i) {
        const auto& ip = implicit[i];
        if (ip.kind == ImplicitPiece::Kind::rhombus)
            implicit_table_[static_cast<int>(ip.dir)][code4(ip.outer)] = i;
        else
            implicit_222_[ip.up ? 0 : 1] = i;
    }
}

namespace {

const char* const kOmega0 =
    "up 0 0 0\n"
    "up 1 1 1\n"
    "down 0 0 0\n"
    "down 1 1 1\n"
    "rhombus left 0 1 0 1\n"
    "rhombus right 1 0 1 0\n"
    "rhombus bottom 1 0 1 0\n";

}  // namespace

std::string builtin_piece_text(BuiltinId id) {
    std::string s = std::string("name ") + builtin_name(id) + "\n" + kOmega0;
    switch (id) {
        case BuiltinId::omega0: break;
        case BuiltinId::omegaT: s += "rhombus bottom 0 1 0 1 equivariant\n"; break;
        case BuiltinId::omegaA: s += "polygon down2 0 1 0 1 0 1 label A\n"; break;
        case BuiltinId::omegaB: s += "polygon up2 0 1 0 1 0 1 label B\n"; break;
        case BuiltinId::omegaC: s += "polygon hexagon 1 0 1 0 1 0 internal 1 2 1 0 2 0 label C\n"; break;
        case BuiltinId::omegaD: s += "polygon hexagon 0 1 0 1 0 1 internal 0 2 0 1 2 1 label D\n"; break;
    }
    return s;
}

const char* builtin_name(BuiltinId id) {
    switch (id) {
        case BuiltinId::omega0: return "Omega0";
        case BuiltinId::omegaT: return "OmegaT";
        case BuiltinId::omegaA: return "OmegaA";
        case BuiltinId::omegaB: return "OmegaB";
        case BuiltinId::omegaC: return "OmegaC";
        case BuiltinId::omegaD: return "OmegaD";
    }
    return "?";
}

std::vector<BuiltinId> all_builtins() {
    return {BuiltinId::omega0, BuiltinId::omegaT, BuiltinId::omegaA,
            BuiltinId::omegaB, BuiltinId::omegaC, BuiltinId::omegaD};
}

std::optional<BuiltinId> parse_builtin_id(const std::string& raw) {
    std::string s = raw;
    // Accept "Ω0", "Omega0", "omega0", "O0", "0", "T", "ΩT", ...
    const std::string omega = "\xCE\xA9";
    if (s.rfind(omega, 0) == 0) s = s.substr(omega.size());
    std::string low;
    for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low.rfind("omega", 0) == 0) low = low.substr(5);
    if (low.size() == 2 && low[0] == 'o') low = low.substr(1);
    if (low.size() == 2 && low[0] == '_') low = low.substr(1);
    if (low == "0") return BuiltinId::omega0;
    if (low == "t") return BuiltinId::omegaT;
    if (low == "a") return BuiltinId::omegaA;
    if (low == "b") return BuiltinId::omegaB;
    if (low == "c") return BuiltinId::omegaC;
    if (low == "d") return BuiltinId::omegaD;
    return std::nullopt;
}

PieceSet builtin_piece_set(BuiltinId id, std::optional<int> refinement_override) {
    PieceSet s = parse_piece_set(builtin_piece_text(id));
    if (refinement_override) {
        for (auto& p : s.polygons) p.chosen = *refinement_override;
        s.derive();
    }
    return s;
}

PieceSet parse_piece_set(const std::string& text) {
    PieceSet s;
    s.name = "custom";
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    struct PendingPolygon {
        std::size_t index;
        std::optional<int> refine;
        std::vector<Val> internal;
    };
    std::vector<PendingPolygon> pending;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("piece set line " + std::to_string(lineno) + ": " + msg);
    };
    auto read_vals = [&](std::istringstream& ls, int count) {
        std::vector<Val> v;
        for (int i = 0; i < count; ++i) {
            int x;
            if (!(ls >> x) || x < 0 || x > 2) fail("expected a value in 0..2");
            v.push_back(static_cast<Val>(x));
        }
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "name") {
            ls >> s.name;
        } else if (kw == "up" || kw == "down") {
            auto v = read_vals(ls, 3);
            s.triangles.push_back({kw == "up", {v[0], v[1], v[2]}});
        } else if (kw == "rhombus") {
            std::string dir;
            ls >> dir;
            RhombusPiece r{};
            if (dir == "left")
                r.dir = RhombusDir::left;
            else if (dir == "right")
                r.dir = RhombusDir::right;
            else if (dir == "bottom")
                r.dir = RhombusDir::bottom;
            else
                fail("unknown rhombus direction '" + dir + "'");
            auto v = read_vals(ls, 4);
            r.outer = {v[0], v[1], v[2], v[3]};
            std::string extra;
            while (ls >> extra) {
                if (extra == "equivariant")
                    r.equivariant = true;
                else
                    fail("unknown rhombus flag '" + extra + "'");
            }
            s.rhombi.push_back(r);
        } else if (kw == "polygon") {
            std::string shape;
            ls >> shape;
            PolygonPiece p{};
            if (shape == "up2")
                p.shape = PolygonShape::up2;
            else if (shape == "down2")
                p.shape = PolygonShape::down2;
            else if (shape == "hexagon")
                p.shape = PolygonShape::hexagon;
            else
                fail("unknown polygon shape '" + shape + "'");
            const auto& L = polygon_layout(p.shape);
            p.boundary = read_vals(ls, L.boundary_count);
            PendingPolygon pp{s.polygons.size(), std::nullopt, {}};
            std::string extra;
            while (ls >> extra) {
                if (extra == "refine") {
                    int k;
                    if (!(ls >> k)) fail("refine needs an index");
                    pp.refine = k;
                } else if (extra == "internal") {
                    pp.internal = read_vals(ls, static_cast<int>(L.intervals.size()) - L.boundary_count);
                } else if (extra == "label") {
                    ls >> p.label;
                } else {
                    fail("unknown polygon option '" + extra + "'");
                }
            }
            s.polygons.push_back(p);
            pending.push_back(pp);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    for (auto& pp : pending) {
        auto& p = s.polygons[pp.index];
        auto tilings = atomic_refinement(p.shape, p.boundary);
        if (pp.refine) p.chosen = *pp.refine;
        if (!pp.internal.empty()) {
            std::vector<Val> full = p.boundary;
            full.insert(full.end(), pp.internal.begin(), pp.internal.end());
            auto it = std::find(tilings.begin(), tilings.end(), full);
            if (it == tilings.end()) throw NotRefinable("internal values do not give an atomic tiling");
            p.chosen = static_cast<int>(it - tilings.begin());
        }
    }
    s.derive();
    return s;
}

std::string format_piece_set(const PieceSet& s) {
    std::ostringstream o;
    o << "name " << s.name << "\n";
    for (const auto& t : s.triangles)
        o << (t.up ? "up" : "down") << ' ' << int(t.v[0]) << ' ' << int(t.v[1]) << ' ' << int(t.v[2]) << "\n";
    for (const auto& r : s.rhombi) {
        o << "rhombus " << name(r.dir);
        for (Val v : r.outer) o << ' ' << int(v);
        if (r.equivariant) o << " equivariant";
        o << "\n";
    }
    for (const auto& p : s.polygons) {
        o << "polygon " << name(p.shape);
        for (Val v : p.boundary) o << ' ' << int(v);
        o << " internal";
        for (std::size_t i = p.boundary.size(); i < p.refinement.size(); ++i) o << ' ' << int(p.refinement[i]);
        if (!p.label.empty()) o << " label " << p.label;
        o << "\n";
    }
    return o.str();
}

}  // namespace puzzle
