#include "puzzle/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace puzzle {

std::optional<Side> Boundary::free_side() const {
    if (!lambda) return Side::left;
    if (!mu) return Side::right;
    if (!nu) return Side::bottom;
    return std::nullopt;
}

std::pair<int, int> check_boundary(const Boundary& b) {
    int n = -1, k = -1, free = 0;
    for (const auto* w : {&b.lambda, &b.mu, &b.nu}) {
        if (!*w) {
            ++free;
            continue;
        }
        const std::string& s = **w;
        if (!is_binary_word(s)) throw BadBoundary("boundary word '" + s + "' is not a nonempty 0/1 string");
        int ones = static_cast<int>(std::count(s.begin(), s.end(), '1'));
        if (n < 0) {
            n = static_cast<int>(s.size());
            k = ones;
        } else if (static_cast<int>(s.size()) != n) {
            throw BadBoundary("boundary words have different lengths");
        } else if (ones != k) {
            throw BadBoundary("boundary words have different numbers of ones");
        }
    }
    if (free > 1) throw BadBoundary("at most one side may be free");
    if (n < 0) throw BadBoundary("no boundary word given");
    return {n, k};
}

const TemplateBundle& templates_for(const PieceSet& s) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<TemplateBundle>> cache;
    std::string key = format_piece_set(s);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<TemplateBundle>(synthesize(s))).first;
    return *it->second;
}

namespace {

PolyF3 instantiate(const PolyF3& tmpl, const std::vector<int>& vars) {
    std::vector<int> map(vars.size() + 1, 0);
    for (std::size_t i = 0; i < vars.size(); ++i) map[i + 1] = vars[i];
    return tmpl.renamed(map);
}

}  // namespace

std::vector<EdgeSite> uncovered_implicit_sites(const TriangleGrid& g, const PieceSet& s) {
    std::set<std::pair<int, std::vector<int>>> covered;
    if (auto shape = s.polygon_shape())
        for (const auto& pl : g.polygons(*shape))
            for (int p = 0; p < static_cast<int>(s.implicit.size()); ++p) {
                std::vector<int> site;
                for (int pos : s.implicit[p].positions) site.push_back(pl.intervals[pos]);
                covered.insert({p, site});
            }
    std::vector<EdgeSite> out;
    for (int p = 0; p < static_cast<int>(s.implicit.size()); ++p) {
        const auto& ip = s.implicit[p];
        std::vector<std::vector<int>> sites;
        if (ip.kind == ImplicitPiece::Kind::rhombus) {
            for (const auto& r : g.rhombi(ip.dir)) sites.push_back({r.outer.begin(), r.outer.end()});
        } else {
            for (const auto& t : g.triangles())
                if (t.tri.up == ip.up) sites.push_back({t.sides.begin(), t.sides.end()});
        }
        for (auto& site : sites)
            if (!covered.count({p, site})) out.push_back({p, std::move(site)});
    }
    return out;
}

PuzzleIdeal build_ideal(const Boundary& b, std::shared_ptr<const PieceSet> pieces, IdealKind kind,
                        const TemplateBundle* templates) {
    auto [n, k] = check_boundary(b);
    (void)k;
    if (!pieces->separable) throw UnsupportedPieceSet("piece set '" + pieces->name + "' is not separable");
    if (kind == IdealKind::side_free && !b.free_side())
        throw BadBoundary("side-free ideal needs a free side");
    const TemplateBundle& T = templates ? *templates : templates_for(*pieces);

    PuzzleIdeal I;
    I.grid = std::make_shared<TriangleGrid>(n);
    I.pieces = pieces;
    I.boundary = b;
    I.kind = kind;
    const TriangleGrid& g = *I.grid;

    std::set<int> free_vars;
    if (auto fs = b.free_side())
        for (int v : g.boundary(*fs)) free_vars.insert(v);
    for (int v = 1; v <= g.N(); ++v) I.f1.push_back({v, free_vars.count(v) ? 2 : 3});

    auto& F2 = I.families[0];
    const std::pair<Side, const std::optional<std::string>*> sides[] = {
        {Side::left, &b.lambda}, {Side::right, &b.mu}, {Side::bottom, &b.nu}};
    for (const auto& [side, word] : sides) {
        if (!*word) continue;
        const auto& idx = g.boundary(side);
        for (int j = 0; j < n; ++j) {
            PolyF3 p = PolyF3::variable(idx[j]);
            if ((**word)[j] == '1') p -= PolyF3(F3(1));
            F2.push_back(p);
        }
    }

    auto& F3s = I.families[1];
    auto& F4 = I.families[2];
    for (const auto& t : g.triangles()) {
        PolyF3 s;
        for (int v : t.sides) s += PolyF3::variable(v);
        F3s.push_back(s);
        F4.push_back(instantiate(t.tri.up ? T.f_up : T.f_down, {t.sides.begin(), t.sides.end()}));
    }

    if (kind != IdealKind::atomic) {
        auto& F5 = I.families[3];
        for (int d = 0; d < 3; ++d)
            for (const auto& r : g.rhombi(static_cast<RhombusDir>(d)))
                F5.push_back(instantiate(T.f_rhombus[d], {r.outer.begin(), r.outer.end()}));
    }

    if (kind == IdealKind::full || kind == IdealKind::side_free) {
        auto& F6 = I.families[4];
        if (auto shape = pieces->polygon_shape()) {
            for (const auto& pl : g.polygons(*shape))
                for (std::size_t i = 0; i < pieces->implicit.size(); ++i)
                    F6.push_back(instantiate(T.f_implying[i], pl.intervals));
        }
        for (const auto& site : uncovered_implicit_sites(g, *pieces))
            I.edge.push_back(instantiate(T.f_edge[site.implicit], site.intervals));
    }
    return I;
}

PuzzleIdeal build_ideal(const Boundary& b, const PieceSet& pieces, IdealKind kind) {
    return build_ideal(b, std::make_shared<PieceSet>(pieces), kind);
}

std::vector<PolyF3> PuzzleIdeal::generators() const {
    std::vector<PolyF3> out;
    std::set<std::string> seen;
    auto add = [&](const PolyF3& p) {
        if (p.is_zero()) return;
        if (seen.insert(to_string(p)).second) out.push_back(p);
    };
    for (const auto& fe : f1) {
        if (fe.degree == 2) add(PolyF3::from_terms({{Monomial::var(fe.var, 2), F3(1)}, {Monomial::var(fe.var), F3(2)}}));
    }
    for (const auto& fam : families)
        for (const auto& p : fam) add(p);
    for (const auto& p : edge) add(p);
    return out;
}

IdealStats ideal_stats(const PuzzleIdeal& I) {
    IdealStats s{};
    s.count[0] = I.f1.size();
    for (int k = 0; k < 5; ++k) s.count[k + 1] = I.families[k].size();
    for (const auto& fe : I.f1) s.quadratic_field += fe.degree == 2;
    s.edge = I.edge.size();
    return s;
}

std::string dump_ideal(const PuzzleIdeal& I) {
    std::ostringstream o;
    o << "# F1\n";
    for (const auto& fe : I.f1) o << 'x' << fe.var << '^' << fe.degree << " + 2*x" << fe.var << "\n";
    for (int k = 0; k < 5; ++k) {
        o << "# F" << (k + 2) << "\n";
        for (const auto& p : I.families[k]) o << to_string(p) << "\n";
    }
    if (!I.edge.empty()) {
        o << "# F6 edge\n";
        for (const auto& p : I.edge) o << to_string(p) << "\n";
    }
    return o.str();
}

}  // namespace puzzle
