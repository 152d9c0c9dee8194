#include "puzzle/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace puzzle {

namespace {

// Lattice point: x in half edges, y in rows (0 = apex of the big triangle).
using LP = std::pair<int, int>;

std::array<LP, 3> corners(int n, const TriRef& t) {
    int x0 = (n - t.r) + 2 * (t.y - 1);
    if (t.up) return {LP{x0, t.r}, LP{x0 + 1, t.r - 1}, LP{x0 + 2, t.r}};
    return {LP{x0 + 1, t.r - 1}, LP{x0 + 3, t.r - 1}, LP{x0 + 2, t.r}};
}

// Endpoints of each side in canonical order.
std::array<std::pair<LP, LP>, 3> side_segments(int n, const TriRef& t) {
    auto c = corners(n, t);
    if (t.up) return {{{c[0], c[1]}, {c[1], c[2]}, {c[0], c[2]}}};  // left, right, bottom
    return {{{c[0], c[2]}, {c[0], c[1]}, {c[1], c[2]}}};            // left, top, right
}

long cross(const LP& o, const LP& a, const LP& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
}

// Strict convex hull; lattice x is scaled by 1 and y by sqrt(3), which preserves orientation.
std::vector<LP> hull(std::vector<LP> p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return p;
    std::vector<LP> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_ascii(const Tiling& t, const RenderOptions& o) {
    const int n = t.grid->n();
    const auto& tris = t.grid->triangles();
    std::vector<char> glyph(tris.size(), '*');
    for (const auto& rp : t.recovered) {
        char c = '*';
        if (rp.kind == RecoveredPiece::Kind::polygon) {
            c = 'P';
        } else if (rp.kind == RecoveredPiece::Kind::rhombus) {
            c = rp.equivariant ? 'E' : rp.dir == RhombusDir::left ? 'L' : rp.dir == RhombusDir::right ? 'R' : 'B';
        } else {
            const auto& v = rp.atom.v;
            if (v[0] == v[1] && v[1] == v[2] && v[0] < 2) c = static_cast<char>('0' + v[0]);
        }
        for (int k : rp.tris) glyph[k] = c;
    }
    std::ostringstream out;
    for (int r = 1; r <= n; ++r) {
        out << std::string(n - r, ' ');
        for (int k = (r - 1) * (r - 1); k < r * r; ++k) out << glyph[k];
        out << '\n';
    }
    if (o.labels) {
        for (std::size_t k = 0; k < tris.size(); ++k) {
            const auto& tp = tris[k];
            out << (tp.tri.up ? "up(" : "down(") << tp.tri.r << ',' << tp.tri.y << ") ";
            for (int s = 0; s < 3; ++s) out << (s ? "/" : "") << int(t.values[tp.sides[s] - 1]);
            out << '\n';
        }
    }
    return out.str();
}

std::string render_svg(const Tiling& t, const RenderOptions& o) {
    const int n = t.grid->n();
    const auto& tris = t.grid->triangles();
    const double s = o.side, m = s / 2, hrow = s * std::sqrt(3.0) / 2;
    auto px = [&](const LP& p) { return std::make_pair(m + p.first * s / 2, m + p.second * hrow); };
    const double W = 2 * m + n * s, H = 2 * m + n * hrow;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(W) << "\" height=\""
        << fmt(H) << "\" viewBox=\"0 0 " << fmt(W) << ' ' << fmt(H) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(W) << "\" height=\"" << fmt(H) << "\" fill=\"white\"/>\n";

    auto polygon = [&](const std::vector<LP>& pts, const char* fill) {
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto [x, y] = px(pts[i]);
            out << (i ? " " : "") << fmt(x) << ',' << fmt(y);
        }
        out << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    };
    auto text = [&](double x, double y, double size, const std::string& str, const char* fill) {
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-family=\"monospace\" font-size=\""
            << fmt(size) << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"" << fill << "\">" << str
            << "</text>\n";
    };

    // Faint lattice underneath.
    for (const auto& tp : tris) {
        auto c = corners(n, tp.tri);
        out << "<polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            auto [x, y] = px(c[i]);
            out << (i ? " " : "") << fmt(x) << ',' << fmt(y);
        }
        out << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    }

    for (const auto& rp : t.recovered) {
        std::vector<LP> pts;
        for (int k : rp.tris)
            for (const auto& c : corners(n, tris[k].tri)) pts.push_back(c);
        auto h = hull(pts);
        const char* fill = "#dddddd";
        if (rp.kind == RecoveredPiece::Kind::polygon) {
            fill = "#f2d27a";
        } else if (rp.kind == RecoveredPiece::Kind::rhombus) {
            fill = rp.equivariant ? "#1f6b2a" : "#8fd18f";
        } else {
            const auto& v = rp.atom.v;
            if (v[0] == v[1] && v[1] == v[2] && v[0] == 0) fill = "#f08080";
            if (v[0] == v[1] && v[1] == v[2] && v[0] == 1) fill = "#7fa7f0";
        }
        polygon(h, fill);
        if (rp.kind == RecoveredPiece::Kind::rhombus && rp.equivariant && o.weights) {
            WeightFactor w = drag(*t.grid, tris[rp.tris[0]].tri);
            double cx = 0, cy = 0;
            for (const auto& p : h) {
                auto [x, y] = px(p);
                cx += x;
                cy += y;
            }
            cx /= h.size();
            cy /= h.size();
            text(cx, cy, s * 0.28, "(" + std::to_string(w.i) + "," + std::to_string(w.j) + ")", "white");
        }
    }

    if (o.labels) {
        std::map<int, std::pair<double, double>> mid;
        for (const auto& tp : tris) {
            auto seg = side_segments(n, tp.tri);
            for (int i = 0; i < 3; ++i) {
                auto [ax, ay] = px(seg[i].first);
                auto [bx, by] = px(seg[i].second);
                mid.emplace(tp.sides[i], std::make_pair((ax + bx) / 2, (ay + by) / 2));
            }
        }
        for (const auto& [iv, p] : mid) text(p.first, p.second, s * 0.3, std::to_string(int(t.values[iv - 1])), "black");
    }
    out << "</svg>\n";
    return out.str();
}

std::string render(const Tiling& t, RenderFormat f, const RenderOptions& o) {
    return f == RenderFormat::svg ? render_svg(t, o) : render_ascii(t, o);
}

}  // namespace puzzle
