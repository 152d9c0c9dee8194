#include "puzzle/grid.hpp"

#include <algorithm>
#include <map>

namespace puzzle {

const char* name(Side s) {
    switch (s) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::bottom: return "bottom";
    }
    return "?";
}

const char* name(RhombusDir d) {
    switch (d) {
        case RhombusDir::left: return "left";
        case RhombusDir::right: return "right";
        case RhombusDir::bottom: return "bottom";
    }
    return "?";
}

const char* name(PolygonShape s) {
    switch (s) {
        case PolygonShape::up2: return "up2";
        case PolygonShape::down2: return "down2";
        case PolygonShape::hexagon: return "hexagon";
    }
    return "?";
}

std::array<int, 3> TriangleGrid::up(int r, int y) const {
    int base = 3 * r * (r - 1) / 2;
    return {base - 1 + 2 * y, base + 2 * y, 3 * r * (r + 1) / 2 - r + y};
}

std::array<int, 3> TriangleGrid::down(int r, int y) const {
    int base = 3 * r * (r - 1) / 2;
    return {base + 2 * y, 3 * (r - 1) * r / 2 - (r - 1) + y, base + 2 * y + 1};
}

std::pair<int, int> rhombus_shared(RhombusDir d) {
    switch (d) {
        case RhombusDir::left: return {0, 2};    // up.left == down.right
        case RhombusDir::right: return {1, 0};   // up.right == down.left
        case RhombusDir::bottom: return {2, 1};  // up.bottom == down.top
    }
    return {0, 0};
}

std::array<int, 4> rhombus_outer(RhombusDir d, const std::array<int, 3>& u, const std::array<int, 3>& w) {
    switch (d) {
        case RhombusDir::left: return {w[1], u[1], u[2], w[0]};
        case RhombusDir::right: return {w[1], w[2], u[2], u[0]};
        case RhombusDir::bottom: return {u[0], u[1], w[2], w[0]};
    }
    return {};
}

int rhombus_middle(RhombusDir d, const std::array<int, 3>& u, const std::array<int, 3>&) {
    return u[rhombus_shared(d).first];
}

namespace {

struct LocalLayout {
    std::vector<TriRef> tris;  // relative rows/positions
    std::vector<std::pair<int, int>> boundary;  // (triangle, side)
    std::vector<std::pair<int, int>> internal;
};

// Offsets relative to the anchor (r, y).
LocalLayout layout(PolygonShape s) {
    LocalLayout L;
    switch (s) {
        case PolygonShape::up2:
            // up(r,y), up(r+1,y), down(r+1,y), up(r+1,y+1)
            L.tris = {{true, 0, 0}, {true, 1, 0}, {false, 1, 0}, {true, 1, 1}};
            L.boundary = {{1, 0}, {0, 0}, {0, 1}, {3, 1}, {3, 2}, {1, 2}};
            L.internal = {{0, 2}, {2, 0}, {2, 2}};
            break;
        case PolygonShape::down2:
            // down(r,y), up(r,y+1), down(r,y+1), down(r+1,y+1)
            L.tris = {{false, 0, 0}, {true, 0, 1}, {false, 0, 1}, {false, 1, 1}};
            L.boundary = {{0, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 0}, {0, 0}};
            L.internal = {{1, 0}, {1, 1}, {1, 2}};
            break;
        case PolygonShape::hexagon:
            // up(r,c), down(r,c), up(r,c+1), down(r+1,c), up(r+1,c+1), down(r+1,c+1)
            L.tris = {{true, 0, 0}, {false, 0, 0}, {true, 0, 1}, {false, 1, 0}, {true, 1, 1}, {false, 1, 1}};
            L.boundary = {{0, 0}, {1, 1}, {2, 1}, {5, 2}, {4, 2}, {3, 0}};
            L.internal = {{0, 1}, {1, 2}, {0, 2}, {2, 2}, {3, 2}, {4, 1}};
            break;
    }
    return L;
}

}  // namespace

TriangleGrid::TriangleGrid(int n) : n_(n), N_(3 * n * (n + 1) / 2) {
    if (n < 1) throw std::invalid_argument("grid size must be positive");
    for (int r = 1; r <= n; ++r) {
        for (int y = 1; y <= r; ++y) {
            triangles_.push_back({{true, r, y}, up(r, y)});
            if (y < r) triangles_.push_back({{false, r, y}, down(r, y)});
        }
    }
    for (int r = 1; r <= n; ++r) {
        for (int y = 1; y < r; ++y) {
            TriRef d{false, r, y};
            TriRef u{true, r, y + 1};
            rhombi_[0].push_back({RhombusDir::left, u, d, rhombus_outer(RhombusDir::left, up(r, y + 1), down(r, y)),
                                  down(r, y)[2]});
        }
    }
    for (int r = 1; r <= n; ++r) {
        for (int y = 1; y < r; ++y) {
            TriRef u{true, r, y};
            TriRef d{false, r, y};
            rhombi_[1].push_back({RhombusDir::right, u, d, rhombus_outer(RhombusDir::right, up(r, y), down(r, y)),
                                  up(r, y)[1]});
        }
    }
    for (int r = 1; r < n; ++r) {
        for (int y = 1; y <= r; ++y) {
            TriRef u{true, r, y};
            TriRef d{false, r + 1, y};
            rhombi_[2].push_back({RhombusDir::bottom, u, d,
                                  rhombus_outer(RhombusDir::bottom, up(r, y), down(r + 1, y)), up(r, y)[2]});
        }
    }

    for (PolygonShape s : {PolygonShape::up2, PolygonShape::down2, PolygonShape::hexagon}) {
        LocalLayout L = layout(s);
        for (int r = 1; r <= n; ++r) {
            for (int y = 1; y <= r; ++y) {
                PolygonPlacement p{s, r, y, {}, static_cast<int>(L.boundary.size()), {}, {}, {}};
                bool fits = true;
                for (const auto& t : L.tris) {
                    TriRef g{t.up, r + t.r, y + t.y};
                    bool ok = g.r >= 1 && g.r <= n && g.y >= 1 && (g.up ? g.y <= g.r : g.y < g.r);
                    if (!ok) {
                        fits = false;
                        break;
                    }
                    p.triangles.push_back(g);
                }
                if (!fits) continue;
                std::map<int, int> local;
                auto add = [&](std::pair<int, int> ts) {
                    int idx = sides(p.triangles[ts.first])[ts.second];
                    local[idx] = static_cast<int>(p.intervals.size());
                    p.intervals.push_back(idx);
                };
                for (auto b : L.boundary) add(b);
                for (auto b : L.internal) add(b);
                for (const auto& t : p.triangles) {
                    auto sd = sides(t);
                    p.triangle_sides.push_back({local.at(sd[0]), local.at(sd[1]), local.at(sd[2])});
                }
                for (int d = 0; d < 3; ++d) {
                    auto dir = static_cast<RhombusDir>(d);
                    for (int a = 0; a < static_cast<int>(p.triangles.size()); ++a) {
                        for (int b = 0; b < static_cast<int>(p.triangles.size()); ++b) {
                            if (!p.triangles[a].up || p.triangles[b].up) continue;
                            auto su = sides(p.triangles[a]);
                            auto sw = sides(p.triangles[b]);
                            auto [iu, iw] = rhombus_shared(dir);
                            if (su[iu] != sw[iw]) continue;
                            auto outer = rhombus_outer(dir, su, sw);
                            LocalRhombus lr{dir, a, b, {}, local.at(su[iu])};
                            for (int k = 0; k < 4; ++k) lr.outer[k] = local.at(outer[k]);
                            p.rhombi.push_back(lr);
                        }
                    }
                }
                polygons_[static_cast<int>(s)].push_back(std::move(p));
            }
        }
    }

    for (int r = n; r >= 1; --r) boundary_[0].push_back(up(r, 1)[0]);
    for (int r = 1; r <= n; ++r) boundary_[1].push_back(up(r, r)[1]);
    for (int y = 1; y <= n; ++y) boundary_[2].push_back(up(n, y)[2]);
}

const RhombusPlacement* TriangleGrid::find_rhombus(RhombusDir d, const TriRef& u, const TriRef& w) const {
    for (const auto& p : rhombi(d))
        if (p.up == u && p.down == w) return &p;
    return nullptr;
}

TriangleGrid build_grid(int n) { return TriangleGrid(n); }

const std::vector<int>& boundary_intervals(const TriangleGrid& g, Side s) { return g.boundary(s); }

const std::vector<PolygonPlacement>& polygon_placements(const TriangleGrid& g, PolygonShape s) {
    return g.polygons(s);
}

bool is_binary_word(const std::string& w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

std::string partition_to_binary(const Partition& p, int n, int k) {
    if (k < 0 || k > n) throw DoesNotFit("k out of range");
    if (static_cast<int>(p.size()) > k) throw DoesNotFit("partition has more than k parts");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] > n - k) throw DoesNotFit("part exceeds box width");
        if (i && p[i] > p[i - 1]) throw DoesNotFit("partition not weakly decreasing");
    }
    std::string w;
    int prev = n - k;
    for (int i = 0; i < k; ++i) {
        int part = i < static_cast<int>(p.size()) ? p[i] : 0;
        w.append(prev - part, '0');
        w.push_back('1');
        prev = part;
    }
    w.append(prev, '0');
    return w;
}

Partition binary_to_partition(const std::string& word) {
    if (!is_binary_word(word) && !word.empty()) throw std::invalid_argument("not a binary word: " + word);
    int zeros_left = static_cast<int>(std::count(word.begin(), word.end(), '0'));
    Partition p;
    for (char c : word) {
        if (c == '0')
            --zeros_left;
        else
            p.push_back(zeros_left);
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

int word_weight(const std::string& word) { return partition_size(binary_to_partition(word)); }

}  // namespace puzzle
