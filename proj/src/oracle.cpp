#include "puzzle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include <omp.h>

namespace puzzle {

namespace {

constexpr int kNever = std::numeric_limits<int>::max();

using StateMap = std::unordered_map<std::string, std::uint64_t>;

}  // namespace

OraclePlan::OraclePlan(const Boundary& b, std::shared_ptr<const PieceSet> pieces)
    : pieces_(std::move(pieces)), boundary_(b) {
    auto [n, k] = check_boundary(b);
    (void)k;
    if (!pieces_->separable) throw UnsupportedPieceSet("piece set '" + pieces_->name + "' is not separable");
    grid_ = std::make_shared<TriangleGrid>(n);
    const TriangleGrid& g = *grid_;
    const PieceSet& s = *pieces_;
    const int N = g.N();

    domain_.assign(N + 1, {0, 1, 2});
    const std::pair<Side, const std::optional<std::string>*> sides[] = {
        {Side::left, &b.lambda}, {Side::right, &b.mu}, {Side::bottom, &b.nu}};
    for (const auto& [side, word] : sides) {
        const auto& idx = g.boundary(side);
        for (int j = 0; j < n; ++j) {
            if (*word) {
                domain_[idx[j]] = {static_cast<Val>((**word)[j] - '0')};
            } else {
                domain_[idx[j]] = {0, 1};
            }
        }
        if (!*word) free_ivs_ = idx;
    }

    std::vector<TriRef> order;
    for (int r = 1; r <= n; ++r)
        for (int y = 1; y <= r; ++y) {
            order.push_back({true, r, y});
            if (y < r) order.push_back({false, r, y});
        }
    std::vector<int> assigned_at(N + 1, -1);
    steps_.resize(order.size());
    for (std::size_t e = 0; e < order.size(); ++e) {
        for (int iv : g.sides(order[e]))
            if (assigned_at[iv] < 0) {
                assigned_at[iv] = static_cast<int>(e);
                steps_[e].fresh.push_back(iv);
            }
    }

    std::vector<const PolygonPlacement*> placements;
    if (auto shape = s.polygon_shape())
        for (const auto& pl : g.polygons(*shape)) placements.push_back(&pl);
    std::set<std::pair<int, std::vector<int>>> uncovered;
    for (auto& site : uncovered_implicit_sites(g, s)) uncovered.insert({site.implicit, std::move(site.intervals)});
    auto uncovered_at = [&](const std::vector<int>& site) {
        std::vector<char> u(s.implicit.size(), 0);
        for (int p = 0; p < static_cast<int>(s.implicit.size()); ++p) u[p] = uncovered.count({p, site}) > 0;
        return u;
    };

    for (const auto& t : order) {
        Check c;
        c.kind = Check::Kind::triangle;
        c.up = t.up;
        auto sd = g.sides(t);
        c.ivs.assign(sd.begin(), sd.end());
        c.uncovered = uncovered_at(c.ivs);
        checks_.push_back(std::move(c));
    }
    for (int d = 0; d < 3; ++d)
        for (const auto& rp : g.rhombi(static_cast<RhombusDir>(d))) {
            Check c;
        c.kind = Check::Kind::rhombus;
            c.dir = rp.dir;
            c.ivs.assign(rp.outer.begin(), rp.outer.end());
            c.uncovered = uncovered_at(c.ivs);
            checks_.push_back(std::move(c));
        }
    for (const auto* pl : placements)
        for (int p = 0; p < static_cast<int>(s.implicit.size()); ++p) {
            Check c;
        c.kind = Check::Kind::polygon;
            c.ivs = pl->intervals;
            c.implicit = p;
            checks_.push_back(std::move(c));
        }

    std::vector<int> last_use(N + 1, -1);
    for (int ci = 0; ci < static_cast<int>(checks_.size()); ++ci) {
        int done = 0;
        for (int iv : checks_[ci].ivs) done = std::max(done, assigned_at[iv]);
        steps_[done].checks.push_back(ci);
        for (int iv : checks_[ci].ivs) last_use[iv] = std::max(last_use[iv], done);
    }
    for (int iv : free_ivs_) last_use[iv] = kNever;
    frontier_.resize(steps_.size());
    for (std::size_t e = 0; e < steps_.size(); ++e)
        for (int iv = 1; iv <= N; ++iv)
            if (assigned_at[iv] <= static_cast<int>(e) && last_use[iv] > static_cast<int>(e)) frontier_[e].push_back(iv);
}

bool OraclePlan::run_check(const Check& c, const std::vector<Val>& v) const {
    const PieceSet& s = *pieces_;
    switch (c.kind) {
        case Check::Kind::triangle: {
            Val a = v[c.ivs[0]], b = v[c.ivs[1]], d = v[c.ivs[2]];
            if (!s.in_refined(c.up, a, b, d)) return false;
            if (a == 2 && b == 2 && d == 2) {
                int p = s.implicit_all_twos(c.up);
                if (p >= 0 && c.uncovered[p]) return false;
            }
            return true;
        }
        case Check::Kind::rhombus: {
            std::array<Val, 4> o{v[c.ivs[0]], v[c.ivs[1]], v[c.ivs[2]], v[c.ivs[3]]};
            if (s.is_forbidden(c.dir, o)) return false;
            int p = s.implicit_rhombus(c.dir, o);
            return !(p >= 0 && c.uncovered[p]);
        }
        case Check::Kind::polygon: {
            const auto& ip = s.implicit[c.implicit];
            for (std::size_t q = 0; q < ip.positions.size(); ++q)
                if (v[c.ivs[ip.positions[q]]] != ip.values[q]) return true;
            const auto& ref = s.polygons[ip.polygon].refinement;
            std::vector<char> designated(c.ivs.size(), 0);
            for (int pos : ip.positions) designated[pos] = 1;
            for (std::size_t i = 0; i < c.ivs.size(); ++i)
                if (!designated[i] && v[c.ivs[i]] != ref[i]) return false;
            return true;
        }
    }
    return false;
}

std::string OraclePlan::free_word(const std::vector<Val>& v) const {
    std::string w;
    for (int iv : free_ivs_) w.push_back(static_cast<char>('0' + v[iv]));
    return w;
}

bool OraclePlan::accepts(const Assignment& a) const {
    const int N = grid_->N();
    if (static_cast<int>(a.size()) != N) return false;
    std::vector<Val> v(N + 1, 0);
    for (int i = 1; i <= N; ++i) {
        v[i] = a[i - 1];
        if (std::find(domain_[i].begin(), domain_[i].end(), v[i]) == domain_[i].end()) return false;
    }
    for (const auto& c : checks_)
        if (!run_check(c, v)) return false;
    return true;
}

std::vector<Assignment> OraclePlan::enumerate(std::size_t limit) const {
    std::vector<Assignment> out;
    const int N = grid_->N();
    std::vector<Val> v(N + 1, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t e, std::size_t f) {
        if (out.size() >= limit) return;
        if (e == steps_.size()) {
            out.emplace_back(v.begin() + 1, v.end());
            return;
        }
        const Step& st = steps_[e];
        if (f < st.fresh.size()) {
            int iv = st.fresh[f];
            for (Val x : domain_[iv]) {
                v[iv] = x;
                go(e, f + 1);
            }
            v[iv] = 0;
            return;
        }
        for (int ci : st.checks)
            if (!run_check(checks_[ci], v)) return;
        go(e + 1, 0);
    };
    go(0, 0);
    return out;
}

namespace {

// Expands one frontier state through step e into `next`.
template <class Step, class Domain, class Run>
void advance(const std::string& key, std::uint64_t count, const std::vector<int>& before, const std::vector<int>& after,
             const Step& st, const Domain& domain, std::vector<Val>& v, Run&& run, StateMap& next) {
    for (std::size_t i = 0; i < before.size(); ++i) v[before[i]] = static_cast<Val>(key[i]);
    std::function<void(std::size_t)> go = [&](std::size_t f) {
        if (f < st.fresh.size()) {
            int iv = st.fresh[f];
            for (Val x : domain[iv]) {
                v[iv] = x;
                go(f + 1);
            }
            return;
        }
        for (int ci : st.checks)
            if (!run(ci)) return;
        std::string k(after.size(), '\0');
        for (std::size_t i = 0; i < after.size(); ++i) k[i] = static_cast<char>(v[after[i]]);
        next[k] += count;
    };
    go(0);
}

}  // namespace

WordCounts OraclePlan::count_serial() const {
    const int N = grid_->N();
    std::vector<Val> v(N + 1, 0);
    StateMap cur{{std::string(), 1}};
    static const std::vector<int> none;
    for (std::size_t e = 0; e < steps_.size(); ++e) {
        StateMap next;
        const auto& before = e ? frontier_[e - 1] : none;
        for (const auto& [key, cnt] : cur)
            advance(key, cnt, before, frontier_[e], steps_[e], domain_, v,
                                [&](int ci) { return run_check(checks_[ci], v); }, next);
        cur = std::move(next);
    }
    WordCounts out;
    const auto& last = steps_.empty() ? none : frontier_.back();
    for (const auto& [key, cnt] : cur) {
        for (std::size_t i = 0; i < last.size(); ++i) v[last[i]] = static_cast<Val>(key[i]);
        out[free_word(v)] += cnt;
    }
    return out;
}

WordCounts OraclePlan::count_parallel() const {
    const int N = grid_->N();
    std::vector<std::pair<std::string, std::uint64_t>> cur{{std::string(), 1}};
    static const std::vector<int> none;
    for (std::size_t e = 0; e < steps_.size(); ++e) {
        const auto& before = e ? frontier_[e - 1] : none;
        StateMap merged;
        const long m = static_cast<long>(cur.size());
#pragma omp parallel
        {
            std::vector<Val> v(N + 1, 0);
            StateMap local;
#pragma omp for schedule(dynamic, 64) nowait
            for (long i = 0; i < m; ++i)
                advance(cur[i].first, cur[i].second, before, frontier_[e], steps_[e], domain_, v,
                                    [&](int ci) { return run_check(checks_[ci], v); }, local);
#pragma omp critical
            for (auto& [k, c] : local) merged[k] += c;
        }
        cur.assign(merged.begin(), merged.end());
    }
    WordCounts out;
    std::vector<Val> v(N + 1, 0);
    const auto& last = steps_.empty() ? none : frontier_.back();
    for (const auto& [key, cnt] : cur) {
        for (std::size_t i = 0; i < last.size(); ++i) v[last[i]] = static_cast<Val>(key[i]);
        out[free_word(v)] += cnt;
    }
    return out;
}

std::vector<Assignment> brute_force_tilings(const Boundary& b, const PieceSet& pieces, std::size_t limit) {
    return OraclePlan(b, std::make_shared<PieceSet>(pieces)).enumerate(limit);
}

WordCounts count_by_free_word(const Boundary& b, const PieceSet& pieces) {
    return OraclePlan(b, std::make_shared<PieceSet>(pieces)).count_parallel();
}

WordCounts count_by_free_word_serial(const Boundary& b, const PieceSet& pieces) {
    return OraclePlan(b, std::make_shared<PieceSet>(pieces)).count_serial();
}

std::uint64_t count_tilings(const Boundary& b, const PieceSet& pieces) {
    std::uint64_t total = 0;
    for (const auto& [w, c] : count_by_free_word(b, pieces)) total += c;
    return total;
}

std::uint64_t lr_coefficient_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (partition_size(nu) != partition_size(lambda) + partition_size(mu)) return 0;
    if (lambda.size() > nu.size()) return 0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > nu[i]) return 0;
    if (mu.empty()) return 1;
    const int rows = static_cast<int>(nu.size());
    auto lam = [&](int i) { return i < static_cast<int>(lambda.size()) ? lambda[i] : 0; };
    std::vector<std::vector<int>> T(rows);
    for (int i = 0; i < rows; ++i) T[i].assign(nu[i], 0);
    std::vector<int> used(mu.size() + 1, 0);
    std::uint64_t count = 0;
    // Rows top to bottom, each right to left: the reverse reading word must stay a lattice word.
    std::function<void(int, int)> go = [&](int i, int j) {
        if (i == rows) {
            ++count;
            return;
        }
        if (j < lam(i)) {
            go(i + 1, i + 1 < rows ? nu[i + 1] - 1 : 0);
            return;
        }
        int hi = static_cast<int>(mu.size());
        if (j + 1 < nu[i]) hi = std::min(hi, T[i][j + 1]);
        int lo = 1;
        if (i > 0 && j >= lam(i - 1) && j < nu[i - 1]) lo = T[i - 1][j] + 1;
        for (int x = lo; x <= hi; ++x) {
            if (used[x] >= mu[x - 1]) continue;
            if (x > 1 && used[x] + 1 > used[x - 1]) continue;
            ++used[x];
            T[i][j] = x;
            go(i, j - 1);
            --used[x];
        }
        T[i][j] = 0;
    };
    go(0, nu[0] - 1);
    return count;
}

IntPoly schur_polynomial(const Partition& lambda, int nvars) {
    IntPoly out;
    if (static_cast<int>(lambda.size()) > nvars) return out;
    const int rows = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> T(rows);
    for (int i = 0; i < rows; ++i) T[i].assign(lambda[i], 0);
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> go = [&](int i, int j) {
        if (i == rows) {
            out[e] += 1;
            return;
        }
        if (j == lambda[i]) {
            go(i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, T[i][j - 1]);
        if (i > 0) lo = std::max(lo, T[i - 1][j] + 1);
        for (int x = lo; x <= nvars; ++x) {
            T[i][j] = x;
            ++e[x - 1];
            go(i, j + 1);
            --e[x - 1];
        }
    };
    go(0, 0);
    if (rows == 0) out[e] = 1;
    return out;
}

std::map<Partition, long long> schur_multiply(const Partition& lambda, const Partition& mu, int nvars) {
    IntPoly a = schur_polynomial(lambda, nvars), b = schur_polynomial(mu, nvars), prod;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            prod[e] += ca * cb;
        }
    std::map<Partition, long long> out;
    while (true) {
        while (!prod.empty() && prod.rbegin()->second == 0) prod.erase(std::prev(prod.end()));
        if (prod.empty()) break;
        // The lex-largest monomial of a symmetric polynomial has a partition exponent.
        auto [e, c] = *prod.rbegin();
        Partition p;
        for (int x : e)
            if (x) p.push_back(x);
        out[p] += c;
        for (const auto& [es, cs] : schur_polynomial(p, nvars)) {
            prod[es] -= c * cs;
            if (prod[es] == 0) prod.erase(es);
        }
    }
    return out;
}

}  // namespace puzzle
