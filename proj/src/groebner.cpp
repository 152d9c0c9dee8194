#include "puzzle/groebner.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

namespace puzzle {

namespace {

constexpr std::uint64_t kLo = 0x5555555555555555ULL;
constexpr std::uint64_t kHi = 0xAAAAAAAAAAAAAAAAULL;

// Exponent of the variable of rank r sits in bits (62 - 2*(r%32)) of word r/32, so comparing the
// words as unsigned integers from the front is lex comparison by rank.
template <int W>
struct Mono {
    std::array<std::uint64_t, W> w{};
};

template <int W>
inline int cmp(const Mono<W>& a, const Mono<W>& b) {
    for (int i = 0; i < W; ++i)
        if (a.w[i] != b.w[i]) return a.w[i] > b.w[i] ? 1 : -1;
    return 0;
}

template <int W>
inline bool operator==(const Mono<W>& a, const Mono<W>& b) {
    return a.w == b.w;
}

template <int W>
inline Mono<W> mul(const Mono<W>& a, const Mono<W>& b) {
    Mono<W> r;
    for (int i = 0; i < W; ++i) {
        std::uint64_t aL = a.w[i] & kLo, aH = (a.w[i] & kHi) >> 1;
        std::uint64_t bL = b.w[i] & kLo, bH = (b.w[i] & kHi) >> 1;
        std::uint64_t a0 = ~(aL | aH) & kLo, b0 = ~(bL | bH) & kLo;
        std::uint64_t r1 = (aL & b0) | (a0 & bL) | (aL & bH) | (aH & bL);
        std::uint64_t r2 = (aH & b0) | (a0 & bH) | (aL & bL) | (aH & bH);
        r.w[i] = r1 | (r2 << 1);
    }
    return r;
}

template <int W>
inline bool divides(const Mono<W>& a, const Mono<W>& b) {
    for (int i = 0; i < W; ++i) {
        std::uint64_t aL = a.w[i] & kLo, aH = (a.w[i] & kHi) >> 1;
        std::uint64_t bL = b.w[i] & kLo, bH = (b.w[i] & kHi) >> 1;
        if ((aL & ~(bL | bH)) | (aH & ~bH)) return false;
    }
    return true;
}

template <int W>
inline Mono<W> lcm(const Mono<W>& a, const Mono<W>& b) {
    Mono<W> r;
    for (int i = 0; i < W; ++i) {
        std::uint64_t hi = ((a.w[i] | b.w[i]) & kHi) >> 1;
        std::uint64_t lo = (a.w[i] | b.w[i]) & kLo & ~hi;
        r.w[i] = lo | (hi << 1);
    }
    return r;
}

// b / a, assuming a | b.
template <int W>
inline Mono<W> quot(const Mono<W>& b, const Mono<W>& a) {
    Mono<W> r;
    for (int i = 0; i < W; ++i) r.w[i] = b.w[i] - a.w[i];
    return r;
}

template <int W>
inline bool coprime(const Mono<W>& a, const Mono<W>& b) {
    for (int i = 0; i < W; ++i) {
        std::uint64_t sa = (a.w[i] | (a.w[i] >> 1)) & kLo;
        std::uint64_t sb = (b.w[i] | (b.w[i] >> 1)) & kLo;
        if (sa & sb) return false;
    }
    return true;
}

template <int W>
inline int degree(const Mono<W>& a) {
    int d = 0;
    for (int i = 0; i < W; ++i) d += std::popcount(a.w[i] & kLo) + 2 * std::popcount(a.w[i] & kHi);
    return d;
}

template <int W>
inline int exponent_at(const Mono<W>& a, int r) {
    return static_cast<int>((a.w[r / 32] >> (62 - 2 * (r % 32))) & 3);
}

template <int W>
inline Mono<W> single(int r, int e) {
    Mono<W> m;
    m.w[r / 32] = static_cast<std::uint64_t>(e) << (62 - 2 * (r % 32));
    return m;
}

template <int W>
struct Term {
    Mono<W> m;
    std::uint8_t c;
};

template <int W>
using KPoly = std::vector<Term<W>>;

inline std::uint8_t fmul(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a * b) % 3); }
inline std::uint8_t fneg(std::uint8_t a) { return static_cast<std::uint8_t>((3 - a) % 3); }

template <int W>
void sort_combine(KPoly<W>& p) {
    std::sort(p.begin(), p.end(), [](const Term<W>& a, const Term<W>& b) { return cmp(a.m, b.m) > 0; });
    std::size_t o = 0;
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        int c = 0;
        while (j < p.size() && p[j].m == p[i].m) c += p[j++].c;
        if (c % 3) p[o++] = {p[i].m, static_cast<std::uint8_t>(c % 3)};
        i = j;
    }
    p.resize(o);
}

// c * t * g[skip..]
template <int W>
KPoly<W> mul_term(const KPoly<W>& g, const Mono<W>& t, std::uint8_t c, std::size_t skip = 0) {
    KPoly<W> r;
    r.reserve(g.size() - skip);
    bool sorted = true;
    for (std::size_t i = skip; i < g.size(); ++i) {
        Mono<W> m = mul(g[i].m, t);
        if (!r.empty() && cmp(r.back().m, m) <= 0) sorted = false;
        r.push_back({m, fmul(g[i].c, c)});
    }
    if (!sorted) sort_combine(r);
    return r;
}

// f[fs..] - p
template <int W>
KPoly<W> sub(const KPoly<W>& f, std::size_t fs, const KPoly<W>& p) {
    KPoly<W> r;
    r.reserve(f.size() - fs + p.size());
    std::size_t i = fs, j = 0;
    while (i < f.size() && j < p.size()) {
        int c = cmp(f[i].m, p[j].m);
        if (c > 0) {
            r.push_back(f[i++]);
        } else if (c < 0) {
            r.push_back({p[j].m, fneg(p[j].c)});
            ++j;
        } else {
            std::uint8_t v = static_cast<std::uint8_t>((f[i].c + 3 - p[j].c) % 3);
            if (v) r.push_back({f[i].m, v});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) r.push_back(f[i]);
    for (; j < p.size(); ++j) r.push_back({p[j].m, fneg(p[j].c)});
    return r;
}

template <int W>
void make_monic(KPoly<W>& p) {
    if (p.empty() || p[0].c == 1) return;
    for (auto& t : p) t.c = fmul(t.c, 2);
}

template <int W>
struct Reducers {
    std::vector<const KPoly<W>*> polys;

    const KPoly<W>* find(const Mono<W>& m) const {
        for (const auto* g : polys)
            if (divides((*g)[0].m, m)) return g;
        return nullptr;
    }
};

template <int W>
KPoly<W> nf(KPoly<W> f, const Reducers<W>& R) {
    KPoly<W> out;
    std::size_t i = 0;
    while (i < f.size()) {
        const KPoly<W>* g = R.find(f[i].m);
        if (!g) {
            out.push_back(f[i++]);
            continue;
        }
        Mono<W> t = quot(f[i].m, (*g)[0].m);
        std::uint8_t c = fmul(f[i].c, (*g)[0].c);  // lc(g) is its own inverse
        KPoly<W> p = mul_term(*g, t, c, 1);
        f = sub(f, i + 1, p);
        i = 0;
    }
    return out;
}

template <int W>
struct Ctx {
    const MonomialOrder& order;

    Mono<W> to_mono(const Monomial& m) const {
        Mono<W> r;
        for (const auto& f : m.factors()) {
            int rk = f.var < static_cast<int>(order.rank.size()) ? order.rank[f.var] : -1;
            if (rk < 0) throw std::invalid_argument("variable x" + std::to_string(f.var) + " is not ranked by the order");
            r.w[rk / 32] |= static_cast<std::uint64_t>(f.exp) << (62 - 2 * (rk % 32));
        }
        return r;
    }

    KPoly<W> to_k(const PolyF3& p) const {
        KPoly<W> r;
        r.reserve(p.size());
        for (const auto& t : p.terms()) r.push_back({to_mono(t.mono), t.coeff.value()});
        std::sort(r.begin(), r.end(), [](const Term<W>& a, const Term<W>& b) { return cmp(a.m, b.m) > 0; });
        return r;
    }

    Monomial from_mono(const Mono<W>& m) const {
        std::vector<Monomial::Factor> f;
        for (int r = 0; r < order.nvars(); ++r) {
            int e = exponent_at(m, r);
            if (e) f.push_back({order.ranking[r], e});
        }
        return Monomial::from_factors(std::move(f));
    }

    PolyF3 from_k(const KPoly<W>& p) const {
        std::vector<PolyF3::Term> t;
        t.reserve(p.size());
        for (const auto& x : p) t.push_back({from_mono(x.m), F3(x.c)});
        return PolyF3::from_terms(std::move(t));
    }
};

template <int W>
KPoly<W> spoly(const KPoly<W>& a, const KPoly<W>& b) {
    Mono<W> L = lcm(a[0].m, b[0].m);
    KPoly<W> pa = mul_term(a, quot(L, a[0].m), 1, 1);
    KPoly<W> pb = mul_term(b, quot(L, b[0].m), 1, 1);
    return sub(pa, 0, pb);
}

// x_r^(3-e) * g, normalized; this is the S-polynomial of g against x_r^3 - x_r reduced by it.
template <int W>
KPoly<W> field_spoly(const KPoly<W>& g, int r) {
    int e = exponent_at(g[0].m, r);
    KPoly<W> p = mul_term(g, single<W>(r, 3 - e), 1);
    return p;
}

template <int W>
struct Engine {
    struct Pair {
        int i, j;  // j < 0: field pair with rank -j-1
        Mono<W> lcm;
        int deg;
    };

    Ctx<W> ctx;
    BuchbergerStats* stats;
    std::vector<KPoly<W>> polys;
    std::vector<int> active;
    std::vector<Pair> pairs;
    bool unit = false;

    Reducers<W> reducers() const {
        Reducers<W> R;
        for (int a : active) R.polys.push_back(&polys[a]);
        return R;
    }

    void update(KPoly<W> h) {
        make_monic(h);
        if (degree(h[0].m) == 0) {
            unit = true;
            polys.push_back(std::move(h));
            active = {static_cast<int>(polys.size()) - 1};
            pairs.clear();
            return;
        }
        int hi = static_cast<int>(polys.size());
        polys.push_back(std::move(h));
        const Mono<W>& lh = polys[hi][0].m;

        std::vector<Pair> C, D;
        for (int g : active) {
            const Mono<W>& lg = polys[g][0].m;
            Mono<W> l = lcm(lh, lg);
            C.push_back({hi, g, l, degree(l)});
        }
        for (std::size_t a = 0; a < C.size(); ++a) {
            const Pair& p = C[a];
            bool keep = coprime(lh, polys[p.j][0].m);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (divides(C[b].lcm, p.lcm)) keep = false;
                for (std::size_t b = 0; b < D.size() && keep; ++b)
                    if (divides(D[b].lcm, p.lcm)) keep = false;
            }
            if (keep) {
                D.push_back(p);
            } else if (stats) {
                ++stats->criterion2;
            }
        }
        std::vector<Pair> next;
        for (const Pair& p : pairs) {
            if (p.j >= 0 && divides(lh, p.lcm)) {
                Mono<W> l1 = lcm(polys[p.i][0].m, lh), l2 = lcm(polys[p.j][0].m, lh);
                if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
                    if (stats) ++stats->criterion2;
                    continue;
                }
            }
            next.push_back(p);
        }
        for (const Pair& p : D) {
            if (coprime(lh, polys[p.j][0].m)) {
                if (stats) ++stats->criterion1;
                continue;
            }
            next.push_back(p);
        }
        for (int r = 0; r < ctx.order.nvars(); ++r) {
            int e = exponent_at(lh, r);
            if (e) next.push_back({hi, -r - 1, lh, degree(lh) + 3 - e});
        }
        pairs = std::move(next);

        std::vector<int> act;
        for (int g : active)
            if (!divides(lh, polys[g][0].m)) act.push_back(g);
        act.push_back(hi);
        active = std::move(act);
        if (stats) stats->max_basis = std::max(stats->max_basis, active.size());
    }

    void add(const KPoly<W>& f) {
        if (unit || f.empty()) return;
        KPoly<W> h = nf(f, reducers());
        if (h.empty()) {
            if (stats) ++stats->zero_reductions;
            return;
        }
        update(std::move(h));
    }

    void run() {
        while (!pairs.empty() && !unit) {
            std::size_t best = 0;
            for (std::size_t a = 1; a < pairs.size(); ++a) {
                const Pair& p = pairs[a];
                const Pair& q = pairs[best];
                if (p.deg < q.deg || (p.deg == q.deg && cmp(p.lcm, q.lcm) < 0)) best = a;
            }
            Pair p = pairs[best];
            pairs[best] = pairs.back();
            pairs.pop_back();
            KPoly<W> s;
            if (p.j < 0) {
                s = field_spoly(polys[p.i], -p.j - 1);
                if (stats) ++stats->field_pairs;
            } else {
                s = spoly(polys[p.i], polys[p.j]);
            }
            if (stats) ++stats->pairs_reduced;
            add(s);
        }
    }

    std::vector<KPoly<W>> reduced_basis() const {
        std::vector<int> idx = active;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return cmp(polys[a][0].m, polys[b][0].m) < 0; });
        std::vector<KPoly<W>> out;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            Reducers<W> R;
            for (std::size_t b = 0; b < idx.size(); ++b)
                if (b != a) R.polys.push_back(&polys[idx[b]]);
            const KPoly<W>& g = polys[idx[a]];
            KPoly<W> tail(g.begin() + 1, g.end());
            KPoly<W> r = nf(tail, R);
            r.insert(r.begin(), g[0]);
            out.push_back(std::move(r));
        }
        return out;
    }
};

template <int W>
GroebnerBasis run_buchberger(const std::vector<PolyF3>& gens, const MonomialOrder& order, BuchbergerStats* stats) {
    Engine<W> E{Ctx<W>{order}, stats, {}, {}, {}, false};
    std::vector<KPoly<W>> in;
    for (const auto& g : gens)
        if (!g.is_zero()) in.push_back(E.ctx.to_k(g));
    std::stable_sort(in.begin(), in.end(), [](const KPoly<W>& a, const KPoly<W>& b) {
        int da = degree(a[0].m), db = degree(b[0].m);
        if (da != db) return da < db;
        return a.size() < b.size();
    });
    for (const auto& f : in) E.add(f);
    E.run();
    GroebnerBasis gb;
    gb.order = order;
    if (E.unit) {
        gb.elements.push_back(PolyF3(F3(1)));
        return gb;
    }
    for (const auto& g : E.reduced_basis()) gb.elements.push_back(E.ctx.from_k(g));
    return gb;
}

template <int W>
std::vector<KPoly<W>> basis_k(const Ctx<W>& ctx, const GroebnerBasis& gb) {
    std::vector<KPoly<W>> b;
    for (const auto& g : gb.elements) b.push_back(ctx.to_k(g));
    return b;
}

template <int W>
std::vector<PolyF3> run_nf(const std::vector<PolyF3>& ps, const GroebnerBasis& gb) {
    Ctx<W> ctx{gb.order};
    auto B = basis_k(ctx, gb);
    Reducers<W> R;
    for (const auto& g : B) R.polys.push_back(&g);
    std::vector<PolyF3> out;
    for (const auto& p : ps) out.push_back(ctx.from_k(nf(ctx.to_k(p), R)));
    return out;
}

template <int W>
Certificate run_certify(const GroebnerBasis& gb, const std::vector<PolyF3>& inputs) {
    Certificate cert;
    Ctx<W> ctx{gb.order};
    auto B = basis_k(ctx, gb);
    Reducers<W> R;
    for (const auto& g : B) R.polys.push_back(&g);
    std::ostringstream why;
    auto fail = [&](const std::string& s) {
        cert.ok = false;
        if (cert.failures++ < 5) why << s << "\n";
    };
    for (std::size_t a = 0; a < B.size(); ++a) {
        if (B[a].empty() || B[a][0].c != 1) fail("element " + std::to_string(a) + " is not monic");
        for (std::size_t b = 0; b < B.size(); ++b) {
            if (a == b) continue;
            for (const auto& t : B[b])
                if (divides(B[a][0].m, t.m)) {
                    fail("element " + std::to_string(b) + " is not reduced by element " + std::to_string(a));
                    break;
                }
        }
    }
    for (std::size_t a = 0; a < B.size(); ++a) {
        for (std::size_t b = a + 1; b < B.size(); ++b) {
            ++cert.pairs;
            if (!nf(spoly(B[a], B[b]), R).empty())
                fail("S(" + std::to_string(a) + "," + std::to_string(b) + ") does not reduce to 0");
        }
        for (int r = 0; r < gb.order.nvars(); ++r) {
            if (!exponent_at(B[a][0].m, r)) continue;
            ++cert.field_pairs;
            if (!nf(field_spoly(B[a], r), R).empty())
                fail("field pair of element " + std::to_string(a) + " does not reduce to 0");
        }
    }
    for (const auto& p : inputs) {
        ++cert.inputs;
        if (!nf(ctx.to_k(p), R).empty()) fail("input " + to_string(p) + " is not in the ideal");
    }
    cert.detail = why.str();
    return cert;
}

template <class F>
auto dispatch(int nranked, F&& f) {
    if (nranked <= 32) return f(std::integral_constant<int, 1>{});
    if (nranked <= 64) return f(std::integral_constant<int, 2>{});
    if (nranked <= 128) return f(std::integral_constant<int, 4>{});
    if (nranked <= 256) return f(std::integral_constant<int, 8>{});
    if (nranked <= 512) return f(std::integral_constant<int, 16>{});
    throw std::invalid_argument("too many variables for the Groebner kernel");
}

}  // namespace

bool GroebnerBasis::is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
}

GroebnerBasis buchberger(const std::vector<PolyF3>& generators, const MonomialOrder& order, BuchbergerStats* stats) {
    return dispatch(order.nvars(), [&](auto w) { return run_buchberger<decltype(w)::value>(generators, order, stats); });
}

GroebnerBasis buchberger(const PuzzleIdeal& I, const MonomialOrder& order, BuchbergerStats* stats) {
    return buchberger(I.generators(), order, stats);
}

PolyF3 normal_form(const PolyF3& p, const GroebnerBasis& gb) {
    return dispatch(gb.order.nvars(), [&](auto w) { return run_nf<decltype(w)::value>({p}, gb); }).front();
}

bool all_reduce_to_zero(const std::vector<PolyF3>& polys, const GroebnerBasis& gb) {
    auto r = dispatch(gb.order.nvars(), [&](auto w) { return run_nf<decltype(w)::value>(polys, gb); });
    return std::all_of(r.begin(), r.end(), [](const PolyF3& p) { return p.is_zero(); });
}

PolyF3 leading_term(const PolyF3& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    const PolyF3::Term* best = &p.terms()[0];
    for (const auto& t : p.terms())
        if (order.compare(t.mono, best->mono) > 0) best = &t;
    return PolyF3::from_terms({*best});
}

Certificate certify(const GroebnerBasis& gb, const std::vector<PolyF3>& inputs) {
    return dispatch(gb.order.nvars(), [&](auto w) { return run_certify<decltype(w)::value>(gb, inputs); });
}

GroebnerBasis eliminate(const GroebnerBasis& gb, const std::vector<int>& keep) {
    if (gb.order.kind != MonomialOrder::Kind::block_lex) throw WrongOrder("elimination needs a block order");
    auto kb = gb.order.keep_block();
    std::set<int> want(keep.begin(), keep.end()), have(kb.begin(), kb.end());
    if (want != have) throw WrongOrder("the order's retained block differs from the requested variables");
    GroebnerBasis out;
    out.order = MonomialOrder::block_lex({}, kb);
    for (const auto& g : gb.elements) {
        auto vs = g.variables();
        if (std::all_of(vs.begin(), vs.end(), [&](int v) { return want.count(v) > 0; })) out.elements.push_back(g);
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> enumerate_variety(const GroebnerBasis& gb, std::vector<int> vars) {
    if (vars.empty()) {
        vars = gb.order.ranking;
        std::sort(vars.begin(), vars.end());
    }
    // Assign the least significant variable first: in a lex basis the elements with the smallest
    // leading monomials only involve the trailing variables.
    std::vector<int> seq = vars;
    auto rank_of = [&](int v) { return v < static_cast<int>(gb.order.rank.size()) ? gb.order.rank[v] : -1; };
    std::sort(seq.begin(), seq.end(), [&](int a, int b) { return rank_of(a) > rank_of(b); });
    int maxv = 0;
    for (int v : vars) maxv = std::max(maxv, v);
    std::vector<int> slot(maxv + 1, -1);
    for (std::size_t i = 0; i < seq.size(); ++i) slot[seq[i]] = static_cast<int>(i);

    struct CTerm {
        std::uint8_t c;
        std::vector<std::pair<int, int>> f;  // (slot, exp)
    };
    std::vector<std::vector<std::vector<CTerm>>> at(seq.size());
    for (const auto& g : gb.elements) {
        if (g.is_zero()) continue;
        int trig = -1;
        std::vector<CTerm> ct;
        for (const auto& t : g.terms()) {
            CTerm c{t.coeff.value(), {}};
            for (const auto& f : t.mono.factors()) {
                if (f.var > maxv || slot[f.var] < 0)
                    throw std::invalid_argument("basis element involves x" + std::to_string(f.var) +
                                                " outside the enumerated variables");
                c.f.emplace_back(slot[f.var], f.exp);
                trig = std::max(trig, slot[f.var]);
            }
            ct.push_back(std::move(c));
        }
        if (trig < 0) return {};  // nonzero constant
        at[trig].push_back(std::move(ct));
    }

    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> val(seq.size(), 0);
    auto eval = [&](const std::vector<CTerm>& p) {
        int s = 0;
        for (const auto& t : p) {
            int x = t.c;
            for (const auto& [sl, e] : t.f) {
                int v = val[sl];
                x *= e == 1 ? v : v * v;
            }
            s += x;
        }
        return s % 3;
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
        if (i == seq.size()) {
            std::vector<std::uint8_t> pt(vars.size());
            for (std::size_t k = 0; k < vars.size(); ++k) pt[k] = val[slot[vars[k]]];
            out.push_back(std::move(pt));
            return;
        }
        for (std::uint8_t v = 0; v < 3; ++v) {
            val[i] = v;
            bool ok = true;
            for (const auto& p : at[i])
                if (eval(p)) {
                    ok = false;
                    break;
                }
            if (ok) dfs(i + 1);
        }
        val[i] = 0;
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PrimePoint> point_decomposition(const GroebnerBasis& elim) {
    std::vector<int> vars = elim.order.kind == MonomialOrder::Kind::block_lex ? elim.order.keep_block()
                                                                              : elim.order.ranking;
    std::vector<PolyF3> sq;
    for (int v : vars) sq.push_back(PolyF3::variable(v) * PolyF3::variable(v) - PolyF3::variable(v));
    if (!elim.is_unit() && !all_reduce_to_zero(sq, elim))
        throw std::invalid_argument("point_decomposition: some retained variable lacks x^2 - x");
    std::vector<PrimePoint> out;
    for (auto& pt : enumerate_variety(elim, vars)) {
        PrimePoint p;
        p.vars = vars;
        p.point = pt;
        for (std::size_t i = 0; i < vars.size(); ++i) p.prime.push_back(PolyF3::variable(vars[i]) - PolyF3(F3(pt[i])));
        out.push_back(std::move(p));
    }
    return out;
}

GroebnerBasis intersect(const std::vector<PolyF3>& a, const std::vector<PolyF3>& b, const MonomialOrder& order) {
    int t = 0;
    for (int v : order.ranking) t = std::max(t, v);
    ++t;
    PolyF3 T = PolyF3::variable(t);
    PolyF3 U = PolyF3(F3(1)) - T;
    std::vector<PolyF3> gens;
    for (const auto& p : a) gens.push_back(T * p);
    for (const auto& p : b) gens.push_back(U * p);
    GroebnerBasis full = buchberger(gens, MonomialOrder::block_lex({t}, order.ranking));
    GroebnerBasis out = eliminate(full, order.ranking);
    out.order = order;
    return out;
}

}  // namespace puzzle
