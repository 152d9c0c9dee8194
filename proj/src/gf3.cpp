#include "puzzle/gf3.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace puzzle {

namespace {

int reduce_exp(int e) {
    if (e <= 0) return 0;
    return ((e - 1) % 2) + 1;
}

}  // namespace

Monomial Monomial::var(int v, int e) {
    return from_factors({{v, e}});
}

Monomial Monomial::from_factors(std::vector<Factor> f) {
    std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
    Monomial m;
    for (const auto& x : f) {
        if (x.var <= 0) throw std::invalid_argument("variable index must be positive");
        if (x.exp < 0) throw std::invalid_argument("negative exponent");
        if (!m.f_.empty() && m.f_.back().var == x.var) {
            m.f_.back().exp += x.exp;
        } else {
            m.f_.push_back(x);
        }
    }
    std::vector<Factor> out;
    out.reserve(m.f_.size());
    for (auto x : m.f_) {
        x.exp = reduce_exp(x.exp);
        if (x.exp) out.push_back(x);
    }
    m.f_ = std::move(out);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& x : f_) d += x.exp;
    return d;
}

int Monomial::exponent(int v) const {
    for (const auto& x : f_)
        if (x.var == v) return x.exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].var < o.f_[j].var)) {
            m.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].var < f_[i].var) {
            m.f_.push_back(o.f_[j++]);
        } else {
            m.f_.push_back({f_[i].var, reduce_exp(f_[i].exp + o.f_[j].exp)});
            ++i;
            ++j;
        }
    }
    return m;
}

Monomial Monomial::renamed(const std::vector<int>& map) const {
    std::vector<Factor> f;
    f.reserve(f_.size());
    for (const auto& x : f_) f.push_back({map.at(x.var), x.exp});
    return from_factors(std::move(f));
}

int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].var != fb[i].var) return fa[i].var < fb[i].var ? 1 : -1;
        if (fa[i].exp != fb[i].exp) return fa[i].exp > fb[i].exp ? 1 : -1;
    }
    if (fa.size() == fb.size()) return 0;
    return fa.size() > fb.size() ? 1 : -1;
}

PolyF3::PolyF3(F3 c) {
    if (!c.is_zero()) t_.push_back({Monomial{}, c});
}

PolyF3 PolyF3::variable(int v) {
    PolyF3 p;
    p.t_.push_back({Monomial::var(v), F3(1)});
    return p;
}

PolyF3 PolyF3::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
    PolyF3 p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().mono == t.mono) {
            p.t_.back().coeff += t.coeff;
        } else {
            if (!p.t_.empty() && p.t_.back().coeff.is_zero()) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().coeff.is_zero()) p.t_.pop_back();
    return p;
}

int PolyF3::degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.mono.degree());
    return d;
}

int PolyF3::max_var() const {
    int v = 0;
    for (const auto& t : t_) v = std::max(v, t.mono.max_var());
    return v;
}

std::vector<int> PolyF3::variables() const {
    std::vector<int> v;
    for (const auto& t : t_)
        for (const auto& f : t.mono.factors()) v.push_back(f.var);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

PolyF3 PolyF3::operator+(const PolyF3& o) const {
    PolyF3 r;
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        int c = (i == t_.size()) ? -1 : (j == o.t_.size()) ? 1 : lex_compare(t_[i].mono, o.t_[j].mono);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            F3 s = t_[i].coeff + o.t_[j].coeff;
            if (!s.is_zero()) r.t_.push_back({t_[i].mono, s});
            ++i;
            ++j;
        }
    }
    return r;
}

PolyF3 PolyF3::operator-() const {
    PolyF3 r = *this;
    for (auto& t : r.t_) t.coeff = -t.coeff;
    return r;
}

PolyF3 PolyF3::operator-(const PolyF3& o) const { return *this + (-o); }

PolyF3 PolyF3::operator*(F3 c) const {
    if (c.is_zero()) return {};
    PolyF3 r = *this;
    for (auto& t : r.t_) t.coeff *= c;
    return r;
}

PolyF3 PolyF3::operator*(const PolyF3& o) const {
    std::vector<Term> terms;
    terms.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) terms.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(std::move(terms));
}

PolyF3 PolyF3::renamed(const std::vector<int>& map) const {
    std::vector<Term> terms;
    terms.reserve(t_.size());
    for (const auto& t : t_) terms.push_back({t.mono.renamed(map), t.coeff});
    return from_terms(std::move(terms));
}

template <class V>
static F3 eval_impl(const PolyF3& p, const std::vector<V>& point) {
    int s = 0;
    for (const auto& t : p.terms()) {
        int prod = t.coeff.value();
        for (const auto& f : t.mono.factors()) {
            if (f.var > static_cast<int>(point.size())) throw MissingVariable(f.var);
            int v;
            if constexpr (std::is_same_v<V, F3>)
                v = point[f.var - 1].value();
            else
                v = point[f.var - 1] % 3;
            prod *= (f.exp == 1) ? v : v * v;
            prod %= 3;
            if (prod == 0) break;
        }
        s += prod;
    }
    return F3(s);
}

F3 poly_eval(const PolyF3& p, const std::vector<F3>& point) { return eval_impl(p, point); }
F3 poly_eval(const PolyF3& p, const std::vector<std::uint8_t>& point) { return eval_impl(p, point); }

PolyF3 poly_normalize(const std::vector<RawTerm>& raw) {
    std::vector<PolyF3::Term> terms;
    for (const auto& r : raw) {
        F3 c(static_cast<int>(r.coeff % 3));
        if (c.is_zero()) continue;
        std::vector<Monomial::Factor> f;
        for (auto [v, e] : r.factors) f.push_back({v, e});
        terms.push_back({Monomial::from_factors(std::move(f)), c});
    }
    return PolyF3::from_terms(std::move(terms));
}

PolyF3 poly_normalize(const PolyF3& p) { return PolyF3::from_terms(p.terms()); }

PolyF3 parse_poly(std::string_view text) {
    std::vector<RawTerm> raw;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> long {
        long v = 0;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        if (i == start) throw ParseError("expected number at position " + std::to_string(start));
        return v;
    };
    skip();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        RawTerm t{sign, {}};
        bool have_factor = false;
        while (true) {
            skip();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.coeff *= number();
            } else if (i < text.size() && text[i] == 'x') {
                ++i;
                int v = static_cast<int>(number());
                int e = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    e = static_cast<int>(number());
                }
                t.factors.emplace_back(v, e);
            } else {
                throw ParseError("unexpected character at position " + std::to_string(i));
            }
            have_factor = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!have_factor) throw ParseError("empty term");
        t.coeff = ((t.coeff % 3) + 3) % 3;
        raw.push_back(std::move(t));
    }
    return poly_normalize(raw);
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(f.var);
        if (f.exp == 2) s += "^2";
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const PolyF3& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        if (!s.empty()) s += " + ";
        if (t.mono.is_one()) {
            s += std::to_string(t.coeff.value());
        } else {
            if (t.coeff.value() == 2) s += "2*";
            s += to_string(t.mono);
        }
    }
    return s;
}

std::optional<std::vector<F3>> f3_linear_solve(std::vector<std::vector<F3>> A, std::vector<F3> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("f3_linear_solve: size mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        F3 inv = A[r][c].inverse();
        for (auto& x : A[r]) x *= inv;
        b[r] *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || A[q][c].is_zero()) continue;
            F3 f = A[q][c];
            for (std::size_t k = c; k < cols; ++k) A[q][k] -= f * A[r][k];
            b[q] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t q = r; q < rows; ++q)
        if (!b[q].is_zero()) return std::nullopt;
    std::vector<F3> x(cols);
    for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = b[q];
    return x;
}

MonomialOrder MonomialOrder::lex(int nvars) {
    MonomialOrder o;
    o.ranking.resize(nvars);
    std::iota(o.ranking.begin(), o.ranking.end(), 1);
    o.rank.assign(nvars + 1, -1);
    for (int i = 0; i < nvars; ++i) o.rank[o.ranking[i]] = i;
    return o;
}

MonomialOrder MonomialOrder::block_lex(const std::vector<int>& eliminate, const std::vector<int>& keep) {
    MonomialOrder o;
    o.kind = Kind::block_lex;
    o.ranking = eliminate;
    o.ranking.insert(o.ranking.end(), keep.begin(), keep.end());
    o.eliminated = static_cast<int>(eliminate.size());
    int mx = 0;
    for (int v : o.ranking) mx = std::max(mx, v);
    o.rank.assign(mx + 1, -1);
    for (int i = 0; i < static_cast<int>(o.ranking.size()); ++i) {
        int v = o.ranking[i];
        if (v <= 0 || o.rank[v] != -1) throw std::invalid_argument("block_lex: bad variable list");
        o.rank[v] = i;
    }
    return o;
}

std::vector<int> MonomialOrder::keep_block() const {
    if (kind != Kind::block_lex) return {};
    return {ranking.begin() + eliminated, ranking.end()};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    // Exponent vectors indexed by rank; only the factors present matter.
    std::vector<std::pair<int, int>> ea, eb;
    for (const auto& f : a.factors()) ea.emplace_back(rank.at(f.var), f.exp);
    for (const auto& f : b.factors()) eb.emplace_back(rank.at(f.var), f.exp);
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    std::size_t i = 0;
    for (; i < ea.size() && i < eb.size(); ++i) {
        if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first ? 1 : -1;
        if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second ? 1 : -1;
    }
    if (ea.size() == eb.size()) return 0;
    return ea.size() > eb.size() ? 1 : -1;
}

}  // namespace puzzle
