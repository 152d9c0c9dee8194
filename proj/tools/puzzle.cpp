#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "puzzle/acceptance.hpp"
#include "puzzle/groebner.hpp"
#include "puzzle/render.hpp"
#include "puzzle/structure.hpp"

using namespace puzzle;

namespace {

constexpr int kUsage = 2, kInfeasible = 3, kInternal = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundaryArgs {
    std::string lambda, mu, nu;
    int n = 0, k = -1;
    std::string pieces = "0";
    std::string backend = "oracle";

    void add(CLI::App* app, bool with_backend = true) {
        app->add_option("--lambda", lambda, "left word, or comma-separated partition with --n/--k");
        app->add_option("--mu", mu, "right word or partition");
        app->add_option("--nu", nu, "bottom word or partition");
        app->add_option("--n", n, "word length for partition input");
        app->add_option("--k", k, "number of ones for partition input");
        app->add_option("--pieces", pieces, "Omega0|OmegaT|OmegaA..OmegaD, or @file with a piece-set description");
        if (with_backend)
            app->add_option("--backend", backend, "groebner|oracle")->check(CLI::IsMember({"groebner", "oracle"}));
    }

    // Empty input: free side.
    std::optional<std::string> word(const std::string& s, const char* what) const {
        if (s.empty() || s == "-") return std::nullopt;
        if (is_binary_word(s) && (n == 0 || static_cast<int>(s.size()) == n)) return s;
        if (n <= 0 || k < 0) throw UsageError(std::string("--") + what + " is not a binary word; partitions need --n and --k");
        Partition p;
        if (s != "()" && s != "empty") {
            std::stringstream ss(s);
            std::string part;
            while (std::getline(ss, part, ',')) {
                try {
                    std::size_t used = 0;
                    int v = std::stoi(part, &used);
                    if (used != part.size() || v < 0) throw std::invalid_argument(part);
                    if (v) p.push_back(v);
                } catch (const std::exception&) {
                    throw UsageError(std::string("--") + what + ": bad partition '" + s + "'");
                }
            }
        }
        try {
            return partition_to_binary(p, n, k);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--") + what + ": " + e.what());
        }
    }

    Boundary boundary() const { return {word(lambda, "lambda"), word(mu, "mu"), word(nu, "nu")}; }

    std::shared_ptr<const PieceSet> piece_set() const {
        if (!pieces.empty() && pieces[0] == '@') {
            std::ifstream in(pieces.substr(1));
            if (!in) throw UsageError("cannot read " + pieces.substr(1));
            std::stringstream ss;
            ss << in.rdbuf();
            return std::make_shared<const PieceSet>(parse_piece_set(ss.str()));
        }
        auto id = parse_builtin_id(pieces);
        if (!id) throw UsageError("unknown piece set '" + pieces + "'");
        return std::make_shared<const PieceSet>(builtin_piece_set(*id));
    }

    Backend which() const { return backend == "groebner" ? Backend::groebner : Backend::oracle; }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

IdealKind parse_kind(const std::string& s) {
    if (s == "atomic") return IdealKind::atomic;
    if (s == "forbidding") return IdealKind::forbidding;
    if (s == "full") return IdealKind::full;
    if (s == "side_free" || s == "side-free") return IdealKind::side_free;
    throw UsageError("unknown ideal kind '" + s + "'");
}

// Basis of the requested ideal; side-free ideals use the elimination block order.
GroebnerBasis basis_for(const PuzzleIdeal& I, BuchbergerStats* st) {
    if (I.kind != IdealKind::side_free) return buchberger(I, MonomialOrder::lex(I.nvars()), st);
    const auto& keep = I.grid->boundary(*I.boundary.free_side());
    std::vector<int> elim;
    for (int v = 1; v <= I.nvars(); ++v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) elim.push_back(v);
    return buchberger(I, MonomialOrder::block_lex(elim, keep), st);
}

void check_gb_size(const Boundary& b) {
    int n = check_boundary(b).first;
    if (n > groebner_size_limit())
        throw BackendInfeasible("Groebner backend refuses n=" + std::to_string(n) + " (limit " +
                                std::to_string(groebner_size_limit()) + ", see PUZZLE_MAX_GB_N)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert puzzles as polynomial systems over F3"};
    app.require_subcommand(1);

    BoundaryArgs cargs, targs, sargs, gargs, kargs, rargs;

    auto* c_constant = app.add_subcommand("constant", "count tilings of one puzzle");
    cargs.add(c_constant);
    bool c_weights = false;
    c_constant->add_flag("--weights", c_weights, "list each tiling's equivariant weight (OmegaT)");

    auto* c_tilings = app.add_subcommand("tilings", "list tilings as ASCII pictures");
    targs.add(c_tilings);
    std::size_t t_limit = 100;
    bool t_labels = false, t_raw = false;
    c_tilings->add_option("--limit", t_limit, "at most this many tilings");
    c_tilings->add_flag("--labels", t_labels, "print every triangle's side values");
    c_tilings->add_flag("--raw", t_raw, "print interval assignments instead of pictures");

    auto* c_sweep = app.add_subcommand("sweep", "constants for every word on the omitted side");
    sargs.add(c_sweep);

    auto* c_gb = app.add_subcommand("gb", "Groebner basis of a puzzle ideal");
    gargs.add(c_gb, false);
    std::string g_kind = "full";
    bool g_certify = false, g_dump = false, g_stats = false;
    c_gb->add_option("--kind", g_kind, "atomic|forbidding|full|side_free (default: full, or side_free with a free side)");
    c_gb->add_flag("--certify", g_certify, "verify the basis afterwards");
    c_gb->add_flag("--dump-ideal", g_dump, "print the generators instead of the basis");
    c_gb->add_flag("--stats", g_stats, "print Buchberger statistics");

    auto* c_cert = app.add_subcommand("certify", "compute a basis and check every S-pair reduces to 0");
    kargs.add(c_cert, false);
    std::string k_kind = "full";
    c_cert->add_option("--kind", k_kind, "atomic|forbidding|full|side_free");

    auto* c_render = app.add_subcommand("render", "draw tilings");
    rargs.add(c_render);
    std::string r_format = "ascii", r_out;
    std::size_t r_limit = 100;
    bool r_labels = false;
    c_render->add_option("--format", r_format, "ascii|svg")->check(CLI::IsMember({"ascii", "svg"}));
    c_render->add_option("--out", r_out, "file prefix; writes <prefix>-<i>.<ext> per tiling (default: stdout)");
    c_render->add_option("--limit", r_limit, "at most this many tilings");
    c_render->add_flag("--labels", r_labels, "interval values");

    auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");
    bool s_verbose = false;
    c_self->add_flag("-v,--verbose", s_verbose, "notes for passing criteria too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*c_constant) {
            Boundary b = cargs.boundary();
            auto S = cargs.piece_set();
            bool equivariant = !S->equivariant_pieces().empty();
            ConstantResult r = constant(b, S, cargs.which(), equivariant);
            std::cout << r.count << '\n';
            if (!S->polygons.empty()) std::cout << "signed " << r.signed_count << '\n';
            if (equivariant) {
                WeightPoly sum;
                for (const auto& t : r.tilings) {
                    auto f = tiling_weight(t);
                    sum += WeightPoly::from_factors(f);
                    if (c_weights) std::cout << "tiling " << to_string(f) << '\n';
                }
                std::cout << "weight " << to_string(sum) << '\n';
            }
        } else if (*c_tilings || *c_render) {
            BoundaryArgs& a = *c_tilings ? targs : rargs;
            Boundary b = a.boundary();
            auto S = a.piece_set();
            std::size_t limit = *c_tilings ? t_limit : r_limit;
            ConstantResult r = constant(b, S, a.which(), true);
            RenderOptions o;
            o.labels = *c_tilings ? t_labels : r_labels;
            std::size_t shown = std::min(limit, r.tilings.size());
            if (*c_tilings) std::cout << r.count << " tilings\n";
            else if (r.tilings.empty()) std::cerr << "no tilings\n";
            for (std::size_t i = 0; i < shown; ++i) {
                const Tiling& t = r.tilings[i];
                if (*c_tilings) {
                    std::cout << "# tiling " << i + 1 << "  weight " << to_string(tiling_weight(t)) << '\n';
                    if (t_raw) {
                        for (std::size_t j = 0; j < t.values.size(); ++j) std::cout << (j ? "," : "") << int(t.values[j]);
                        std::cout << '\n';
                    } else {
                        std::cout << render_ascii(t, o);
                    }
                } else if (r_out.empty()) {
                    std::cout << render(t, r_format == "svg" ? RenderFormat::svg : RenderFormat::ascii, o);
                    if (r_format == "ascii" && i + 1 < shown) std::cout << '\n';
                } else {
                    std::string path = r_out + "-" + std::to_string(i + 1) + (r_format == "svg" ? ".svg" : ".txt");
                    write_file(path, render(t, r_format == "svg" ? RenderFormat::svg : RenderFormat::ascii, o));
                    std::cerr << "wrote " << path << '\n';
                }
            }
        } else if (*c_sweep) {
            Boundary b = sargs.boundary();
            if (!b.free_side()) throw UsageError("sweep needs exactly one of --lambda/--mu/--nu omitted");
            auto S = sargs.piece_set();
            std::cout << format_table(side_free_sweep(b, S, sargs.which()), *S, b);
        } else if (*c_gb || *c_cert) {
            BoundaryArgs& a = *c_gb ? gargs : kargs;
            std::string kind_s = *c_gb ? g_kind : k_kind;
            Boundary b = a.boundary();
            if (b.free_side() && kind_s == "full") kind_s = "side_free";
            check_gb_size(b);
            PuzzleIdeal I = build_ideal(b, a.piece_set(), parse_kind(kind_s));
            if (*c_gb && g_dump) {
                std::cout << dump_ideal(I);
                return 0;
            }
            BuchbergerStats st;
            GroebnerBasis gb = basis_for(I, &st);
            bool cert_ok = true;
            if (*c_gb) {
                for (const auto& p : gb.elements) std::cout << to_string(p) << '\n';
                if (g_stats)
                    std::cerr << "elements " << gb.elements.size() << " pairs " << st.pairs_reduced << " field pairs "
                              << st.field_pairs << " zero " << st.zero_reductions << '\n';
            }
            if (*c_cert || g_certify) {
                Certificate c = certify(gb, I.generators());
                cert_ok = c.ok;
                std::ostream& os = *c_cert ? std::cout : std::cerr;
                os << (c.ok ? "certified" : "NOT certified") << ": " << gb.elements.size() << " elements, " << c.pairs
                   << " S-pairs, " << c.field_pairs << " field pairs, " << c.inputs << " inputs";
                if (!c.ok) os << "; " << c.detail;
                os << '\n';
            }
            return cert_ok ? 0 : kInternal;
        } else if (*c_self) {
            AcceptanceOptions o;
            o.verbose = s_verbose;
            auto res = run_acceptance(std::cout, o);
            bool all = std::all_of(res.begin(), res.end(), [](const CriterionResult& r) { return r.pass; });
            return all ? 0 : kInternal;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BackendInfeasible& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotRefinable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedPieceSet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        // BadBoundary, DoesNotFit, malformed piece sets.
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return 0;
}
