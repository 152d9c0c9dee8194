#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "puzzle/golden.hpp"
#include "puzzle/structure.hpp"

using namespace puzzle;

TEST_CASE("n=6 reference instance") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omega0));
    for (Backend be : {Backend::groebner, Backend::oracle}) {
        ConstantResult r = constant(golden::n6_boundary(), S, be, true);
        CHECK(r.count == 2);
        std::vector<Assignment> got;
        for (const auto& t : r.tilings) got.push_back(t.values);
        std::sort(got.begin(), got.end());
        auto want = golden::n6_points();
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("recovered pieces cover every triangle once and use only set pieces") {
    for (BuiltinId id : all_builtins()) {
        auto S = std::make_shared<const PieceSet>(builtin_piece_set(id));
        for (const auto& nu : testutil::words(4, 2)) {
            ConstantResult r = constant(Boundary{"0101", "0011", nu}, S, Backend::oracle, true);
            for (const auto& t : r.tilings) {
                std::vector<int> cover(t.grid->triangles().size(), 0);
                for (const auto& rp : t.recovered)
                    for (int k : rp.tris) ++cover[k];
                for (int c : cover) CHECK(c == 1);
                Tiling again = point_to_tiling(t.values, t.grid, t.pieces);
                CHECK(again.values == t.values);
                CHECK(again.recovered.size() == t.recovered.size());
            }
        }
    }
}

TEST_CASE("invalid points") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omega0));
    auto g = std::make_shared<const TriangleGrid>(1);
    CHECK(point_to_tiling({0, 0, 0}, g, S).recovered.size() == 1);
    CHECK_THROWS_AS(point_to_tiling({0, 1, 2}, g, S), InvalidPoint);
    CHECK_THROWS_AS(point_to_tiling({0, 0}, g, S), InvalidPoint);
}

TEST_CASE("backends agree, n <= 4") {
    for (BuiltinId id : all_builtins()) {
        auto S = std::make_shared<const PieceSet>(builtin_piece_set(id));
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                auto W = testutil::words(n, k);
                for (const auto& l : W)
                    for (const auto& m : W)
                        for (const auto& nu : W) {
                            Boundary b{l, m, nu};
                            CHECK(constant(b, S, Backend::groebner).count == constant(b, S, Backend::oracle).count);
                        }
            }
    }
}

TEST_CASE("side-free sweeps agree across backends") {
    for (BuiltinId id : all_builtins()) {
        auto S = std::make_shared<const PieceSet>(builtin_piece_set(id));
        for (const auto& l : testutil::words(4, 2)) {
            Boundary b{l, "0101", std::nullopt};
            CHECK(side_free_sweep(b, S, Backend::groebner) == side_free_sweep(b, S, Backend::oracle));
        }
        Boundary left{std::nullopt, "011", "110"};
        CHECK(side_free_sweep(left, S, Backend::groebner) == side_free_sweep(left, S, Backend::oracle));
    }
}

TEST_CASE("size guard") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omega0));
    std::string w = "010101010";
    CHECK_THROWS_AS(constant(Boundary{w, w, "101010100"}, S, Backend::groebner), BackendInfeasible);
}

TEST_CASE("K-theory sign") {
    auto A = builtin_piece_set(BuiltinId::omegaA);
    CHECK(k_sign(A, "0011", "0011", "0011") == 1);
    CHECK(k_sign(A, "0011", "0011", "0101") == -1);
    CHECK(k_sign(BuiltinId::omega0, "0011", "0011", "0101") == 1);
    // Degree-zero constants are never negated.
    for (const auto& l : testutil::words(4, 2))
        for (const auto& m : testutil::words(4, 2))
            for (const auto& nu : testutil::words(4, 2))
                if (word_weight(nu) == word_weight(l) + word_weight(m)) CHECK(k_sign(A, l, m, nu) == 1);
}

TEST_CASE("drag rule") {
    TriangleGrid g(6);
    CHECK(drag(g, TriRef{true, 5, 5}) == WeightFactor{6, 5});
    CHECK(drag(g, TriRef{true, 2, 1}) == WeightFactor{5, 1});
    CHECK(drag(g, TriRef{true, 6, 3}) == WeightFactor{3, 3});
    CHECK_THROWS(drag(g, TriRef{false, 2, 1}));
}

TEST_CASE("weight polynomials") {
    WeightPoly w = WeightPoly::from_factors({{5, 1}, {6, 5}});
    CHECK(to_string(w) == "+1*y1*y5 -1*y1*y6 -1*y5^2 +1*y5*y6");
    CHECK(to_string(WeightPoly(3)) == "+3");
    CHECK(to_string(WeightPoly()) == "0");
    CHECK(WeightPoly::from_factors({{2, 2}}).is_zero());
    CHECK((w + w * WeightPoly(-1)).is_zero());
    CHECK(to_string(std::vector<WeightFactor>{{5, 1}, {6, 5}}) == "(y5-y1)(y6-y5)");
}

TEST_CASE("reference equivariant tiling") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaT));
    ConstantResult r = constant(golden::equivariant_boundary(), S, Backend::oracle, true);
    int found = 0;
    for (const auto& t : r.tilings)
        if (golden::figure_pieces(t) == golden::equivariant_panel()) {
            ++found;
            CHECK(tiling_weight(t) == std::vector<WeightFactor>{{5, 1}, {6, 5}});
        }
    CHECK(found == 1);
}

TEST_CASE("equivariant constants at degree zero are LR coefficients") {
    for (const auto& l : testutil::words(4, 2))
        for (const auto& m : testutil::words(4, 2))
            for (const auto& nu : testutil::words(4, 2)) {
                if (word_weight(nu) != word_weight(l) + word_weight(m)) continue;
                auto c = lr_coefficient_tableaux(binary_to_partition(l), binary_to_partition(m), binary_to_partition(nu));
                CHECK(equivariant_constant({l, m, nu}) == WeightPoly(static_cast<long long>(c)));
            }
}

TEST_CASE("equivariant constants agree across backends") {
    for (const auto& nu : testutil::words(4, 2)) {
        Boundary b{"0101", "0101", nu};
        CHECK(equivariant_constant(b, Backend::groebner) == equivariant_constant(b, Backend::oracle));
    }
}

TEST_CASE("table format") {
    auto S = builtin_piece_set(BuiltinId::omegaA);
    Boundary b{"0101", "0011", std::nullopt};
    WordCounts c = {{"0110", 2}, {"1001", 1}};
    CHECK(format_table(c, S, b) == "nu=0110 count=2 signed=-2\nnu=1001 count=1 signed=-1\n");
    Boundary left{std::nullopt, "0011", "0101"};
    CHECK(format_table({{"0011", 1}}, S, left).rfind("lambda=0011 ", 0) == 0);
}
