#include <doctest.h>

#include "helpers.hpp"
#include "puzzle/golden.hpp"
#include "puzzle/oracle.hpp"

using namespace puzzle;

TEST_CASE("omega0 tiling counts equal LR coefficients, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            auto W = testutil::words(n, k);
            for (const auto& l : W)
                for (const auto& m : W)
                    for (const auto& nu : W) {
                        auto lr = lr_coefficient_tableaux(binary_to_partition(l), binary_to_partition(m),
                                                          binary_to_partition(nu));
                        CAPTURE(l);
                        CAPTURE(m);
                        CAPTURE(nu);
                        REQUIRE(brute_force_tilings(Boundary{l, m, nu}, builtin_piece_set(BuiltinId::omega0)).size() == lr);
                    }
        }
}

TEST_CASE("search and transfer counts agree") {
    for (BuiltinId id : all_builtins()) {
        PieceSet s = builtin_piece_set(id);
        for (const auto& l : testutil::words(4, 2))
            for (const auto& nu : testutil::words(4, 2)) {
                Boundary b{l, "0101", nu};
                CHECK(brute_force_tilings(b, s).size() == count_tilings(b, s));
            }
    }
}

TEST_CASE("serial and parallel transfer agree") {
    for (BuiltinId id : all_builtins()) {
        auto S = std::make_shared<const PieceSet>(builtin_piece_set(id));
        OraclePlan p(Boundary{"01011", "00111", std::nullopt}, S);
        CHECK(p.count_serial() == p.count_parallel());
    }
    std::string l = partition_to_binary(golden::n16_lambda(), 16, 8), m = partition_to_binary(golden::n16_mu(), 16, 8);
    Boundary b{l, m, std::nullopt};
    auto s = builtin_piece_set(BuiltinId::omega0);
    CHECK(count_by_free_word(b, s) == count_by_free_word_serial(b, s));
}

TEST_CASE("commutativity, n <= 4") {
    auto s = builtin_piece_set(BuiltinId::omega0);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            auto W = testutil::words(n, k);
            for (const auto& l : W)
                for (const auto& m : W)
                    for (const auto& nu : W) CHECK(count_tilings({l, m, nu}, s) == count_tilings({m, l, nu}, s));
        }
}

TEST_CASE("free-side counts partition the side-free tilings") {
    for (BuiltinId id : all_builtins()) {
        auto s = builtin_piece_set(id);
        for (Side side : {Side::left, Side::right, Side::bottom}) {
            Boundary b{"0101", "0011", "0110"};
            (side == Side::left ? b.lambda : side == Side::right ? b.mu : b.nu) = std::nullopt;
            auto counts = count_by_free_word(b, s);
            std::uint64_t total = 0;
            for (const auto& [w, c] : counts) {
                Boundary f = b;
                (side == Side::left ? f.lambda : side == Side::right ? f.mu : f.nu) = w;
                CHECK(count_tilings(f, s) == c);
                total += c;
            }
            CHECK(total == brute_force_tilings(b, s).size());
        }
    }
}

TEST_CASE("plan accepts exactly the enumerated tilings") {
    auto S = std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omegaC));
    OraclePlan p(Boundary{"0011", "0101", "1100"}, S);
    auto all = p.enumerate(1000);
    for (const auto& a : all) CHECK(p.accepts(a));
    if (!all.empty()) {
        auto bad = all[0];
        bad[0] = static_cast<Val>((bad[0] + 1) % 3);
        CHECK_FALSE(p.accepts(bad));
    }
    CHECK(p.enumerate(1).size() <= 1);
}

TEST_CASE("n=16 sweep") {
    std::string l = partition_to_binary(golden::n16_lambda(), 16, 8), m = partition_to_binary(golden::n16_mu(), 16, 8);
    auto counts = count_by_free_word(Boundary{l, m, std::nullopt}, builtin_piece_set(BuiltinId::omega0));
    std::vector<std::string> got;
    for (const auto& [w, c] : counts)
        if (c) got.push_back(w);
    auto want = golden::n16_words();
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(counts[golden::n16_five_word()] == 5);
}

TEST_CASE("LR coefficients") {
    CHECK(lr_coefficient_tableaux({1}, {1}, {2}) == 1);
    CHECK(lr_coefficient_tableaux({1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient_tableaux({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(lr_coefficient_tableaux({2, 1}, {2, 1}, {4, 2}) == 1);
    CHECK(lr_coefficient_tableaux({1}, {1}, {3}) == 0);
}

TEST_CASE("Schur polynomials") {
    IntPoly s31 = schur_polynomial({3, 1}, 2);
    CHECK(s31 == IntPoly{{{3, 1}, 1}, {{2, 2}, 1}, {{1, 3}, 1}});
    auto prod = schur_multiply({1}, {1}, 2);
    CHECK(prod == std::map<Partition, long long>{{{2}, 1}, {{1, 1}, 1}});
}

TEST_CASE("Schur products agree with LR coefficients") {
    std::vector<Partition> small = {{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    for (const auto& l : small)
        for (const auto& m : small) {
            int total = partition_size(l) + partition_size(m);
            auto prod = schur_multiply(l, m, total);
            for (const auto& [nu, c] : prod) CHECK(static_cast<std::uint64_t>(c) == lr_coefficient_tableaux(l, m, nu));
        }
}
