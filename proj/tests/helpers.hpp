#pragma once

#include <random>
#include <string>
#include <vector>

#include "puzzle/gf3.hpp"

namespace testutil {

inline puzzle::PolyF3 random_poly(std::mt19937& rng, int nvars, int terms) {
    std::vector<puzzle::RawTerm> raw;
    std::uniform_int_distribution<int> var(1, nvars), exp(0, 2), coeff(1, 2), len(0, 3);
    for (int t = 0; t < terms; ++t) {
        puzzle::RawTerm r{coeff(rng), {}};
        for (int f = len(rng); f > 0; --f) r.factors.push_back({var(rng), exp(rng)});
        raw.push_back(r);
    }
    return puzzle::poly_normalize(raw);
}

inline std::vector<std::uint8_t> random_point(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> d(0, 2);
    std::vector<std::uint8_t> p(nvars);
    for (auto& v : p) v = static_cast<std::uint8_t>(d(rng));
    return p;
}

inline std::vector<std::string> words(int n, int k) {
    std::vector<std::string> out;
    std::string w(n - k, '0');
    w += std::string(k, '1');
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace testutil
